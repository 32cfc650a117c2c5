"""Minimal Riesz energies on the unit sphere and their discrete N-derivatives."""

from .asymptotics import (ddu_leading, ddv_bounds_prop1, ddv_upper_pointwise, ddv_upper_prop2,
                          log_energy_expansion, tilde_u_leading, u_band, u_from_v, u_leading,
                          v_from_u)
from .concavity import (MagicCatalog, convexity_sets, magic_numbers, monotonicity_check_N,
                        monotonicity_check_s, second_diff, set_stats, signed_indicator)
from .constants import C_2, C_LOG, W_LOG, w_s
from .core import (average_pair_energy, convert_energy, energy_gradient, master_identity_residual,
                   pair_energy, point_energies, point_energy)
from .errors import (BracketError, DomainError, FormatError, NumericError, UnsupportedRangeError,
                     WindowError)
from .exact import (NamedShape, exact_ddv, exact_ddv_rational, exact_v, find_critical_s,
                    rational_positivity_certificate, realize, s_dagger, square_pyramid_height)
from .io import read_configuration, read_energy_table, write_configuration, write_energy_table
from .minimize import MinimizeOptions, local_minimize, multi_start, scan
from .nets import lambert_lift, net_energy_curve, sobol_points
from .report import embedded_catalog, validate
from .tables import EnergyTable
from .zeta import hurwitz_zeta, riemann_zeta, zeta_hexagonal

__version__ = "0.1.0"
