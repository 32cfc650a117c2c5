import math
import warnings

import numpy as np
import pytest
from hypothesis import given, strategies as st

from rieszsphere.errors import FormatError
from rieszsphere.exact import NamedShape, realize
from rieszsphere.io import (read_configuration, read_energy_table, write_configuration,
                           write_energy_table)
from rieszsphere.tables import EnergyTable


@given(st.dictionaries(st.integers(2, 500), st.floats(-1e6, 1e6, allow_nan=False), min_size=1),
       st.sampled_from([-1.0, 0.0, 0.5, 3.0]))
def test_table_round_trip_is_bit_stable(tmp_path_factory, rows, s):
    path = tmp_path_factory.mktemp("t") / "t.csv"
    t = EnergyTable.from_values(s, rows, "computed(1,8)")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        write_energy_table(t, path)
        back = read_energy_table(path)
    assert back.s == s
    assert back.rows == t.rows


def test_conventional_header_is_converted(tmp_path):
    p = tmp_path / "c.csv"
    p.write_text("N,s,conventional_energy,provenance\n2,1,0.5,lit\n")
    assert read_energy_table(p).v(2) == -0.5


def test_missing_provenance_defaults(tmp_path):
    p = tmp_path / "m.csv"
    p.write_text("N,s,energy,provenance\n2,0,-0.69,\n3,0,-0.5\n")
    t = read_energy_table(p)
    assert t.rows[2][1] == "external" and t.rows[3][1] == "external"


@pytest.mark.parametrize("text", ["n,s,energy,provenance\n2,0,1,x\n", "N,s,energy,provenance\n2,0,abc,x\n",
                                  "N,s,energy,provenance\n2,0,1,x\n3,1,1,x\n", "",
                                  "N,s,energy,provenance\n2,0,1,x\n2,0,1,x\n"])
def test_malformed_tables(tmp_path, text):
    p = tmp_path / "bad.csv"
    p.write_text(text)
    with pytest.raises(FormatError):
        read_energy_table(p)


def test_gaps_warn(tmp_path):
    p = tmp_path / "g.csv"
    p.write_text("N,s,energy,provenance\n2,0,-1,x\n4,0,-0.5,x\n")
    with pytest.warns(UserWarning):
        read_energy_table(p)


def test_configuration_round_trip(tmp_path):
    x = realize(NamedShape("octahedron"))
    p = tmp_path / "o.csv"
    write_configuration(x, p)
    assert np.array_equal(read_configuration(p), x)
    ico = realize(NamedShape("icosahedron"))
    write_configuration(ico, p)
    back = read_configuration(p)
    assert np.allclose(back, ico, rtol=0, atol=2e-16)


def test_configuration_norm_tolerance(tmp_path):
    p = tmp_path / "c.csv"
    p.write_text(f"1\n{1 + 1e-9!r},0,0\n")
    assert read_configuration(p).tolist() == [[1.0, 0.0, 0.0]]
    p.write_text("1\n1.01,0,0\n")
    with pytest.raises(FormatError):
        read_configuration(p)
    p.write_text("2\n1,0,0\n")
    with pytest.raises(FormatError):
        read_configuration(p)


def test_norm_off_by_one_in_a_million_is_rejected(tmp_path):
    # the tolerance is 1e-8 on the norm; 1e-6 is well outside it
    p = tmp_path / "c.csv"
    p.write_text(f"1\n{1 + 1e-6!r},0,0\n")
    with pytest.raises(FormatError):
        read_configuration(p)
