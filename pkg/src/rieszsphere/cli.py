"""Command-line workbench.

Exit codes: 0 clean, 1 validation flags, 2 usage or input errors, 3 numeric
failures. Every command writes CSV to ``--out`` when given and otherwise a
plot-ready two-column stream (or labelled values) to standard output.
Defaults can be overridden by a ``key=value`` file passed via ``--config``;
keys are option names with dashes or underscores (e.g. ``restarts=200``).
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
import warnings

from .asymptotics import (c_s_conjectured, ddu_leading, ddv_bounds_prop1, ddv_upper_pointwise,
                          ddv_upper_prop2, monotonicity_complement, tilde_u_leading,
                          u_from_v, u_leading_terms)
from .concavity import convexity_sets, second_diff
from .constants import W_LOG, w_s
from .errors import BracketError, NumericError
from .exact import exact_ddv, exact_ddv_rational, exact_v, find_critical_s
from .io import (read_configuration, read_energy_table, two_column, write_configuration,
                 write_energy_table)
from .minimize import MinimizeOptions, multi_start, scan
from .nets import net_energy_curve
from .report import embedded_catalog, validate
from .tables import EnergyTable

EXIT_OK, EXIT_FLAGS, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

CRITICAL_TARGETS = {"s1_3": "s1_of_3", "s1_4": "s1_of_4", "s1_6": "s1_of_6",
                    "s_dagger": "s_dagger"}


class _UsageError(Exception):
    pass


def _read_config_file(path: str) -> dict[str, str]:
    out = {}
    try:
        lines = open(path).read().splitlines()
    except OSError as exc:
        raise _UsageError(f"cannot read config file: {exc}") from None
    for i, ln in enumerate(lines, start=1):
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        if "=" not in ln:
            raise _UsageError(f"{path}:{i}: expected key=value")
        k, v = ln.split("=", 1)
        out[k.strip().replace("-", "_")] = v.strip()
    return out


def _write_rows(path: str, header: list[str], rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def _emit(args, header: list[str], rows, out) -> None:
    """CSV to --out, else two columns (first and last field) to stdout."""
    rows = [[repr(v) if isinstance(v, float) else v for v in r] for r in rows]
    if getattr(args, "out", None):
        _write_rows(args.out, header, rows)
    else:
        out.write("".join(f"{r[0]} {r[-1]}\n" for r in rows))


def _table_rows(table: EnergyTable):
    return [(n, table.v(n)) for n in table.ns()]


def _opts(args) -> MinimizeOptions:
    return MinimizeOptions(restarts=args.restarts, seed=args.seed, grad_tol=args.tol)


# ---------------------------------------------------------------- commands


def cmd_minimize(args, out) -> int:
    best, pool = multi_start(args.s, args.n, _opts(args))
    if args.out:
        write_configuration(best.config, args.out)
    table = EnergyTable(args.s, {args.n: (best.energy, f"computed({args.seed},"
                                          f"{_opts(args).restart_budget(args.n)})")})
    if args.energy_out:
        write_energy_table(table, args.energy_out)
    out.write(two_column([(args.n, best.energy)]))
    if not best.converged:
        print(f"warning: best restart ended with status {best.status}, "
              f"|grad| = {best.grad_norm:.3g}", file=sys.stderr)
    return EXIT_OK


def cmd_scan(args, out) -> int:
    table, _ = scan(args.s, args.n_min, args.n_max, _opts(args))
    if args.out:
        write_energy_table(table, args.out)
    else:
        out.write(two_column(_table_rows(table)))
    failed = [n for n in table.ns() if not math.isfinite(table.v(n))]
    if failed:
        print(f"error: no converged restart for N = {failed}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def cmd_exact(args, out) -> int:
    v = exact_v(args.n, args.s)
    out.write(f"v {v.value!r} {v.window}\n")
    try:
        d = exact_ddv(args.n, args.s)
    except ValueError as exc:
        out.write(f"ddv unavailable: {exc}\n")
        return EXIT_OK
    line = f"ddv {d.value!r} {d.window}"
    if args.n in (3, 4, 5) and float(args.s).is_integer():
        try:
            line += f" = {exact_ddv_rational(args.n, int(args.s))}"
        except (ValueError, TypeError):
            pass
    out.write(line + "\n")
    return EXIT_OK


def cmd_analyze(args, out) -> int:
    table = read_energy_table(args.table)
    rep = convexity_sets(table, args.tol)
    cat = embedded_catalog().corrected
    s_key = int(table.s) if float(table.s).is_integer() and int(table.s) in cat.sets() else None
    rows = []
    for n, d in sorted(rep.ddv.items()):
        cls = "C+" if n in rep.c_plus else "C-" if n in rep.c_minus else "C0"
        known = cat.contains(s_key, n) if s_key is not None else None
        rows.append([n, cls, "" if known is None else int(known), d])
    if args.out:
        _emit(args, ["N", "class", "catalog_c_plus", "ddv"], rows, out)
    else:
        out.write(two_column([(r[0], r[-1]) for r in rows]))
    print(f"C+ = {sorted(rep.c_plus)}", file=sys.stderr)
    return EXIT_OK


def cmd_validate(args, out) -> int:
    tables = [read_energy_table(p) for p in [args.table] + list(args.companion_s or [])]
    report = validate(tables, args.tol)
    rows = report.rows()
    if args.out:
        _write_rows(args.out, ["s", "N", "verdict"], [[repr(float(s)), n, v] for s, n, v in rows])
    for s, n, verdict in rows:
        out.write(f"s={s!r} N={n} {verdict}\n")
    for t in report.tables:
        if t.catalog is not None:
            c = t.catalog
            out.write(f"s={t.s!r} catalog: agree={sorted(c.agree)} only_table={sorted(c.only_table)} "
                      f"only_catalog={sorted(c.only_catalog)}\n")
    if report.consistent:
        out.write("consistent\n")
        return EXIT_OK
    return EXIT_FLAGS if report.has_data_errors else EXIT_OK


def cmd_bounds(args, out) -> int:
    table = read_energy_table(args.table)
    n, s = args.n, args.s
    if s != table.s:
        raise _UsageError(f"--s {s} does not match the table's s = {table.s}")
    rows = []
    observed = None
    if all(m in table.rows for m in (n - 1, n, n + 1)):
        observed = second_diff(table, n)
        rows.append(["observed_ddv", observed])
    if n in table.rows:
        b = ddv_bounds_prop1(s, n, table.v(n), observed)
        rows += [["two_sided_lower", b.lower], ["two_sided_upper", b.upper]]
        if b.satisfied is not None:
            rows.append(["two_sided_contains", int(b.satisfied)])
    if n - 1 in table.rows:
        up = ddv_upper_prop2(s, n, table.v(n - 1))
        rows.append(["upper_from_previous", up])
        if observed is not None:
            rows.append(["upper_from_previous_holds", int(observed <= up)])
    if n + 1 in table.rows:
        rows.append(["lower_v_from_next", monotonicity_complement(s, n, table.v(n + 1))])
    if args.configuration:
        rows.append(["upper_pointwise", ddv_upper_pointwise(s, read_configuration(args.configuration))])
    if not rows:
        raise _UsageError(f"table has no rows near N={n}")
    _emit(args, ["quantity", "value"], rows, out)
    return EXIT_OK


def cmd_asympt(args, out) -> int:
    s, n = args.s, args.n
    rows = []
    if s == 0:
        rows.append(["W_log", W_LOG])
    elif s != 2:
        rows.append(["W_s", w_s(s)])
    if -2 < s < 2:
        val, with_cs = u_leading_terms(s, n)
        rows += [["u_leading", val], ["u_leading_has_C_s", int(with_cs)], ["ddu_leading", ddu_leading(s, n)]]
    if s > 0:
        cs = c_s_conjectured(s)
        if isinstance(cs, float):
            rows.append(["C_s", cs])
        else:
            rows.append(["C_s_sign", cs.sign])
    if 2 <= s < 4 and args.u is not None:
        rows.append(["tilde_u", tilde_u_leading(s, n, args.u)])
    if args.v is not None and s != 2:
        rows.append(["u", u_from_v(s, n, args.v)])
    _emit(args, ["quantity", "value"], rows, out)
    return EXIT_OK


def cmd_nets(args, out) -> int:
    table = net_energy_curve(args.s, args.count, args.skip_zero)
    if args.out:
        write_energy_table(table, args.out)
    else:
        out.write(two_column(_table_rows(table)))
    return EXIT_OK


def cmd_critical(args, out) -> int:
    val = find_critical_s(CRITICAL_TARGETS[args.which], args.tol)
    _emit(args, ["which", "s"], [[args.which, val]], out)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rieszsphere", description=__doc__.splitlines()[0])
    p.add_argument("--config", help="key=value file of option defaults")
    sub = p.add_subparsers(dest="command", required=True)

    def search_opts(q):
        q.add_argument("--s", type=float, required=True)
        q.add_argument("--restarts", type=int, default=None)
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--tol", type=float, default=1e-9)
        q.add_argument("--out")

    q = sub.add_parser("minimize", help="multi-start minimization at one N")
    q.add_argument("--n", type=int, required=True)
    search_opts(q)
    q.add_argument("--energy-out")
    q.set_defaults(func=cmd_minimize)

    q = sub.add_parser("scan", help="minimize over a range of N")
    q.add_argument("--n-min", type=int, required=True)
    q.add_argument("--n-max", type=int, required=True)
    search_opts(q)
    q.set_defaults(func=cmd_scan)

    q = sub.add_parser("exact", help="closed-form v and second difference")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--s", type=float, required=True)
    q.set_defaults(func=cmd_exact)

    q = sub.add_parser("analyze", help="second differences and convexity sets of a table")
    q.add_argument("--table", required=True)
    q.add_argument("--tol", type=float, default=0.0)
    q.add_argument("--out")
    q.set_defaults(func=cmd_analyze)

    q = sub.add_parser("validate", help="necessary-condition checks; exit 1 on flags")
    q.add_argument("--table", required=True)
    q.add_argument("--companion-s", nargs="*", default=[])
    q.add_argument("--tol", type=float, default=0.0)
    q.add_argument("--out")
    q.set_defaults(func=cmd_validate)

    q = sub.add_parser("bounds", help="second-difference bounds at N for s < 0")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--s", type=float, required=True)
    q.add_argument("--table", required=True)
    q.add_argument("--configuration", help="optimal configuration for the pointwise bound")
    q.add_argument("--out")
    q.set_defaults(func=cmd_bounds)

    q = sub.add_parser("asympt", help="continuum energy and large-N leading terms")
    q.add_argument("--s", type=float, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--v", type=float, help="a v(N) value to convert to u")
    q.add_argument("--u", type=float, help="a u(N) value to re-adjust (2 <= s < 4)")
    q.add_argument("--out")
    q.set_defaults(func=cmd_asympt)

    q = sub.add_parser("nets", help="energy curve of the lifted Sobol' net")
    q.add_argument("--count", type=int, required=True)
    q.add_argument("--s", type=float, required=True)
    q.add_argument("--skip-zero", action="store_true")
    q.add_argument("--out")
    q.set_defaults(func=cmd_nets)

    q = sub.add_parser("critical", help="critical exponents")
    q.add_argument("--which", choices=sorted(CRITICAL_TARGETS), required=True)
    q.add_argument("--tol", type=float, default=1e-10)
    q.add_argument("--out")
    q.set_defaults(func=cmd_critical)
    return p


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> None:
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    if not known.config:
        return
    values = _read_config_file(known.config)
    sub_action = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    known_keys = set()
    for sp in sub_action.choices.values():
        dests = {a.dest: a for a in sp._actions}
        known_keys |= set(dests)
        sp.set_defaults(**{k: (dests[k].type(v) if dests[k].type else v)
                           for k, v in values.items() if k in dests})
    unknown = set(values) - known_keys
    if unknown:
        raise _UsageError(f"unknown config keys: {sorted(unknown)}")


def main(argv: list[str] | None = None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    parser = build_parser()
    try:
        _apply_config(parser, argv)
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (_UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            return args.func(args, out)
    except (NumericError, BracketError, ArithmeticError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (_UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
