"""Command-line interface.

Exit status: 0 on success or when the checked property holds, 1 when a
checked property fails, 2 on bad input (unreadable file, malformed format,
invalid pattern or cut).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

from . import corpus as corpus_mod
from .complex import SearchBudgetExceeded, are_isomorphic
from .construction import DEFAULT_MIRROR_LIMIT, MirrorLimitExceeded, double, lift_pattern
from .dyadic import Dyadic
from .flag import certify_haken_cell_dual, charney_davis, flag_report
from .homology import homology, is_generalized_homology_sphere
from .io import FormatError, format_complex, format_pattern, read_complex, read_ledger, read_pattern
from .pattern import (
    CHI_ORB_METHODS,
    PatternError,
    cell_from_flag_sphere,
    nerve,
    orbifold_euler,
    orbifold_euler_strata,
    usefulness_report,
)
from .surgery import CutError, certify_hierarchy, cut_open_with_record, run_prehierarchy, verify_cut_invariance

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Table:
    """Rows of values rendered either as ``key: value`` text or as TSV with a header."""

    def __init__(self, columns: Sequence[str]):
        self.columns = list(columns)
        self.rows: List[List[str]] = []
        self.footer: List[str] = []

    def add(self, *values) -> None:
        self.rows.append([_fmt(v) for v in values])

    def render(self, fmt: str) -> str:
        if fmt == "tsv":
            lines = ["\t".join(self.columns)] + ["\t".join(r) for r in self.rows]
            return "\n".join(lines) + "\n"
        if len(self.rows) == 1 and not self.footer:
            return "".join(f"{c}: {v}\n" for c, v in zip(self.columns, self.rows[0]))
        widths = [max([len(c)] + [len(r[i]) for r in self.rows]) for i, c in enumerate(self.columns)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(self.columns, widths)).rstrip()]
        lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in self.rows]
        return "\n".join(lines + self.footer) + "\n"


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    return str(v)


def _emit(args, table: Table) -> None:
    sys.stdout.write(table.render(args.format))


def _write_or_print(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dim(K, given: Optional[int]) -> int:
    return K.dimension + 1 if given is None else given


# -- subcommands -------------------------------------------------------------------


def cmd_homology(args) -> int:
    K = read_complex(args.complex)
    h = homology(K)
    t = Table(["degree", "betti", "torsion"])
    for d, b in enumerate(h.betti):
        t.add(d, b, ",".join(map(str, h.torsion[d])) or "-")
    if args.format == "tsv":
        _emit(args, t)
    else:
        sys.stdout.write(str(h) + "\n")
    return EXIT_OK


def cmd_is_ghs(args) -> int:
    K = read_complex(args.complex)
    n = _dim(K, args.dim)
    ok = is_generalized_homology_sphere(K, n)
    t = Table(["ghs", "sphere_dim"])
    t.add(ok, n - 1)
    _emit(args, t)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_flag_check(args) -> int:
    K = read_complex(args.complex)
    rep = flag_report(K)
    lam = charney_davis(K)
    if args.format == "tsv":
        t = Table(["flag", "lambda", "minimal_non_faces"])
        t.add(rep.is_flag, lam, ";".join(" ".join(map(str, s)) for s in rep.minimal_non_faces) or "-")
        _emit(args, t)
    else:
        sys.stdout.write(f"flag: {_fmt(rep.is_flag)}, λ = {lam}\n")
        for s in rep.minimal_non_faces:
            sys.stdout.write(f"minimal non-face: {' '.join(map(str, s))}\n")
    return EXIT_OK if rep.is_flag else EXIT_FAIL


def cmd_charney_davis(args) -> int:
    K = read_complex(args.complex)
    t = Table(["lambda", "f_vector"])
    t.add(charney_davis(K), ",".join(map(str, K.f_vector)))
    _emit(args, t)
    return EXIT_OK


def cmd_certify_cell(args) -> int:
    K = read_complex(args.complex)
    cert = certify_haken_cell_dual(K, _dim(K, args.dim))
    t = Table(["ghs", "flag", "haken_cell_dual", "lambda"])
    t.add(cert.ghs, cert.flag, cert.haken, charney_davis(K))
    _emit(args, t)
    return EXIT_OK if cert.haken else EXIT_FAIL


def cmd_nerve(args) -> int:
    P = read_pattern(args.pattern)
    N = nerve(P)
    if args.out:
        Path(args.out).write_text(format_complex(N.complex), encoding="utf-8")
    t = Table(["vertex", "facet"])
    for i, name in enumerate(N.facet_ids):
        t.add(i, name)
    _emit(args, t)
    if not args.out and args.format == "text":
        sys.stdout.write(format_complex(N.complex))
    return EXIT_OK


def cmd_chi_orb(args) -> int:
    P = read_pattern(args.pattern)
    methods = list(CHI_ORB_METHODS) if args.method == "all" else [args.method]
    values = {m: orbifold_euler(P, m) for m in methods}
    t = Table(["method", "chi_orb"])
    for m, v in values.items():
        t.add(m, v)
    _emit(args, t)
    return EXIT_OK if len(set(values.values())) == 1 else EXIT_FAIL


def cmd_useful(args) -> int:
    P = read_pattern(args.pattern)
    rep = usefulness_report(P)
    t = Table(["facet_h1_trivial", "pairwise_connected", "triple_condition", "homology_useful", "decided"])
    t.add(rep.facet_h1_trivial, rep.pairwise_connected, rep.triple_condition, rep.homology_useful, rep.decided)
    _emit(args, t)
    if args.format == "text":
        for f in rep.failures:
            sys.stdout.write(f"failure: {f}\n")
    return EXIT_OK if rep.homology_useful else EXIT_FAIL


def cmd_cell_from_sphere(args) -> int:
    L = read_complex(args.complex)
    P = cell_from_flag_sphere(L, args.dim)
    _write_or_print(format_pattern(P), args.out)
    if args.check:
        ok = are_isomorphic(nerve(P).complex, L, node_budget=args.node_budget)
        sys.stderr.write(f"nerve isomorphic to input: {_fmt(ok)}\n")
        return EXIT_OK if ok else EXIT_FAIL
    return EXIT_OK


def _mirrors(args) -> Optional[List[str]]:
    return [m for m in args.mirrors.split(",") if m] if args.mirrors else None


def cmd_double(args) -> int:
    P = read_pattern(args.pattern)
    D = double(P, _mirrors(args), limit=args.mirror_cap)
    if D.mirrors == P.facet_ids:
        text = format_complex(D.complex)
    else:
        text = format_pattern(lift_pattern(P, D))
    _write_or_print(text, args.out)
    return EXIT_OK


def cmd_verify_double(args) -> int:
    P = read_pattern(args.pattern)
    mirrors = _mirrors(args)
    D = double(P, mirrors, limit=args.mirror_cap)
    m = len(D.mirrors)
    chi_d = D.complex.euler_characteristic()
    expected = orbifold_euler_strata(P).shift(m)
    # with every facet mirrored the double is closed and its chi_orb is chi itself
    lifted = None if D.mirrors == P.facet_ids else orbifold_euler_strata(lift_pattern(P, D))
    ok = (Dyadic(chi_d) if lifted is None else lifted) == expected
    t = Table(["mirrors", "chi_double", "chi_orb_lifted", "two_pow_m_chi_orb", "equal"])
    t.add(m, chi_d, lifted, expected, ok)
    _emit(args, t)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_cut(args) -> int:
    P = read_pattern(args.pattern)
    F = read_complex(args.locus)
    rec = cut_open_with_record(P, F, name=args.name, method=args.method)
    _write_or_print(format_pattern(rec.result), args.out)
    if args.out:
        t = Table(["new_facets", "sides"])
        t.add(",".join(rec.new_facets), ",".join(map(str, rec.sides)))
        _emit(args, t)
    return EXIT_OK


def cmd_verify_cut(args) -> int:
    P = read_pattern(args.pattern)
    F = read_complex(args.locus)
    rep = verify_cut_invariance(P, F, name=args.name, method=args.method)
    t = Table(["stage", "method", "chi_orb"])
    for stage, vals in (("before", rep.before), ("after", rep.after)):
        for m, v in vals.items():
            t.add(stage, m, v)
    if rep.closed_case is not None and args.format == "text":
        c = rep.closed_case
        t.footer.append(
            f"closed case: chi(M) = {c.chi_M}, chi(F) = {c.chi_F}, chi(M', F') = {c.relative}, "
            f"chi(F') = {c.chi_F_cut}, consistent: {_fmt(c.consistent)}"
        )
    if args.format == "text":
        t.footer.append(f"invariant: {_fmt(rep.equal)}")
    _emit(args, t)
    return EXIT_OK if rep.equal else EXIT_FAIL


def cmd_run_hierarchy(args) -> int:
    P = read_pattern(args.initial)
    cuts = read_ledger(args.ledger)
    ledger = run_prehierarchy(P, cuts, method=args.method)
    cert = certify_hierarchy(ledger)
    t = Table(["step", "n_cells", "facets", "chi_orb"])
    for s in ledger.steps:
        t.add(s.index, len(s.pattern.components()), s.pattern.l, s.chi_orb["strata"])
    t.add("final", len(ledger.terminal), ledger.final.l, ledger.final_chi_orb["strata"])
    if args.format == "tsv":
        _emit(args, t)
        c = Table(["cell", "facets", "is_cell", "ghs", "flag", "haken", "lambda", "chi_orb"])
        for cell in cert.cells:
            c.add(cell.index, cell.facets, cell.is_cell, cell.ghs, cell.flag, cell.haken, cell.lam, cell.chi_orb)
        sys.stdout.write(c.render("tsv"))
        return EXIT_OK if cert.ok else EXIT_FAIL
    for cell in cert.cells:
        t.footer.append(
            f"cell {cell.index}: {cell.facets} facets, homotopy cell {_fmt(cell.is_cell)}, "
            f"nerve GHS {_fmt(cell.ghs)}, flag {_fmt(cell.flag)}, λ = {cell.lam}"
        )
    t.footer.append("essentialness of cuts: assumed, not checked")
    for f in cert.failures:
        t.footer.append(f"failure: {f}")
    if cert.chi_M is not None and cert.euler_identity is not None:
        lam = cert.sum_lambda.to_fraction()
        if cert.euler_identity:
            t.footer.append(f"Σλ = {lam} = χ(M)")
        else:
            t.footer.append(f"Σλ = {lam} but χ(M) = {cert.chi_M}")
    else:
        t.footer.append(f"Σλ = {cert.sum_lambda.to_fraction()}, Σχ^orb = {ledger.terminal_sum}")
    _emit(args, t)
    return EXIT_OK if cert.ok else EXIT_FAIL


def cmd_corpus(args) -> int:
    paths = corpus_mod.generate(args.seed, args.family, args.out)
    t = Table(["file"])
    for p in paths:
        t.add(p.name)
    _emit(args, t)
    return EXIT_OK


# -- parser --------------------------------------------------------------------------


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "tsv"), default="text")
    common.add_argument("--mirror-cap", type=_positive, default=DEFAULT_MIRROR_LIMIT)
    common.add_argument("--node-budget", type=_positive, default=200_000)

    parser = argparse.ArgumentParser(prog="hakenkit", description="Exact combinatorics of boundary patterns.")
    sub = parser.add_subparsers(dest="command", required=True)
    commands: Dict[str, Callable] = {}

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        commands[name] = func
        return p

    p = add("homology", cmd_homology, "integral homology of a complex")
    p.add_argument("complex")
    for name, func, help in (
        ("is-ghs", cmd_is_ghs, "generalized homology sphere test"),
        ("certify-cell", cmd_certify_cell, "flag GHS test for a cell's dual nerve"),
    ):
        p = add(name, func, help)
        p.add_argument("complex")
        p.add_argument("--dim", type=_positive, help="n, testing for a GHS^(n-1)")
    for name, func, help in (
        ("flag-check", cmd_flag_check, "minimal non-faces and flagness"),
        ("charney-davis", cmd_charney_davis, "Charney-Davis quantity"),
    ):
        add(name, func, help).add_argument("complex")

    p = add("nerve", cmd_nerve, "nerve of a boundary pattern")
    p.add_argument("pattern")
    p.add_argument("--out")
    p = add("chi-orb", cmd_chi_orb, "orbifold Euler characteristic")
    p.add_argument("pattern")
    p.add_argument("--method", choices=sorted(CHI_ORB_METHODS) + ["all"], default="strata")
    add("useful", cmd_useful, "homology-level usefulness of a pattern").add_argument("pattern")

    p = add("cell-from-sphere", cmd_cell_from_sphere, "patterned cell dual to a flag sphere")
    p.add_argument("complex")
    p.add_argument("--dim", type=_positive)
    p.add_argument("--out")
    p.add_argument("--check", action="store_true", help="verify the nerve is isomorphic to the input")

    for name, func, help in (
        ("double", cmd_double, "reflection double over some mirrors"),
        ("verify-double", cmd_verify_double, "chi of the double against 2^m chi_orb"),
    ):
        p = add(name, func, help)
        p.add_argument("pattern")
        p.add_argument("--mirrors", help="comma-separated facet names (default: all)")
        if name == "double":
            p.add_argument("--out")

    for name, func, help in (
        ("cut", cmd_cut, "cut a pattern open along a locus"),
        ("verify-cut", cmd_verify_cut, "chi_orb before and after a cut"),
    ):
        p = add(name, func, help)
        p.add_argument("pattern")
        p.add_argument("locus")
        p.add_argument("--method", choices=("split", "neighborhood"), default="split")
        p.add_argument("--name", default="cut")
        if name == "cut":
            p.add_argument("--out")

    p = add("run-hierarchy", cmd_run_hierarchy, "execute and certify a ledger of cuts")
    p.add_argument("ledger")
    p.add_argument("--initial", required=True)
    p.add_argument("--method", choices=("split", "neighborhood"), default="split")

    p = add("corpus", cmd_corpus, "write an example family to a directory")
    p.add_argument("family", choices=sorted(corpus_mod.FAMILIES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=".")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, FormatError, PatternError, CutError, MirrorLimitExceeded, SearchBudgetExceeded, ValueError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
