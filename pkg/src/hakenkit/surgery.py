"""Cutting patterned complexes open along hypersurfaces, and hierarchy ledgers.

Two cut algorithms are provided.

``"split"`` (default) unglues the carrier along the locus: every vertex of the
locus is duplicated once per side, where the sides at v are the classes of top
simplices around v connected through codimension-one faces that avoid the
locus.  It needs the locus to be full, and returns a triangulation of the cut
manifold with no subdivision at all, so hierarchies stay small.

``"neighborhood"`` subdivides twice, removes the open simplicial neighbourhood
of the locus and keeps the closed complement.  It is exponentially larger and
exists as an independent cross-check on small inputs.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .complex import Complex, Simplex, barycentric_subdivision, subdivide_subcomplex
from .dyadic import Dyadic
from .flag import charney_davis, certify_haken_cell_dual
from .homology import is_acyclic
from .pattern import (
    PatternedComplex,
    PatternError,
    boundary_complex,
    make_pattern,
    nerve,
    orbifold_euler_all,
    strata,
)


class CutError(ValueError):
    pass


@dataclass(frozen=True)
class CutLocus:
    subcomplex: Complex
    full: bool
    pure: bool
    proper: bool
    transversality_failures: Tuple[Tuple[Tuple[str, ...], str], ...] = ()

    @property
    def transverse(self) -> bool:
        return not self.transversality_failures

    @property
    def ok(self) -> bool:
        return self.full and self.pure and self.proper and self.transverse

    def problems(self) -> List[str]:
        out = []
        if not self.pure:
            out.append("locus is not pure of codimension one")
        if not self.full:
            out.append("locus is not a full subcomplex")
        if not self.proper:
            out.append("locus boundary differs from its intersection with the carrier boundary")
        for names, why in self.transversality_failures:
            out.append(f"not transverse to stratum {list(names)}: {why}")
        return out


def cut_locus(P: PatternedComplex, F: Complex) -> CutLocus:
    """Check that F is an admissible hypersurface of P (combinatorially)."""
    n = P.n
    K = P.carrier
    if not F.is_subcomplex_of(K):
        raise CutError("locus is not a subcomplex of the carrier")
    pure = not F.is_empty and F.is_pure() and F.dimension == n - 1
    full = F.is_full_in(K)
    proper = False
    failures = []
    if pure:
        try:
            dF = set(boundary_complex(F).all_faces())
        except PatternError:
            dF = None
        proper = dF == set(F.all_faces()) & set(P.boundary.all_faces())
        Ffaces = set(F.all_faces())
        for s in strata(P):
            if not s.codimension:
                continue
            X = Complex.from_faces(Ffaces & set(s.carrier.all_faces()))
            want = n - 1 - s.codimension
            if X.is_empty:
                continue
            if want < 0 or X.dimension != want or not X.is_pure():
                failures.append(
                    (tuple(sorted(s.facet_set)), f"meets it in dimension {X.dimension}, expected {want}")
                )
    return CutLocus(F, full, pure, proper, tuple(failures))


@dataclass(frozen=True)
class CutRecord:
    result: PatternedComplex
    new_facets: Tuple[str, ...]
    sides: Tuple[int, ...]
    origin: Optional[Dict[int, int]] = field(default=None, repr=False)

    @property
    def one_sided(self) -> int:
        return sum(1 for s in self.sides if s == 1)

    @property
    def two_sided(self) -> int:
        return sum(1 for s in self.sides if s == 2)


def _name_pieces(base: str, comps: List[Complex]) -> Dict[str, Complex]:
    if len(comps) == 1:
        return {base: comps[0]}
    return {f"{base}.{i}": c for i, c in enumerate(comps)}


def _component_index(vertex_sets: List[set], v: int) -> int:
    return next(i for i, vs in enumerate(vertex_sets) if v in vs)


def _cut_split(P: PatternedComplex, F: Complex, name: str) -> CutRecord:
    K, n = P.carrier, P.n
    Fv = set(F.vertices)
    Ffaces = set(F.all_faces())
    star = K.star_index()
    side: Dict[Tuple[Simplex, int], int] = {}
    for v in sorted(Fv):
        tops = star[v]
        parent = {t: t for t in tops}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        through: Dict[Simplex, List[Simplex]] = defaultdict(list)
        for t in tops:
            for i in range(len(t)):
                f = t[:i] + t[i + 1 :]
                if v in f and f not in Ffaces:
                    through[f].append(t)
        for ts in through.values():
            for t in ts[1:]:
                a, b = find(ts[0]), find(t)
                if a != b:
                    parent[b] = a
        roots = sorted({find(t) for t in tops}, key=lambda r: min(t for t in tops if find(t) == r))
        if len(roots) != 2:
            raise CutError(f"locus splits the star of vertex {v} into {len(roots)} pieces, expected 2")
        rank = {r: i for i, r in enumerate(roots)}
        for t in tops:
            side[(t, v)] = rank[find(t)]

    nxt = K.vertices[-1] + 1
    label: Dict[Tuple[int, int], int] = {}
    for v in sorted(Fv):
        label[(v, 0)] = v
        label[(v, 1)] = nxt
        nxt += 1

    def lift(face: Sequence[int], top: Simplex) -> Simplex:
        return tuple(sorted(label[(v, side[(top, v)])] if v in Fv else v for v in face))

    carrier = Complex([lift(t, t) for t in K.maximal])
    origin = {w: w for w in carrier.vertices if w in K.vertices}
    origin.update({w: v for (v, _), w in label.items()})

    cut_faces = []
    for tau in F.maximal:
        for t in K.maximal_containing(tau):
            cut_faces.append(lift(tau, t))
    cut_part = Complex(cut_faces)
    pieces = cut_part.components()
    new = {f"{name}.{i}": p for i, p in enumerate(pieces)}
    F_comps = [set(c.vertices) for c in F.components()]
    sides = [0] * len(F_comps)
    for piece in pieces:
        sides[_component_index(F_comps, origin[piece.vertices[0]])] += 1

    facets: Dict[str, Complex] = {}
    for gname, G in P.facets.items():
        lifted = Complex(lift(phi, K.maximal_containing(phi)[0]) for phi in G.maximal)
        facets.update(_name_pieces(gname, lifted.components()))
    clash = set(facets) & set(new)
    if clash:
        raise CutError(f"cut facet names collide with existing facets {sorted(clash)}")
    facets.update(new)
    result = make_pattern(carrier, facets)
    return CutRecord(result, tuple(sorted(new)), tuple(sides), origin if result.carrier is carrier else None)


def _cut_neighborhood(P: PatternedComplex, F: Complex, name: str, subdivisions: int) -> CutRecord:
    K, G = P.carrier, dict(P.facets)
    for _ in range(subdivisions):
        G = {nm: subdivide_subcomplex(K, X) for nm, X in G.items()}
        F = subdivide_subcomplex(K, F)
        K = barycentric_subdivision(K)
    Fv = set(F.vertices)
    far = [t for t in K.maximal if not Fv.intersection(t)]
    near = [t for t in K.maximal if Fv.intersection(t)]
    C = Complex(far, _trusted=True)
    N = Complex(near, _trusted=True)
    frontier = N.intersection(C)
    compact = {v: i for i, v in enumerate(C.vertices)}

    pieces = frontier.components()
    F_comps = [set(c.vertices) for c in F.components()]
    sides = [0] * len(F_comps)
    for piece in pieces:
        v = piece.vertices[0]
        t = next(t for t in N.maximal_containing((v,)) if Fv.intersection(t))
        w = next(x for x in t if x in Fv)
        sides[_component_index(F_comps, w)] += 1
    new = {f"{name}.{i}": p.relabel(compact) for i, p in enumerate(sorted(pieces, key=lambda c: compact[c.vertices[0]]))}

    facets: Dict[str, Complex] = {}
    for gname, X in G.items():
        kept = Complex(phi for phi in X.maximal if not Fv.intersection(phi))
        comps = [c.relabel(compact) for c in kept.components()]
        comps.sort(key=lambda c: c.vertices[0])
        facets.update(_name_pieces(gname, comps))
    facets.update(new)
    result = make_pattern(C.relabel(compact), facets)
    return CutRecord(result, tuple(sorted(new)), tuple(sides))


def cut_open_with_record(
    P: PatternedComplex, F: Complex, name: str = "cut", method: str = "split", subdivisions: int = 2
) -> CutRecord:
    locus = cut_locus(P, F)
    if not locus.ok:
        raise CutError("; ".join(locus.problems()))
    if any(nm == name or nm.startswith(name + ".") for nm in P.facets):
        raise CutError(f"facet name prefix {name!r} already in use")
    if method == "split":
        return _cut_split(P, F, name)
    if method == "neighborhood":
        return _cut_neighborhood(P, F, name, subdivisions)
    raise ValueError(f"unknown cut method {method!r}")


def cut_open(P: PatternedComplex, F: Complex, name: str = "cut", method: str = "split") -> PatternedComplex:
    return cut_open_with_record(P, F, name, method).result


# -- invariance ----------------------------------------------------------------


@dataclass(frozen=True)
class ClosedCaseTerms:
    """Term-by-term replay for a closed carrier cut along a closed locus."""

    chi_M: int
    chi_F: int
    chi_M_cut: int
    chi_F_cut: int

    @property
    def relative(self) -> int:
        return self.chi_M_cut - self.chi_F_cut

    @property
    def consistent(self) -> bool:
        return (
            self.relative == self.chi_M - self.chi_F
            and self.chi_F_cut == 2 * self.chi_F
            and Dyadic(self.relative) + Dyadic(self.chi_F_cut, 1) == self.chi_M
        )


@dataclass(frozen=True)
class CutInvarianceReport:
    before: Dict[str, Dyadic]
    after: Dict[str, Dyadic]
    record: CutRecord
    closed_case: Optional[ClosedCaseTerms] = None

    @property
    def equal(self) -> bool:
        values = set(self.before.values()) | set(self.after.values())
        ok = len(values) == 1
        if self.closed_case is not None:
            ok = ok and self.closed_case.consistent
        return ok


def verify_cut_invariance(
    P: PatternedComplex, F: Complex, name: str = "cut", method: str = "split"
) -> CutInvarianceReport:
    rec = cut_open_with_record(P, F, name, method)
    closed = None
    if not P.facets and boundary_complex(F).is_empty:
        Q = rec.result
        cut_part = Complex([]).union(*(Q.facets[nm] for nm in rec.new_facets))
        closed = ClosedCaseTerms(
            P.carrier.euler_characteristic(),
            F.euler_characteristic(),
            Q.carrier.euler_characteristic(),
            cut_part.euler_characteristic(),
        )
    return CutInvarianceReport(orbifold_euler_all(P), orbifold_euler_all(rec.result), rec, closed)


# -- hierarchies -------------------------------------------------------------------


@dataclass(frozen=True)
class LedgerStep:
    index: int
    pattern: PatternedComplex
    locus: Complex
    chi_orb: Dict[str, Dyadic]
    record: CutRecord
    additive: bool


@dataclass(frozen=True)
class HierarchyLedger:
    initial: PatternedComplex
    steps: Tuple[LedgerStep, ...]
    final: PatternedComplex
    final_chi_orb: Dict[str, Dyadic]
    terminal: Tuple[PatternedComplex, ...]
    terminal_chi_orb: Tuple[Dyadic, ...]
    essential_checked: bool = False

    @property
    def chi_orb_initial(self) -> Dyadic:
        return (self.steps[0].chi_orb if self.steps else self.final_chi_orb)["strata"]

    @property
    def invariant(self) -> bool:
        values = {v for s in self.steps for v in s.chi_orb.values()}
        values |= set(self.final_chi_orb.values())
        return len(values) == 1

    @property
    def terminal_sum(self) -> Dyadic:
        return sum(self.terminal_chi_orb, Dyadic(0))

    @property
    def additive(self) -> bool:
        return all(s.additive for s in self.steps) and self.terminal_sum == self.final_chi_orb["strata"]


class LedgerError(CutError):
    def __init__(self, step: int, message: str):
        super().__init__(f"step {step}: {message}")
        self.step = step


def _additive(P: PatternedComplex, total: Dyadic) -> bool:
    from .pattern import orbifold_euler_strata

    return sum((orbifold_euler_strata(c) for c in P.components()), Dyadic(0)) == total


def run_prehierarchy(
    initial: PatternedComplex, cuts: Sequence[Complex], method: str = "split"
) -> HierarchyLedger:
    """Execute the cuts in order; cut k is given in the labels of the k-th carrier."""
    steps = []
    M = initial
    for k, F in enumerate(cuts):
        try:
            chi = orbifold_euler_all(M)
            rec = cut_open_with_record(M, F, name=f"F{k}", method=method)
        except (CutError, PatternError) as exc:
            raise LedgerError(k, str(exc)) from exc
        steps.append(LedgerStep(k, M, F, chi, rec, _additive(M, chi["strata"])))
        M = rec.result
    final_chi = orbifold_euler_all(M)
    terminal = tuple(M.components())
    from .pattern import orbifold_euler_strata

    return HierarchyLedger(
        initial, tuple(steps), M, final_chi, terminal, tuple(orbifold_euler_strata(c) for c in terminal)
    )


@dataclass(frozen=True)
class TerminalCell:
    index: int
    facets: int
    nerve: Complex
    is_cell: bool
    ghs: bool
    flag: bool
    lam: Dyadic
    chi_orb: Dyadic

    @property
    def haken(self) -> bool:
        return self.is_cell and self.ghs and self.flag


@dataclass(frozen=True)
class HierarchyCertificate:
    cells: Tuple[TerminalCell, ...]
    sum_lambda: Dyadic
    chi_M: Optional[int]
    euler_identity: Optional[bool]
    sign_ok: Optional[bool]
    invariant: bool
    additive: bool
    failures: Tuple[str, ...]
    essential_checked: bool = False

    @property
    def ok(self) -> bool:
        return not self.failures


def _is_homotopy_cell(P: PatternedComplex) -> bool:
    return all(is_acyclic(s.carrier) for s in strata(P))


def certify_hierarchy(ledger: HierarchyLedger) -> HierarchyCertificate:
    """Terminal cells must be homotopy cells with flag GHS nerves; for closed even-dimensional
    starting manifolds the Euler characteristic must equal the sum of Charney-Davis quantities."""
    failures = []
    cells = []
    n = ledger.initial.n
    for i, c in enumerate(ledger.terminal):
        N = nerve(c).complex
        cert = certify_haken_cell_dual(N, n)
        cell = TerminalCell(i, c.l, N, _is_homotopy_cell(c), cert.ghs, cert.flag, charney_davis(N), ledger.terminal_chi_orb[i])
        cells.append(cell)
        if not cell.is_cell:
            failures.append(f"terminal piece {i} is not a homotopy cell")
        if not cell.ghs:
            failures.append(f"terminal piece {i}: nerve is not a GHS^{n - 1}")
        if not cell.flag:
            failures.append(f"terminal piece {i}: nerve is not flag")
    sum_lambda = sum((c.lam for c in cells), Dyadic(0))
    chi_M = euler = sign = None
    if not ledger.initial.facets:
        chi_M = ledger.initial.carrier.euler_characteristic()
        if n % 2 == 0:
            euler = Dyadic(chi_M) == sum_lambda
            sign = (-1) ** (n // 2) * chi_M >= 0
            if not euler:
                failures.append(f"chi(M) = {chi_M} but the lambda sum is {sum_lambda}")
    if not ledger.invariant:
        failures.append("orbifold Euler characteristic changed along the ledger")
    if not ledger.additive:
        failures.append("orbifold Euler characteristic is not additive over components")
    return HierarchyCertificate(
        tuple(cells), sum_lambda, chi_M, euler, sign, ledger.invariant, ledger.additive, tuple(failures)
    )
