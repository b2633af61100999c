"""Manifolds with boundary patterns in combinatorial form.

A :class:`PatternedComplex` is a triangulated compact n-manifold (checked only
as a pseudomanifold with boundary) together with named facet subcomplexes of
its boundary.  Facets are always full subcomplexes of the carrier; if a caller
hands in non-full facets the carrier is barycentrically subdivided once.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .complex import (
    Complex,
    Simplex,
    barycentric_subdivision,
    cone,
    subdivide_subcomplex,
    subdivision_faces,
)
from .dyadic import Dyadic, half_power, neg_half_power
from .generators import cycle, disk_polygon, kuhn_grid
from .homology import homology, is_generalized_homology_sphere


class PatternError(ValueError):
    """A boundary-pattern axiom fails; ``facet_set`` names the offending facets."""

    def __init__(self, message: str, facet_set: Iterable[str] = ()):
        super().__init__(message)
        self.facet_set = tuple(facet_set)


class IncompletePatternWarning(UserWarning):
    pass


def boundary_faces(K: Complex) -> List[Simplex]:
    """Codimension-one faces lying in exactly one top simplex.

    Raises ``PatternError`` if some codimension-one face lies in three or more.
    """
    counts: Counter = Counter()
    for m in K.maximal:
        for i in range(len(m)):
            counts[m[:i] + m[i + 1 :]] += 1
    over = [f for f, c in counts.items() if c > 2]
    if over:
        raise PatternError(f"not a pseudomanifold: {min(over)} lies in {counts[min(over)]} top simplices")
    return sorted(f for f, c in counts.items() if c == 1)


def boundary_complex(K: Complex) -> Complex:
    return Complex(boundary_faces(K), _trusted=True) if K.dimension > 0 else Complex()


@dataclass(frozen=True)
class PatternedComplex:
    carrier: Complex
    facets: Mapping[str, Complex]
    n: int

    @property
    def facet_ids(self) -> Tuple[str, ...]:
        return tuple(sorted(self.facets))

    @property
    def l(self) -> int:
        return len(self.facets)

    @cached_property
    def boundary(self) -> Complex:
        return boundary_complex(self.carrier)

    @cached_property
    def is_complete(self) -> bool:
        covered = set()
        for F in self.facets.values():
            covered.update(F.maximal)
        return covered == set(self.boundary.maximal)

    @cached_property
    def vertex_facets(self) -> Dict[int, FrozenSet[str]]:
        """Vertex -> set of facet ids containing it."""
        out: Dict[int, set] = {v: set() for v in self.carrier.vertices}
        for name, F in self.facets.items():
            for v in F.vertices:
                out[v].add(name)
        return {v: frozenset(s) for v, s in out.items()}

    @cached_property
    def _facet_faces(self) -> Dict[str, FrozenSet[Simplex]]:
        return {name: frozenset(f for f in F.all_faces() if f) for name, F in self.facets.items()}

    def components(self) -> List["PatternedComplex"]:
        """One patterned complex per connected component of the carrier."""
        out = []
        for comp in self.carrier.components():
            verts = set(comp.vertices)
            facets = {nm: F for nm, F in self.facets.items() if verts.issuperset(F.vertices)}
            out.append(PatternedComplex(comp, facets, self.n))
        return out


def make_pattern(
    carrier: Complex,
    facets: Optional[Mapping[str, Complex]] = None,
    *,
    subdivide: bool = True,
) -> PatternedComplex:
    """Validate and build a patterned complex.

    Facets must be nonempty connected pure (n-1)-subcomplexes of the boundary.
    Non-full facets trigger one barycentric subdivision of everything when
    ``subdivide`` is true, and a ``PatternError`` otherwise.  Incomplete
    patterns are accepted with an ``IncompletePatternWarning``.  Every k-fold
    facet intersection must be pure of dimension n - k.
    """
    facets = {str(k): v for k, v in (facets or {}).items()}
    n = carrier.dimension
    if carrier.is_empty or not carrier.is_pure():
        raise PatternError("carrier must be a nonempty pure complex")
    bnd = set(boundary_faces(carrier)) if n > 0 else set()
    for name, F in facets.items():
        if any(ch.isspace() for ch in name) or not name:
            raise PatternError(f"bad facet name {name!r}", [name])
        if F.is_empty:
            raise PatternError(f"facet {name} is empty", [name])
        if F.dimension != n - 1 or not F.is_pure():
            raise PatternError(f"facet {name} is not pure of dimension {n - 1}", [name])
        if not set(F.maximal) <= bnd:
            raise PatternError(f"facet {name} is not contained in the boundary", [name])
        if not F.is_connected():
            raise PatternError(f"facet {name} is not connected", [name])
    if not all(F.is_full_in(carrier) for F in facets.values()):
        if not subdivide:
            bad = [nm for nm, F in facets.items() if not F.is_full_in(carrier)]
            raise PatternError(f"facets {bad} are not full subcomplexes", bad)
        facets = {nm: subdivide_subcomplex(carrier, F) for nm, F in facets.items()}
        carrier = barycentric_subdivision(carrier)
    P = PatternedComplex(carrier, dict(sorted(facets.items())), n)
    _strata_cached(P)  # dimension audit of all facet intersections
    if not P.is_complete:
        warnings.warn("boundary pattern is incomplete", IncompletePatternWarning, stacklevel=2)
    return P


def closed_pattern(K: Complex) -> PatternedComplex:
    return make_pattern(K, {})


def restrict_pattern(P: PatternedComplex, keep: Iterable[str]) -> PatternedComplex:
    """The same carrier with only the facets in ``keep``; no completeness warning."""
    keep = set(keep)
    return PatternedComplex(P.carrier, {nm: F for nm, F in P.facets.items() if nm in keep}, P.n)


# -- strata ---------------------------------------------------------------


@dataclass(frozen=True)
class Stratum:
    facet_set: FrozenSet[str]
    carrier: Complex
    frontier: Complex

    @property
    def codimension(self) -> int:
        return len(self.facet_set)


def _intersections(P: PatternedComplex) -> Dict[Tuple[int, ...], FrozenSet[Simplex]]:
    """Nonempty facet intersections keyed by sorted facet-index tuples."""
    ids = P.facet_ids
    ff = [P._facet_faces[nm] for nm in ids]
    out: Dict[Tuple[int, ...], FrozenSet[Simplex]] = {}
    level = [((i,), ff[i]) for i in range(len(ids))]
    while level:
        nxt = []
        for T, inter in level:
            out[T] = inter
            for j in range(T[-1] + 1, len(ids)):
                new = inter & ff[j]
                if new:
                    nxt.append((T + (j,), new))
        level = nxt
    return out


def strata(P: PatternedComplex) -> List[Stratum]:
    """All strata, codimension 0 first, each with its frontier.

    Raises ``PatternError`` when a k-fold intersection is not pure of
    dimension n - k.
    """
    return list(_strata_cached(P))


def _strata_cached(P: PatternedComplex) -> Tuple[Stratum, ...]:
    cached = P.__dict__.get("_strata")
    if cached is not None:
        return cached
    ids = P.facet_ids
    ff = [P._facet_faces[nm] for nm in ids]
    all_facet_faces = frozenset().union(*ff) if ff else frozenset()
    out: List[Stratum] = []
    for comp in P.carrier.components():
        cf = set(comp.all_faces())
        out.append(Stratum(frozenset(), comp, Complex.from_faces(cf & all_facet_faces)))
    for T, inter in _intersections(P).items():
        names = [ids[i] for i in T]
        k = len(T)
        others = frozenset().union(*(ff[j] for j in range(len(ids)) if j not in T)) if len(T) < len(ids) else frozenset()
        C = Complex.from_faces(inter)
        if C.dimension != P.n - k or not C.is_pure():
            raise PatternError(
                f"intersection of {names} has dimension {C.dimension}, expected pure {P.n - k}", names
            )
        for comp in C.components():
            cf = set(comp.all_faces())
            out.append(Stratum(frozenset(names), comp, Complex.from_faces(cf & others)))
    out.sort(key=lambda s: (s.codimension, sorted(s.facet_set), s.carrier.vertices[0]))
    result = tuple(out)
    object.__setattr__(P, "_strata", result)
    return result


@dataclass(frozen=True)
class Nerve:
    """The nerve complex; vertex i stands for ``facet_ids[i]``.

    ``S`` maps each simplex (including ``()``) to the union of strata it indexes.
    """

    complex: Complex
    facet_ids: Tuple[str, ...]
    S: Dict[Simplex, Complex] = field(repr=False)


def nerve(P: PatternedComplex) -> Nerve:
    _strata_cached(P)
    inters = _intersections(P)
    S: Dict[Simplex, Complex] = {(): P.carrier}
    for T, inter in inters.items():
        S[T] = Complex.from_faces(inter)
    return Nerve(Complex(list(inters), _trusted=False), P.facet_ids, S)


# -- orbifold Euler characteristic ---------------------------------------


def orbifold_euler_strata(P: PatternedComplex) -> Dyadic:
    """Weighted sum over strata of (1/2)^codim * (chi(S) - chi(frontier))."""
    total = Dyadic(0)
    for s in _strata_cached(P):
        rel = s.carrier.euler_characteristic() - s.frontier.euler_characteristic()
        total += rel * half_power(s.codimension)
    return total


def orbifold_euler_poincare(P: PatternedComplex) -> Dyadic:
    """(-1)^n * sum over strata of (-1/2)^codim * chi(S)."""
    total = Dyadic(0)
    for s in _strata_cached(P):
        total += s.carrier.euler_characteristic() * neg_half_power(s.codimension)
    return total if P.n % 2 == 0 else -total


def orbifold_euler_nerve(P: PatternedComplex) -> Dyadic:
    """(-1)^n * sum over nerve simplices sigma (with the empty one) of (-1/2)^(dim+1) chi(S_sigma)."""
    N = nerve(P)
    total = Dyadic(0)
    for sigma, S in N.S.items():
        total += S.euler_characteristic() * neg_half_power(len(sigma))
    return total if P.n % 2 == 0 else -total


CHI_ORB_METHODS = {
    "strata": orbifold_euler_strata,
    "poincare": orbifold_euler_poincare,
    "nerve": orbifold_euler_nerve,
}


def orbifold_euler(P: PatternedComplex, method: str = "strata") -> Dyadic:
    return CHI_ORB_METHODS[method](P)


def orbifold_euler_all(P: PatternedComplex) -> Dict[str, Dyadic]:
    return {m: f(P) for m, f in CHI_ORB_METHODS.items()}


# -- usefulness -------------------------------------------------------------


@dataclass(frozen=True)
class UsefulnessReport:
    """Homology-level stand-in for a useful boundary pattern.

    ``facet_h1_trivial`` replaces simple connectivity of facets by H1 = 0.
    ``decided`` is False when the carrier has nonzero H1; the loop conditions
    that would then be needed are not checked.
    """

    facet_h1_trivial: bool
    pairwise_connected: bool
    triple_condition: bool
    decided: bool
    failures: Tuple[str, ...] = ()

    @property
    def homology_useful(self) -> bool:
        return self.facet_h1_trivial and self.pairwise_connected and self.triple_condition


def _h1_trivial(K: Complex) -> bool:
    h = homology(K)
    if len(h.betti) < 2:
        return True
    return h.betti[1] == 0 and not h.torsion[1]


def usefulness_report(P: PatternedComplex) -> UsefulnessReport:
    from .flag import has_empty_triangle

    failures = []
    h1 = True
    for nm, F in P.facets.items():
        if not _h1_trivial(F):
            h1 = False
            failures.append(f"facet {nm} has H1 != 0")
    pair = True
    ids = P.facet_ids
    for a, b in combinations(ids, 2):
        inter = P.facets[a].intersection(P.facets[b])
        if not inter.is_empty and len(inter.components()) > 1:
            pair = False
            failures.append(f"facets {a}, {b} meet in {len(inter.components())} components")
    N = nerve(P)
    triple = not has_empty_triangle(N.complex)
    if not triple:
        failures.append("three facets meet pairwise but not jointly")
    decided = _h1_trivial(P.carrier)
    return UsefulnessReport(h1, pair, triple, decided, tuple(failures))


# -- pattern builders ---------------------------------------------------------


def _pad(i: int, width: int) -> str:
    return str(i).zfill(width)


def cell_from_flag_sphere(L: Complex, n: Optional[int] = None) -> PatternedComplex:
    """Cone on the barycentric subdivision of L, one facet per vertex of L.

    The facet for vertex v is the closed star of v in L'.  Requires L to be a
    GHS^(n-1); flagness is not needed to build the cell.
    """
    n = L.dimension + 1 if n is None else n
    if not is_generalized_homology_sphere(L, n):
        raise ValueError(f"input is not a generalized homology {n - 1}-sphere")
    sd_faces = subdivision_faces(L)
    sd = barycentric_subdivision(L)
    width = len(str(max(L.vertices)))
    facets = {}
    for v in L.vertices:
        facets[f"v{_pad(v, width)}"] = sd.induced(i for i, f in enumerate(sd_faces) if v in f)
    return make_pattern(cone(sd), facets)


def polygon_cell(p: int) -> PatternedComplex:
    """p-gon disk with one facet per side."""
    width = len(str(p - 1))
    facets = {f"e{_pad(i, width)}": Complex([(i, (i + 1) % p)]) for i in range(p)}
    return make_pattern(disk_polygon(p), facets)


def hemisphere_disk(p: int = 4) -> PatternedComplex:
    """p-gon disk whose whole boundary circle is a single facet."""
    return make_pattern(disk_polygon(p), {"rim": cycle(p)})


def bigon_disk(p: int = 6) -> PatternedComplex:
    """Disk whose boundary is split into two arcs meeting in two points."""
    if p < 4:
        raise ValueError("bigon_disk needs p >= 4")
    a = p // 2
    arc1 = Complex((i, i + 1) for i in range(a))
    arc2 = Complex((i, (i + 1) % p) for i in range(a, p))
    return make_pattern(disk_polygon(p), {"a": arc1, "b": arc2})


def box_cell(shape: Sequence[int]) -> PatternedComplex:
    """Kuhn-triangulated box with one facet per side (2 * dim facets)."""
    n = len(shape)
    K = kuhn_grid(shape, (False,) * n)
    sizes = [s + 1 for s in shape]
    coords: Dict[int, Tuple[int, ...]] = {}
    for v in K.vertices:
        x, r = [], v
        for size in reversed(sizes):
            x.append(r % size)
            r //= size
        coords[v] = tuple(reversed(x))
    facets = {}
    for axis in range(n):
        for side, val in (("-", 0), ("+", shape[axis])):
            facets[f"x{axis}{side}"] = K.induced(v for v in K.vertices if coords[v][axis] == val)
    return make_pattern(K, facets)


def cube_cell(n: int) -> PatternedComplex:
    return box_cell((1,) * n)


def annulus_pattern(m: int = 4) -> PatternedComplex:
    from .generators import annulus

    K = annulus(m)
    return make_pattern(K, {"inner": K.induced(range(m)), "outer": K.induced(range(m, 2 * m))})
