"""Right-angled basic construction: (Z/2)^m doubles of patterned complexes.

Group elements are bitmasks over the chosen mirror list (bit i = mirror i).
A vertex v of the carrier with mirror set S(v) yields one vertex of the double
per coset of the subgroup generated by S(v); the coset is stored by its
minimal representative ``g & ~mask(v)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .complex import Complex
from .dyadic import Dyadic
from .pattern import PatternedComplex, boundary_faces, make_pattern, orbifold_euler_strata, restrict_pattern

DEFAULT_MIRROR_LIMIT = 12


class MirrorLimitExceeded(ValueError):
    pass


@dataclass(frozen=True)
class ReflectionGroupElement:
    bits: int
    l: int

    def __mul__(self, other: "ReflectionGroupElement") -> "ReflectionGroupElement":
        if self.l != other.l:
            raise ValueError("elements of different groups")
        return ReflectionGroupElement(self.bits ^ other.bits, self.l)

    @classmethod
    def identity(cls, l: int) -> "ReflectionGroupElement":
        return cls(0, l)

    @classmethod
    def generator(cls, i: int, l: int) -> "ReflectionGroupElement":
        return cls(1 << i, l)


@dataclass(frozen=True)
class DoubledComplex:
    complex: Complex
    mirrors: Tuple[str, ...]
    vertex_origin: Dict[int, Tuple[int, int]]
    action: Dict[str, Dict[int, int]]

    def orbit_map(self) -> Dict[int, int]:
        return {w: v for w, (_, v) in self.vertex_origin.items()}


def vertex_stabilizer_set(P: PatternedComplex, v: int) -> frozenset:
    """Facets containing the vertex ``v``."""
    try:
        return P.vertex_facets[v]
    except KeyError:
        raise ValueError(f"vertex {v} is not in the carrier") from None


def _check_mirrors(P: PatternedComplex, mirrors: Optional[Iterable[str]], limit: int) -> Tuple[str, ...]:
    mirrors = P.facet_ids if mirrors is None else tuple(sorted(set(mirrors)))
    unknown = [m for m in mirrors if m not in P.facets]
    if unknown:
        raise ValueError(f"unknown facets {unknown}")
    if len(mirrors) > limit:
        raise MirrorLimitExceeded(f"{len(mirrors)} mirrors exceed the limit of {limit}")
    for m in mirrors:
        if not P.facets[m].is_full_in(P.carrier):
            raise ValueError(f"mirror facet {m} is not full in the carrier")
    return mirrors


def _masks(P: PatternedComplex, mirrors: Sequence[str]) -> Dict[int, int]:
    bit = {m: 1 << i for i, m in enumerate(mirrors)}
    return {v: sum(bit[f] for f in fs if f in bit) for v, fs in P.vertex_facets.items()}


def double(
    P: PatternedComplex, mirrors: Optional[Iterable[str]] = None, limit: int = DEFAULT_MIRROR_LIMIT
) -> DoubledComplex:
    """(G x M)/~ with G = (Z/2)^m generated by reflections in the chosen mirrors."""
    mirrors = _check_mirrors(P, mirrors, limit)
    m = len(mirrors)
    mask = _masks(P, mirrors)
    keys = sorted({(v, g & ~mask[v]) for v in P.carrier.vertices for g in range(1 << m)})
    label = {key: i for i, key in enumerate(keys)}
    sims = set()
    for g in range(1 << m):
        for s in P.carrier.maximal:
            sims.add(tuple(sorted(label[(v, g & ~mask[v])] for v in s)))
    D = Complex(sorted(sims), _trusted=True)
    origin = {i: (rep, v) for (v, rep), i in label.items()}
    action = {}
    for i, name in enumerate(mirrors):
        b = 1 << i
        action[name] = {w: label[(v, (rep ^ b) & ~mask[v])] for w, (rep, v) in origin.items()}
    return DoubledComplex(D, mirrors, origin, action)


def lift_pattern(P: PatternedComplex, D: DoubledComplex) -> PatternedComplex:
    """Pattern on the double whose facets are components of preimages of unmirrored facets."""
    mask = _masks(P, D.mirrors)
    label = {(v, rep): w for w, (rep, v) in D.vertex_origin.items()}
    m = len(D.mirrors)
    facets = {}
    for name, F in P.facets.items():
        if name in D.mirrors:
            continue
        pre = Complex(
            tuple(sorted(label[(v, g & ~mask[v])] for v in s)) for g in range(1 << m) for s in F.maximal
        )
        comps = pre.components()
        if len(comps) == 1:
            facets[name] = comps[0]
        else:
            for k, c in enumerate(comps):
                facets[f"{name}.{k}"] = c
    return make_pattern(D.complex, facets, subdivide=False)


@dataclass(frozen=True)
class QuotientReport:
    chi_double: int
    l: int
    chi_orb: Dyadic

    @property
    def equal(self) -> bool:
        return Dyadic(self.chi_double) == self.chi_orb.shift(self.l)


def verify_quotient_formula(P: PatternedComplex, limit: int = DEFAULT_MIRROR_LIMIT) -> QuotientReport:
    D = double(P, limit=limit)
    return QuotientReport(D.complex.euler_characteristic(), P.l, orbifold_euler_strata(P))


def partial_quotient_chi(
    P: PatternedComplex, mirrors: Iterable[str], limit: int = DEFAULT_MIRROR_LIMIT
) -> Dyadic:
    """chi(double over the chosen mirrors) / 2^m.

    Past the mirror limit the value comes from the strata formula applied to
    the pattern restricted to the mirrors, without building the double.
    """
    mirrors = tuple(sorted(set(mirrors)))
    if len(mirrors) > limit:
        return orbifold_euler_strata(restrict_pattern(P, mirrors))
    D = double(P, mirrors, limit=limit)
    return Dyadic(D.complex.euler_characteristic(), len(mirrors))


def is_closed_pseudomanifold(K: Complex) -> bool:
    """Every codimension-one face lies in exactly two top simplices."""
    return K.is_pure() and not boundary_faces(K)
