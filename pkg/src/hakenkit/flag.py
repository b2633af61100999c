"""Flag-complex certification and the Charney-Davis quantity."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, Tuple

from .complex import Complex, Simplex, link
from .dyadic import Dyadic, neg_half_power
from .homology import is_generalized_homology_sphere


@dataclass(frozen=True)
class FlagReport:
    is_flag: bool
    minimal_non_faces: Tuple[Simplex, ...]

    @property
    def empty_triangles(self) -> Tuple[Simplex, ...]:
        return tuple(s for s in self.minimal_non_faces if len(s) == 3)


def flag_report(K: Complex) -> FlagReport:
    """All minimal non-faces of size >= 3 (cliques of the 1-skeleton that are not faces).

    Level k+1 candidates are k-faces extended by a larger common neighbour, so
    every candidate already has one k-subset that is a face; it is a minimal
    non-face iff it is absent and all its other k-subsets are faces.
    """
    adj = K.adjacency()
    found: List[Simplex] = []
    for k in range(2, K.dimension + 2):
        level = K.faces(k - 1)
        for tau in sorted(level):
            common = set.intersection(*(adj[v] for v in tau))
            for w in sorted(common):
                if w <= tau[-1]:
                    continue
                cand = tau + (w,)
                if cand in K:
                    continue
                if all(sub in level for sub in combinations(cand, k)):
                    found.append(cand)
    found.sort(key=lambda s: (len(s), s))
    return FlagReport(not found, tuple(found))


def is_flag(K: Complex) -> bool:
    return flag_report(K).is_flag


def has_empty_triangle(K: Complex) -> bool:
    adj = K.adjacency()
    for a, b in K.faces(1):
        for c in adj[a] & adj[b]:
            if c > b and (a, b, c) not in K:
                return True
    return False


def is_flag_via_links(K: Complex) -> bool:
    """Flag iff no link (including the link of the empty simplex) has an empty triangle."""
    for s in K.all_faces():
        if has_empty_triangle(link(K, s)):
            return False
    return True


def charney_davis(K: Complex) -> Dyadic:
    """lambda(K) = sum over faces (including the empty one) of (-1/2)^(dim + 1)."""
    total = Dyadic(0)
    for i, f in enumerate(K.f_vector):
        total += f * neg_half_power(i)
    return total


@dataclass(frozen=True)
class CellCertificate:
    ghs: bool
    flag: bool

    @property
    def haken(self) -> bool:
        return self.ghs and self.flag


def certify_haken_cell_dual(K: Complex, n: int) -> CellCertificate:
    """Whether K can be the dual of a Haken homotopy n-cell: a flag GHS^(n-1)."""
    return CellCertificate(is_generalized_homology_sphere(K, n), is_flag(K))
