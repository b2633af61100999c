"""Integer simplicial homology via Smith normal form.

Homology here is UNREDUCED: ``betti[0]`` counts connected components, and the
profile of S^0 is betti ``(2,)``.  Everything is computed with Python ints, so
no entry can overflow.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .complex import Complex, Simplex, link

REDUCED = False


@dataclass(frozen=True)
class HomologyProfile:
    betti: Tuple[int, ...]
    torsion: Tuple[Tuple[int, ...], ...]

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.betti))

    def is_torsion_free(self) -> bool:
        return not any(self.torsion)

    def __str__(self) -> str:
        parts = []
        for d, (b, t) in enumerate(zip(self.betti, self.torsion)):
            group = " + ".join(([f"Z^{b}"] if b else []) + [f"Z/{q}" for q in t]) or "0"
            parts.append(f"H{d} = {group}")
        return "\n".join(parts)


def sphere_profile(dim: int) -> HomologyProfile:
    """Unreduced homology of S^dim for dim >= 0."""
    if dim == 0:
        return HomologyProfile((2,), ((),))
    betti = [0] * (dim + 1)
    betti[0] = betti[dim] = 1
    return HomologyProfile(tuple(betti), tuple(() for _ in range(dim + 1)))


def point_profile(dim: int) -> HomologyProfile:
    """Homology of a point padded with zeros up to degree ``dim``."""
    betti = [0] * (dim + 1)
    betti[0] = 1
    return HomologyProfile(tuple(betti), tuple(() for _ in range(dim + 1)))


@dataclass
class BoundaryMatrix:
    """Sparse matrix of the boundary map from d-faces to (d-1)-faces."""

    rows: List[Simplex]
    cols: List[Simplex]
    columns: Dict[int, Dict[int, int]] = field(default_factory=dict)

    def to_dense(self) -> List[List[int]]:
        out = [[0] * len(self.cols) for _ in self.rows]
        for j, col in self.columns.items():
            for i, v in col.items():
                out[i][j] = v
        return out

    def __matmul__(self, other: "BoundaryMatrix") -> Dict[Tuple[int, int], int]:
        """Nonzero entries of ``self * other``."""
        by_row: Dict[int, Dict[int, int]] = defaultdict(dict)
        for j, col in self.columns.items():
            for i, v in col.items():
                by_row[j][i] = v
        prod: Dict[Tuple[int, int], int] = defaultdict(int)
        for k, col in other.columns.items():
            for j, w in col.items():
                for i, v in by_row.get(j, {}).items():
                    prod[(i, k)] += v * w
        return {key: v for key, v in prod.items() if v}


def boundary_matrix(K: Complex, d: int) -> BoundaryMatrix:
    rows = sorted(K.faces(d - 1))
    cols = sorted(K.faces(d))
    index = {f: i for i, f in enumerate(rows)}
    columns = {}
    for j, s in enumerate(cols):
        columns[j] = {index[s[:i] + s[i + 1 :]]: (-1) ** i for i in range(len(s))}
    return BoundaryMatrix(rows, cols, columns)


def smith_normal_form(M: Sequence[Sequence[int]]) -> Tuple[int, List[int]]:
    """Rank and nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    A = [list(map(int, row)) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    factors: List[int] = []
    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                a = A[i][j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                if A[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    dirty = True
            if not dirty:
                # enforce divisibility on the remaining block
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                A[t] = [x + y for x, y in zip(A[t], A[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cand = [(abs(A[i][t]), i, t) for i in range(t, rows) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t, cols) if A[t][j]]
            _, ci, cj = min(cand)
            A[t], A[ci] = A[ci], A[t]
            for row in A:
                row[t], row[cj] = row[cj], row[t]
        factors.append(abs(A[t][t]))
        t += 1
    return len(factors), factors


def _sparse_rank_and_factors(mat: BoundaryMatrix) -> Tuple[int, List[int]]:
    """Eliminate unit pivots sparsely, finish the leftover block densely."""
    cols = {j: dict(c) for j, c in mat.columns.items() if c}
    row_index: Dict[int, set] = defaultdict(set)
    for j, c in cols.items():
        for i in c:
            row_index[i].add(j)
    unit_rank = 0
    progress = True
    while progress:
        progress = False
        for j in sorted(cols):
            col = cols.get(j)
            if not col:
                cols.pop(j, None)
                continue
            units = [i for i, v in col.items() if v in (1, -1)]
            if not units:
                continue
            r = min(units, key=lambda i: (len(row_index[i]), i))
            p = col[r]
            for k in list(row_index[r]):
                if k == j:
                    continue
                ck = cols[k]
                factor = ck[r] * p
                for i, v in col.items():
                    nv = ck.get(i, 0) - factor * v
                    if nv:
                        if i not in ck:
                            row_index[i].add(k)
                        ck[i] = nv
                    elif i in ck:
                        del ck[i]
                        row_index[i].discard(k)
            for i in col:
                row_index[i].discard(j)
            del cols[j]
            unit_rank += 1
            progress = True
    rest = {j: c for j, c in cols.items() if c}
    if not rest:
        return unit_rank, [1] * unit_rank
    live_rows = sorted({i for c in rest.values() for i in c})
    ridx = {r: k for k, r in enumerate(live_rows)}
    dense = [[0] * len(rest) for _ in live_rows]
    for k, (j, c) in enumerate(sorted(rest.items())):
        for i, v in c.items():
            dense[ridx[i]][k] = v
    r, fac = smith_normal_form(dense)
    return unit_rank + r, [1] * unit_rank + fac


def homology(K: Complex) -> HomologyProfile:
    if K.is_empty:
        return HomologyProfile((), ())
    dim = K.dimension
    counts = [len(K.faces(d)) for d in range(dim + 1)]
    ranks = [0] * (dim + 2)
    torsion: List[Tuple[int, ...]] = [()] * (dim + 1)
    for d in range(1, dim + 1):
        r, fac = _sparse_rank_and_factors(boundary_matrix(K, d))
        ranks[d] = r
        torsion[d - 1] = tuple(q for q in fac if q > 1)
    betti = tuple(counts[d] - ranks[d] - ranks[d + 1] for d in range(dim + 1))
    return HomologyProfile(betti, tuple(torsion))


def _trim(profile: HomologyProfile) -> Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]]:
    betti, tors = list(profile.betti), list(profile.torsion)
    while betti and betti[-1] == 0 and not tors[-1]:
        betti.pop()
        tors.pop()
    return tuple(betti), tuple(tors)


def same_homology(a: HomologyProfile, b: HomologyProfile) -> bool:
    """Equality up to trailing zero degrees."""
    return _trim(a) == _trim(b)


def _is_sphere_homology(K: Complex, dim: int) -> bool:
    if dim == 0:
        return len(K.maximal) == 2 and K.dimension == 0
    if K.dimension != dim:
        return False
    if dim == 1:
        adj = K.adjacency()
        return K.is_pure() and all(len(a) == 2 for a in adj.values()) and K.is_connected()
    return same_homology(homology(K), sphere_profile(dim))


@dataclass(frozen=True)
class ManifoldCheck:
    ok: bool
    witness: Optional[Simplex] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_homology_manifold(K: Complex) -> ManifoldCheck:
    """Closed homology manifold test: every link is a homology sphere of the right dimension.

    Raises ``ValueError`` on non-pure input.
    """
    if not K.is_pure():
        raise ValueError("is_homology_manifold needs a pure complex")
    n = K.dimension
    for d in range(n - 1, -1, -1):
        for s in sorted(K.faces(d)):
            if not _is_sphere_homology(link(K, s), n - d - 1):
                return ManifoldCheck(False, s, f"link of {s} is not a homology {n - d - 1}-sphere")
    return ManifoldCheck(True)


def is_generalized_homology_sphere(K: Complex, n: int) -> bool:
    """Whether K is a GHS^(n-1): a homology manifold with the homology of S^(n-1).

    Only homology is certified; nothing is claimed about the fundamental group.
    """
    if n < 1 or K.is_empty or K.dimension != n - 1 or not K.is_pure():
        return False
    if not _is_sphere_homology(K, n - 1):
        return False
    return bool(is_homology_manifold(K))


def is_acyclic(K: Complex) -> bool:
    """Homology of a point."""
    if K.is_empty:
        return False
    return same_homology(homology(K), point_profile(0))
