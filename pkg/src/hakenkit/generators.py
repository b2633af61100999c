"""Standard small triangulations.

Minimum parameters are the smallest values that still give a simplicial
complex (no two simplices with the same vertex set, no loops or multi-edges).
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from typing import Dict, List, Sequence, Tuple

from .complex import Complex, cone, join


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def cycle(p: int) -> Complex:
    """The p-cycle C_p; p >= 3."""
    _require(p >= 3, f"cycle needs p >= 3, got {p}")
    return Complex((i, (i + 1) % p) for i in range(p))


def full_simplex(n: int) -> Complex:
    _require(n >= 0, "simplex dimension must be >= 0")
    return Complex([tuple(range(n + 1))])


def simplex_boundary(n: int) -> Complex:
    """Boundary of the n-simplex, a triangulated (n-1)-sphere; n >= 1."""
    _require(n >= 1, f"simplex_boundary needs n >= 1, got {n}")
    return Complex(combinations(range(n + 1), n))


def cross_polytope_boundary(n: int) -> Complex:
    """Boundary of the n-dimensional cross-polytope; vertices 2i, 2i+1 are antipodal."""
    _require(n >= 1, f"cross_polytope_boundary needs n >= 1, got {n}")
    return Complex(tuple(2 * i + b for i, b in enumerate(bits)) for bits in product((0, 1), repeat=n))


def kuhn_grid(shape: Sequence[int], periodic: Sequence[bool]) -> Complex:
    """Freudenthal-Kuhn triangulation of a box of unit cubes.

    ``shape[i]`` counts cubes along axis i; periodic axes wrap around and need
    at least 3 cubes.  Vertex labels are mixed-radix indices with axis 0 most
    significant.
    """
    n = len(shape)
    _require(len(periodic) == n, "shape and periodic must have the same length")
    for s, per in zip(shape, periodic):
        _require(s >= (3 if per else 1), f"axis with {s} cells is too short (periodic={per})")
    sizes = [s if per else s + 1 for s, per in zip(shape, periodic)]

    def label(x: Sequence[int]) -> int:
        idx = 0
        for xi, size, per in zip(x, sizes, periodic):
            idx = idx * size + (xi % size if per else xi)
        return idx

    sims = []
    for corner in product(*(range(s) for s in shape)):
        for perm in permutations(range(n)):
            x = list(corner)
            verts = [label(x)]
            for axis in perm:
                x[axis] += 1
                verts.append(label(x))
            sims.append(verts)
    return Complex(sims)


def grid_label(x: Sequence[int], shape: Sequence[int], periodic: Sequence[bool]) -> int:
    """Label of the lattice point ``x`` in :func:`kuhn_grid`."""
    idx = 0
    for xi, s, per in zip(x, shape, periodic):
        size = s if per else s + 1
        idx = idx * size + (xi % size if per else xi)
    return idx


def grid_torus(m: int, k: int) -> Complex:
    """m x k torus, each square split along its main diagonal; m, k >= 3."""
    _require(m >= 3 and k >= 3, "grid_torus needs m, k >= 3")
    return kuhn_grid((m, k), (True, True))


def seven_vertex_torus() -> Complex:
    """The minimal torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    return Complex(
        [(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)] + [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
    )


def three_torus(m: int = 3) -> Complex:
    _require(m >= 3, "three_torus needs m >= 3")
    return kuhn_grid((m, m, m), (True, True, True))


def square_grid(m: int, k: int | None = None) -> Complex:
    """Triangulated [0,m] x [0,k] rectangle (a disk)."""
    return kuhn_grid((m, m if k is None else k), (False, False))


def klein_bottle(m: int = 3, k: int = 3) -> Complex:
    """m x k grid glued plainly along the first axis and with a flip along the second.

    Vertex (i, j) has label i*k + j; crossing the seam j = k lands on (-i, 0).
    Columns i = const close up into one-sided circles, rows are two-sided.
    """
    _require(m >= 3 and k >= 3, "klein_bottle needs m, k >= 3")

    def label(i: int, j: int) -> int:
        if j == k:
            i, j = -i, 0
        return (i % m) * k + j

    sims = []
    for i in range(m):
        for j in range(k):
            a, b, c, d = label(i, j), label(i + 1, j), label(i + 1, j + 1), label(i, j + 1)
            sims += [(a, b, c), (a, c, d)]
    return Complex(sims)


def annulus(m: int) -> Complex:
    """Annulus C_m x [0,1]; inner circle 0..m-1, outer circle m..2m-1."""
    _require(m >= 3, "annulus needs m >= 3")
    sims = []
    for i in range(m):
        j = (i + 1) % m
        sims += [(i, j, m + j), (i, m + j, m + i)]
    return Complex(sims)


def mobius_strip() -> Complex:
    """5-vertex Mobius strip; its boundary is the 5-cycle of edges {i, i+2}."""
    return Complex((i, (i + 1) % 5, (i + 2) % 5) for i in range(5))


def projective_plane_6() -> Complex:
    """Minimal 6-vertex real projective plane (half-icosahedron)."""
    return Complex(
        [
            (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
            (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5),
        ]
    )


def disk_polygon(p: int) -> Complex:
    """Cone over C_p: a p-gon disk with boundary vertices 0..p-1 and apex p."""
    return cone(cycle(p))


def genus_two(size: int = 4) -> Tuple[Complex, Dict[str, Dict[Tuple[int, int], int]]]:
    """Connected sum of two ``size`` x ``size`` grid tori.

    The square with lower-left corner (0, 0) is removed from each torus and
    the two square holes are glued along their boundaries.  Returns the
    complex and, per torus ``"A"``/``"B"``, the map from grid point to label.
    """
    _require(size >= 4, "genus_two needs size >= 4")
    hole = {(0, 0), (1, 0), (1, 1), (0, 1)}
    coords: Dict[str, Dict[Tuple[int, int], int]] = {"A": {}, "B": {}}
    nxt = 0
    for i in range(size):
        for j in range(size):
            coords["A"][(i, j)] = nxt
            nxt += 1
    for i in range(size):
        for j in range(size):
            if (i, j) in hole:
                coords["B"][(i, j)] = coords["A"][(i, j)]
            else:
                coords["B"][(i, j)] = nxt
                nxt += 1
    sims = []
    for name in "AB":
        lab = coords[name]
        for i in range(size):
            for j in range(size):
                if (i, j) == (0, 0):
                    continue
                pts = [(i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1)]
                a, b, c, d = (lab[(x % size, y % size)] for x, y in pts)
                sims += [(a, b, c), (a, c, d)]
    return Complex(sims), coords


def join_of_cycles(m: int, n: int) -> Complex:
    return join(cycle(m), cycle(n))
