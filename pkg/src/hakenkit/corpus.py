"""Named example families: sphere and complex corpora, patterns, cut pairs and ledgers.

Every builder is deterministic.  ``generate`` writes a family to disk; seed 0
keeps canonical labels, any other seed applies a seeded random relabeling.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from .complex import Complex, barycentric_subdivision, join
from .generators import (
    annulus,
    cross_polytope_boundary,
    cycle,
    full_simplex,
    genus_two,
    grid_label,
    grid_torus,
    klein_bottle,
    mobius_strip,
    projective_plane_6,
    simplex_boundary,
    three_torus,
)
from .pattern import (
    PatternedComplex,
    annulus_pattern,
    bigon_disk,
    box_cell,
    cell_from_flag_sphere,
    closed_pattern,
    cube_cell,
    hemisphere_disk,
    make_pattern,
    polygon_cell,
)
from .surgery import cut_open_with_record

# -- complexes -----------------------------------------------------------------


def join_spheres(lo: int = 4, hi: int = 8) -> Dict[str, Complex]:
    """C_m * C_n for lo <= m <= n <= hi."""
    return {f"join-c{m}-c{n}": join(cycle(m), cycle(n)) for m in range(lo, hi + 1) for n in range(m, hi + 1)}


def barycentric_spheres() -> Dict[str, Complex]:
    out = {
        "sd-bd-simplex-2": barycentric_subdivision(simplex_boundary(2)),
        "sd-bd-simplex-3": barycentric_subdivision(simplex_boundary(3)),
        "sd-bd-simplex-4": barycentric_subdivision(simplex_boundary(4)),
        "sd-octahedron": barycentric_subdivision(cross_polytope_boundary(3)),
        "sd-c5": barycentric_subdivision(cycle(5)),
    }
    for m, n in ((3, 3), (3, 4), (4, 4)):
        out[f"sd-join-c{m}-c{n}"] = barycentric_subdivision(join(cycle(m), cycle(n)))
    return out


def ghs_corpus() -> Dict[str, Complex]:
    """Generalized homology spheres of dimension 1, 2 and 3."""
    out: Dict[str, Complex] = {"s0": cross_polytope_boundary(1)}
    for p in range(3, 9):
        out[f"c{p}"] = cycle(p)
    for n in (2, 3, 4):
        out[f"bd-simplex-{n}"] = simplex_boundary(n)
    for n in (2, 3, 4):
        out[f"cross-{n}"] = cross_polytope_boundary(n)
    out["octahedron"] = cross_polytope_boundary(3)
    for m, n in ((3, 3), (3, 4), (4, 4), (4, 5), (5, 5)):
        out[f"join-c{m}-c{n}"] = join(cycle(m), cycle(n))
    out.update(
        {
            "sd-bd-simplex-2": barycentric_subdivision(simplex_boundary(2)),
            "sd-bd-simplex-3": barycentric_subdivision(simplex_boundary(3)),
            "sd-octahedron": barycentric_subdivision(cross_polytope_boundary(3)),
            "sd-c4": barycentric_subdivision(cycle(4)),
        }
    )
    return out


def flag_three_spheres() -> Dict[str, Complex]:
    """Flag 3-spheres: joins of cycles, their subdivisions and the subdivided 4-simplex boundary."""
    out = join_spheres(4, 8)
    out["cross-4"] = cross_polytope_boundary(4)
    out["sd-bd-simplex-4"] = barycentric_subdivision(simplex_boundary(4))
    for m, n in ((3, 3), (3, 4), (3, 5), (4, 4), (4, 5), (5, 5)):
        out[f"sd-join-c{m}-c{n}"] = barycentric_subdivision(join(cycle(m), cycle(n)))
    s0 = cross_polytope_boundary(1)
    out["susp-sd-bd-simplex-3"] = join(s0, barycentric_subdivision(simplex_boundary(3)))
    out["susp-sd-octahedron"] = join(s0, barycentric_subdivision(cross_polytope_boundary(3)))
    return out


def small_complexes() -> Dict[str, Complex]:
    """Assorted complexes with at most 16 vertices, flag and non-flag."""
    out: Dict[str, Complex] = {}
    for p in range(3, 9):
        out[f"c{p}"] = cycle(p)
    for n in range(1, 5):
        out[f"simplex-{n}"] = full_simplex(n)
        out[f"bd-simplex-{n}"] = simplex_boundary(n)
    for n in range(1, 5):
        out[f"cross-{n}"] = cross_polytope_boundary(n)
    for m, n in ((3, 3), (3, 4), (4, 4), (4, 5), (5, 5), (4, 6), (6, 6)):
        out[f"join-c{m}-c{n}"] = join(cycle(m), cycle(n))
    out["torus-3x3"] = grid_torus(3, 3)
    out["torus-4x4"] = grid_torus(4, 4)
    out["klein-3x3"] = klein_bottle(3, 3)
    out["rp2"] = projective_plane_6()
    out["mobius"] = mobius_strip()
    out["annulus-4"] = annulus(4)
    out["sd-bd-simplex-2"] = barycentric_subdivision(simplex_boundary(2))
    out["sd-c5"] = barycentric_subdivision(cycle(5))
    out["two-triangles"] = Complex([(0, 1, 2), (2, 3, 4)])
    out["bowtie-edge"] = Complex([(0, 1, 2), (1, 2, 3), (3, 4)])
    out["points"] = Complex([(0,), (1,), (2,)])
    return {k: v for k, v in out.items() if len(v.vertices) <= 16}


def known_homology() -> Dict[str, Tuple[Complex, Tuple[int, ...], Dict[int, Tuple[int, ...]]]]:
    """Complex, Betti numbers and torsion for spaces with classical homology."""
    out = {}
    for n in range(1, 6):
        out[f"bd-simplex-{n}"] = (simplex_boundary(n), (1,) + (0,) * (n - 2) + (1,) if n > 1 else (2,), {})
    out["rp2"] = (projective_plane_6(), (1, 0, 0), {1: (2,)})
    out["torus"] = (grid_torus(3, 3), (1, 2, 1), {})
    out["klein"] = (klein_bottle(3, 3), (1, 1, 0), {1: (2,)})
    out["three-torus"] = (three_torus(3), (1, 3, 3, 1), {})
    out["genus-two"] = (genus_two(4)[0], (1, 4, 1), {})
    return out


# -- patterns --------------------------------------------------------------------


def pattern_corpus() -> Dict[str, PatternedComplex]:
    """At least 25 patterned complexes of dimensions 1, 2 and 3."""
    out: Dict[str, PatternedComplex] = {}
    for p in range(3, 13):
        out[f"polygon-{p}"] = polygon_cell(p)
    for n in (1, 2, 3):
        out[f"cube-{n}"] = cube_cell(n)
    out["box-2x3"] = box_cell((2, 3))
    out["box-3x3"] = box_cell((3, 3))
    for name, L in (
        ("cell-c4", cycle(4)),
        ("cell-c5", cycle(5)),
        ("cell-octahedron", cross_polytope_boundary(3)),
        ("cell-bd-simplex-3", simplex_boundary(3)),
    ):
        out[name] = cell_from_flag_sphere(L)
    out["hemisphere-4"] = hemisphere_disk(4)
    out["bigon-6"] = bigon_disk(6)
    out["annulus-4"] = annulus_pattern(4)
    M = mobius_strip()
    out["mobius"] = make_pattern(M, {"rim": _boundary(M)})
    out["closed-torus"] = closed_pattern(grid_torus(3, 3))
    out["closed-klein"] = closed_pattern(klein_bottle(3, 3))
    out["closed-rp2"] = closed_pattern(projective_plane_6())
    out["closed-sphere"] = closed_pattern(simplex_boundary(3))
    out["closed-circle"] = closed_pattern(cycle(4))
    return out


def big_pattern_corpus() -> Dict[str, PatternedComplex]:
    """Larger patterns kept out of the default corpus for speed."""
    return {
        "cube-4": cube_cell(4),
        "cell-join-c4-c4": cell_from_flag_sphere(join(cycle(4), cycle(4))),
    }


def _boundary(K: Complex) -> Complex:
    from .pattern import boundary_complex

    return boundary_complex(K)


# -- cut pairs -------------------------------------------------------------------------


def _torus_row(m: int, k: int, j: int = 0) -> Complex:
    return grid_torus(m, k).induced(grid_label((i, j), (m, k), (True, True)) for i in range(m))


def cut_pairs() -> Dict[str, Tuple[PatternedComplex, Complex]]:
    """(pattern, locus) pairs with valid cuts."""
    out: Dict[str, Tuple[PatternedComplex, Complex]] = {}
    T = closed_pattern(grid_torus(3, 3))
    out["torus/circle"] = (T, _torus_row(3, 3))
    T4 = closed_pattern(grid_torus(4, 4))
    out["torus4/circle"] = (T4, _torus_row(4, 4, 1))
    # the diagonal circle (i, i) is another essential simple closed curve
    out["torus4/diagonal"] = (T4, T4.carrier.induced(grid_label((i, i), (4, 4), (True, True)) for i in range(4)))
    A = annulus_pattern(4)
    out["annulus/arc"] = (A, Complex([(0, 4)]))
    K = closed_pattern(klein_bottle(3, 3))
    out["klein/one-sided"] = (K, K.carrier.induced((0, 1, 2)))
    out["klein/two-sided"] = (K, K.carrier.induced((1, 4, 7)))
    R = closed_pattern(projective_plane_6())
    out["rp2/one-sided"] = (R, R.carrier.induced((0, 1, 3)))
    S = closed_pattern(cross_polytope_boundary(3))
    out["sphere/equator"] = (S, S.carrier.induced((0, 1, 2, 3)))
    sq = box_cell((3, 3))
    out["square/corner-arc"] = (sq, sq.carrier.induced((1, 5, 4)))
    out["square/middle-arc"] = (sq, sq.carrier.induced((1, 5, 9, 13)))
    out["box-2x3/arc"] = (box_cell((2, 3)), Complex([(1, 5), (5, 9)]))
    out["hemisphere/chord"] = (hemisphere_disk(4), Complex([(0, 4), (2, 4)]))
    T3 = closed_pattern(three_torus(3))
    out["three-torus/plane"] = (T3, T3.carrier.induced(v for v in T3.carrier.vertices if v % 3 == 0))
    return out


# -- ledgers -----------------------------------------------------------------------------


@dataclass(frozen=True)
class LedgerPlan:
    """An initial pattern plus the cut loci, each in the labels of its own step."""

    initial: PatternedComplex
    cuts: Tuple[Complex, ...]
    expected_sum: int


def _plan(initial: PatternedComplex, origin_sets: Sequence[Iterable[int]]) -> Tuple[Complex, ...]:
    """Turn loci described by initial-carrier vertex sets into per-step loci.

    Locus k is the top-dimensional part of the subcomplex of the k-th carrier
    induced on the vertices whose initial origin lies in the k-th set.
    """
    n = initial.n
    P = initial
    origin = {v: v for v in P.carrier.vertices}
    cuts = []
    for k, vs in enumerate(origin_sets):
        vs = set(vs)
        F = P.carrier.induced(w for w, o in origin.items() if o in vs)
        F = Complex(s for s in F.maximal if len(s) == n)
        cuts.append(F)
        rec = cut_open_with_record(P, F, name=f"F{k}")
        origin = {w: origin[u] for w, u in rec.origin.items()}
        P = rec.result
    return tuple(cuts)


def torus_ledger(m: int = 3) -> LedgerPlan:
    """Torus cut along a row circle, then along a column arc: one square cell."""
    shape, per = (m, m), (True, True)
    T = closed_pattern(grid_torus(m, m))
    row = [grid_label((i, 0), shape, per) for i in range(m)]
    col = [grid_label((0, j), shape, per) for j in range(m)]
    return LedgerPlan(T, _plan(T, [row, col]), 0)


def klein_ledger() -> LedgerPlan:
    """Klein bottle cut along a one-sided column circle (Mobius band), then across it."""
    K = closed_pattern(klein_bottle(3, 3))
    col = [0, 1, 2]
    row = [i * 3 + 1 for i in range(3)]
    return LedgerPlan(K, _plan(K, [col, row]), 0)


def genus_two_ledger() -> LedgerPlan:
    """Genus-2 surface: a circle and an arc in each handle, then one arc through the neck.

    The result is a single disk whose boundary carries 12 facets, so the sum of
    Charney-Davis quantities is 1 - 12/4 = -2.
    """
    K, coords = genus_two(4)
    P = closed_pattern(K)
    A, B = coords["A"], coords["B"]
    cuts = [
        [A[(i, 3)] for i in range(4)],
        [A[(3, j)] for j in range(4)],
        [B[(i, 3)] for i in range(4)],
        [B[(3, j)] for j in range(4)],
        [A[(2, 3)], A[(2, 2)], A[(1, 1)], B[(2, 2)], B[(2, 3)]],
    ]
    return LedgerPlan(P, _plan(P, cuts), -2)


def three_torus_ledger() -> LedgerPlan:
    """3-torus cut along the coordinate planes z = 0, x = 0, y = 0: one cube cell."""
    T = closed_pattern(three_torus(3))
    shape, per = (3, 3, 3), (True, True, True)
    pts = [(x, y, z) for x in range(3) for y in range(3) for z in range(3)]

    def plane(axis: int) -> List[int]:
        return [grid_label(p, shape, per) for p in pts if p[axis] == 0]

    return LedgerPlan(T, _plan(T, [plane(2), plane(0), plane(1)]), 0)


LEDGERS: Dict[str, Callable[[], LedgerPlan]] = {
    "torus": torus_ledger,
    "klein": klein_ledger,
    "genus-two": genus_two_ledger,
    "three-torus": three_torus_ledger,
}


# -- file generation -----------------------------------------------------------------


def relabel_random(K: Complex, seed: int) -> Complex:
    rng = random.Random(seed)
    vs = list(K.vertices)
    perm = vs[:]
    rng.shuffle(perm)
    return K.relabel(dict(zip(vs, perm)))


def _complex_family(builder: Callable[[], Dict[str, Complex]]):
    def write(out: Path, seed: int) -> List[Path]:
        from .io import write_complex

        paths = []
        for name, K in sorted(builder().items()):
            if seed:
                K = relabel_random(K, seed)
            p = out / f"{name}.cx"
            write_complex(K, p)
            paths.append(p)
        return paths

    return write


def _polygon_family(out: Path, seed: int) -> List[Path]:
    from .io import write_pattern

    paths = []
    for p in range(3, 13):
        path = out / f"polygon-{p:02d}.pattern"
        write_pattern(polygon_cell(p), path)
        paths.append(path)
    return paths


def _pattern_family(out: Path, seed: int) -> List[Path]:
    from .io import write_pattern

    paths = []
    for name, P in sorted(pattern_corpus().items()):
        path = out / f"{name}.pattern"
        write_pattern(P, path)
        paths.append(path)
    return paths


def _ledger_family(out: Path, seed: int) -> List[Path]:
    from .io import write_ledger, write_pattern

    paths = []
    for name, build in sorted(LEDGERS.items()):
        plan = build()
        write_pattern(plan.initial, out / f"{name}.pattern")
        write_ledger(plan.cuts, out / f"{name}.ledger")
        paths += [out / f"{name}.pattern", out / f"{name}.ledger"]
    return paths


FAMILIES: Dict[str, Callable[[Path, int], List[Path]]] = {
    "join-spheres": _complex_family(join_spheres),
    "barycentric-spheres": _complex_family(barycentric_spheres),
    "ghs": _complex_family(ghs_corpus),
    "small": _complex_family(small_complexes),
    "polygon-cells": _polygon_family,
    "patterns": _pattern_family,
    "ledgers": _ledger_family,
}


def generate(seed: int, family: str, out: Path | str) -> List[Path]:
    """Write one family to ``out``; returns the written paths in sorted order."""
    if family not in FAMILIES:
        raise KeyError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    return FAMILIES[family](out, seed)
