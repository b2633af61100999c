from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import brute_faces
from strategies import complexes

from hakenkit import (
    Complex,
    SearchBudgetExceeded,
    are_isomorphic,
    barycentric_subdivision,
    cone,
    dual_cone,
    find_isomorphism,
    join,
    link,
    star,
)
from hakenkit.complex import subdivide_subcomplex, subdivision_faces
from hakenkit.corpus import relabel_random, small_complexes
from hakenkit.flag import is_flag
from hakenkit.generators import (
    cross_polytope_boundary,
    cycle,
    full_simplex,
    grid_torus,
    kuhn_grid,
    seven_vertex_torus,
    simplex_boundary,
)


def test_empty_complex_has_only_the_empty_face():
    K = Complex()
    assert K.f_vector == (1,)
    assert K.euler_characteristic() == 0
    assert K.is_empty and K.dimension == -1


def test_redundant_faces_dropped():
    K = Complex([(0, 1, 2), (0, 1), (3,)])
    assert K.maximal == ((0, 1, 2), (3,))
    assert not K.is_pure()


def test_f_vectors_of_standard_complexes():
    assert cycle(5).f_vector == (1, 5, 5)
    assert simplex_boundary(3).f_vector == (1, 4, 6, 4)
    assert cross_polytope_boundary(3).f_vector == (1, 6, 12, 8)
    assert grid_torus(3, 3).f_vector == (1, 9, 27, 18)
    assert join(cycle(4), cycle(4)).f_vector == (1, 8, 24, 32, 16)


def test_face_enumeration_matches_subsets():
    for K in small_complexes().values():
        assert set(K.all_faces()) == brute_faces(K)


def test_link_and_star():
    O = cross_polytope_boundary(3)
    assert are_isomorphic(link(O, (0,)), cycle(4))
    assert star(O, (0,)).f_vector == (1, 5, 8, 4)
    assert link(O, (0, 2)).maximal == ((4,), (5,))
    assert link(O, ()) == O
    with pytest.raises(ValueError):
        link(O, (0, 1))


def test_join_offsets_labels():
    J = join(Complex([(0,), (1,)]), Complex([(0,), (1,)]))
    assert J.maximal == ((0, 2), (0, 3), (1, 2), (1, 3))
    assert join(Complex(), cycle(3)) == cycle(3)


def test_cone_is_contractible_euler():
    assert cone(cycle(6)).euler_characteristic() == 1


def test_barycentric_subdivision_of_triangle():
    sd = barycentric_subdivision(full_simplex(2))
    assert sd.f_vector == (1, 7, 12, 6)
    labels = subdivision_faces(full_simplex(2))
    assert labels[:3] == [(0,), (1,), (2,)]
    assert labels[-1] == (0, 1, 2)


def test_subdivided_subcomplex_is_full():
    K = simplex_boundary(3)
    A = Complex([(0, 1), (1, 2)])
    sub = subdivide_subcomplex(K, A)
    assert sub.is_full_in(barycentric_subdivision(K))
    assert sub.f_vector == (1, 5, 4)


def test_dual_cone_of_vertex_is_cone_on_subdivided_link():
    K = simplex_boundary(3)
    D = dual_cone(K, (0,))
    assert D.f_vector == (1, 7, 12, 6)
    assert D.euler_characteristic() == 1
    assert dual_cone(K, (0, 1, 2)).f_vector == (1, 1)
    with pytest.raises(ValueError):
        dual_cone(K, ())


def test_kuhn_grid_counts():
    K = kuhn_grid((2, 2), (False, False))
    assert K.f_vector == (1, 9, 16, 8)
    with pytest.raises(ValueError):
        kuhn_grid((2,), (True,))


def test_components_and_induced():
    K = Complex([(0, 1), (1, 2), (5, 6)])
    assert len(K.components()) == 2
    assert K.induced((0, 1, 5)).maximal == ((0, 1), (5,))
    assert not Complex([(0, 1), (1, 2), (0, 2)]).is_full_in(full_simplex(2))


def test_isomorphism_finds_a_mapping():
    a, b = join(cycle(4), Complex([(0,), (1,)])), cross_polytope_boundary(3)
    phi = find_isomorphism(a, b)
    assert phi is not None
    assert a.relabel(phi) == b
    assert not are_isomorphic(cycle(5), cycle(6))
    assert not are_isomorphic(simplex_boundary(3), cross_polytope_boundary(3))


def test_isomorphism_budget():
    with pytest.raises(SearchBudgetExceeded):
        find_isomorphism(grid_torus(4, 4), relabel_random(grid_torus(4, 4), 3), node_budget=1)


@settings(max_examples=60, deadline=None)
@given(complexes())
def test_relabel_invariance(K):
    perm = dict(zip(K.vertices, reversed(K.vertices)))
    L = K.relabel(perm)
    assert L.f_vector == K.f_vector
    assert are_isomorphic(K, L)
    assert are_isomorphic(K, K)


@settings(max_examples=60, deadline=None)
@given(complexes(max_vertices=5, max_dim=2), complexes(max_vertices=5, max_dim=2))
def test_join_f_polynomial_is_product(K1, K2):
    f1, f2, fj = K1.f_vector, K2.f_vector, join(K1, K2).f_vector
    conv = [0] * (len(f1) + len(f2) - 1)
    for i, a in enumerate(f1):
        for j, b in enumerate(f2):
            conv[i + j] += a * b
    assert list(fj) == conv


@settings(max_examples=60, deadline=None)
@given(complexes(max_vertices=6, max_dim=2))
def test_subdivision_preserves_euler_and_is_flag(K):
    sd = barycentric_subdivision(K)
    assert sd.euler_characteristic() == K.euler_characteristic()
    assert is_flag(sd)


@settings(max_examples=60, deadline=None)
@given(complexes(), st.data())
def test_link_star_duality(K, data):
    s = data.draw(st.sampled_from(sorted(set(K.all_faces()) - {()})))
    St, Lk = star(K, s), link(K, s)
    # the closed star is the join of the face with its link
    assert St.f_vector == join(Complex([s]), Lk).f_vector
    for t in Lk.all_faces():
        assert tuple(sorted(set(s) | set(t))) in K
        assert not set(s) & set(t)


def test_face_table_matches_combinations():
    K = full_simplex(4)
    assert K.faces(2) == frozenset(combinations(range(5), 3))


def test_subdivision_examples():
    assert barycentric_subdivision(simplex_boundary(2)).f_vector == (1, 6, 6)
    T = seven_vertex_torus()
    assert T.f_vector == (1, 7, 21, 14)
    assert barycentric_subdivision(T).euler_characteristic() == 0
