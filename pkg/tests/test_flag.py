from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from oracles import brute_faces, brute_is_flag, brute_minimal_non_faces
from strategies import complexes

from hakenkit import (
    Complex,
    Dyadic,
    barycentric_subdivision,
    certify_haken_cell_dual,
    charney_davis,
    flag_report,
    is_flag,
    is_flag_via_links,
    join,
    link,
)
from hakenkit.corpus import ghs_corpus, small_complexes
from hakenkit.flag import has_empty_triangle
from hakenkit.generators import cross_polytope_boundary, cycle, simplex_boundary


def test_cycles():
    assert flag_report(cycle(3)).empty_triangles == ((0, 1, 2),)
    assert is_flag(cycle(4))
    assert charney_davis(cycle(5)) == Dyadic(-1, 2)
    assert str(charney_davis(cycle(5))) == "-1/2^2"


def test_simplex_boundary_minimal_non_face_is_the_whole_simplex():
    rep = flag_report(simplex_boundary(4))
    assert rep.minimal_non_faces == ((0, 1, 2, 3, 4),)
    assert rep.empty_triangles == ()
    assert not has_empty_triangle(simplex_boundary(4))
    # the link of the empty face is the whole complex; links of vertices are boundaries of 3-simplices
    assert not is_flag_via_links(simplex_boundary(4))


def test_lambda_values():
    assert charney_davis(Complex()) == 1
    assert charney_davis(cross_polytope_boundary(4)) == 0
    assert charney_davis(cycle(4)) == 0
    assert charney_davis(join(cycle(5), cycle(5))) == Dyadic(1, 4)


def test_lambda_multiplicative_on_joins():
    for a in (cycle(3), cycle(6), cross_polytope_boundary(3)):
        for b in (cycle(5), simplex_boundary(3)):
            assert charney_davis(join(a, b)) == charney_davis(a) * charney_davis(b)


def test_three_flag_checks_agree_on_corpus():
    for name, K in small_complexes().items():
        assert flag_report(K).is_flag == is_flag_via_links(K) == brute_is_flag(K), name


@settings(max_examples=80, deadline=None)
@given(complexes(max_vertices=7, max_dim=3))
def test_three_flag_checks_agree_random(K):
    rep = flag_report(K)
    assert rep.is_flag == is_flag_via_links(K) == brute_is_flag(K)
    assert list(rep.minimal_non_faces) == sorted(brute_minimal_non_faces(K), key=lambda s: (len(s), s))


def test_links_of_flag_complexes_are_flag():
    for name, K in list(small_complexes().items()) + list(ghs_corpus().items()):
        if not is_flag(K):
            continue
        for s in brute_faces(K):
            assert is_flag(link(K, s)), (name, s)


def test_certificates():
    assert certify_haken_cell_dual(cycle(4), 2).haken
    c3 = certify_haken_cell_dual(cycle(3), 2)
    assert c3.ghs and not c3.flag and not c3.haken
    assert not certify_haken_cell_dual(simplex_boundary(3), 3).haken
    assert certify_haken_cell_dual(barycentric_subdivision(simplex_boundary(3)), 3).haken
    # right homology sphere, wrong dimension
    assert not certify_haken_cell_dual(cycle(5), 3).ghs


def test_lambda_of_joins_of_cycles():
    for m in range(3, 9):
        for n in range(3, 9):
            lam = charney_davis(join(cycle(m), cycle(n))).to_fraction()
            assert lam == (1 - Fraction(m, 4)) * (1 - Fraction(n, 4))
