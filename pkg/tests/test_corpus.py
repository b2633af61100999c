from __future__ import annotations

import pytest

from hakenkit import are_isomorphic, is_flag, is_generalized_homology_sphere, read_complex
from hakenkit.corpus import (
    FAMILIES,
    barycentric_spheres,
    flag_three_spheres,
    generate,
    ghs_corpus,
    join_spheres,
    pattern_corpus,
    relabel_random,
)


def test_join_spheres_are_flag_three_spheres():
    spheres = join_spheres()
    assert len(spheres) == 15
    for name, K in spheres.items():
        assert is_flag(K) and is_generalized_homology_sphere(K, 4), name


def test_barycentric_spheres_are_flag_spheres():
    for name, K in barycentric_spheres().items():
        assert is_flag(K), name
        assert is_generalized_homology_sphere(K, K.dimension + 1), name


def test_corpus_sizes():
    assert len(pattern_corpus()) >= 25
    assert len(flag_three_spheres()) >= 25
    assert len(ghs_corpus()) >= 20


def test_relabel_preserves_isomorphism_type():
    for K in list(join_spheres(4, 5).values()):
        assert are_isomorphic(K, relabel_random(K, 11))


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_generate_every_family(tmp_path, family):
    paths = generate(1, family, tmp_path)
    assert paths
    assert all(p.exists() for p in paths)
    for p in paths:
        if p.suffix == ".cx":
            read_complex(p)


def test_unknown_family(tmp_path):
    with pytest.raises(KeyError):
        generate(0, "nope", tmp_path)
