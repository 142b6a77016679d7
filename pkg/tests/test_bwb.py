"""Bott cohomology on G(n, 2n+1): anchors, walks, duality."""

import random

import pytest

from cypairs.bwb import (
    Bundle,
    bott,
    bott_by_reflections,
    canonicalize,
    cohomology,
    serre_dual,
    simple_reflection,
    to_weight,
)
from cypairs.partitions import partitions_of


def pd(res):
    """(degree, dim) view of a cohomology result."""
    return None if res is None else (res.degree, res.dim)


# ------------------------------------------------------------ fixed anchors


def test_line_bundle_sections():
    # O(1) on G(2,5) is the Pluecker polarization: 10 sections
    assert pd(cohomology(Bundle((), (), 1), 2)) == (0, 10)


def test_adjoint_bundles():
    assert pd(cohomology(Bundle((1,), (1,), 0), 2)) == (0, 24)
    assert pd(cohomology(Bundle((1,), (1,), 0), 3)) == (0, 48)


def test_canonical_bundle_top_cohomology():
    # K = O(-2n-1); top degree is dim G = n(n+1)
    assert pd(cohomology(Bundle((), (), -5), 2)) == (6, 1)
    assert pd(cohomology(Bundle((), (), -7), 3)) == (12, 1)


def test_wedge_q_twisted():
    assert pd(cohomology(Bundle((), (1, 1), 1), 2)) == (0, 75)


def test_interior_degree_singletons():
    assert pd(cohomology(Bundle((1,), (1, 1), -2), 2)) == (1, 1)
    assert pd(cohomology(Bundle((), (2, 2), -3), 2)) == (2, 1)
    assert pd(cohomology(Bundle((1,), (1,), -7), 3)) == (11, 1)


def test_tautological_sections():
    for n in (1, 2, 3, 4):
        assert pd(cohomology(Bundle((), (1,), 0), n)) == (0, 2 * n + 1)
        assert pd(cohomology(Bundle((1,), (), 0), n)) == (0, 2 * n + 1)


def test_acyclic_twists():
    # O(-j) has no cohomology for 1 <= j <= 2n
    for n in (1, 2, 3):
        for j in range(1, 2 * n + 1):
            assert cohomology(Bundle((), (), -j), n) is None
    assert cohomology(Bundle((), (1,), -1), 2) is None


# ---------------------------------------------------------------- the walk


def test_simple_reflection_action():
    assert simple_reflection((1, -4, 2), 2) == (-3, 4, -2)
    assert simple_reflection((5, 2), 1) == (-5, 7)
    with pytest.raises(ValueError):
        simple_reflection((1, 2), 3)


def test_simple_reflection_is_involutive():
    rng = random.Random(1)
    for _ in range(50):
        f = tuple(rng.randint(-5, 5) for _ in range(rng.randint(2, 7)))
        for i in range(1, len(f) + 1):
            assert simple_reflection(simple_reflection(f, i), i) == f


def test_three_step_walk():
    # leftmost-negative walk from (1, 1, -4, 2, 2, 1): the first three
    # reflections land on (2, 1, 1, -2, 2, 1)
    f = (1, 1, -4, 2, 2, 1)
    for _ in range(3):
        i = next(k for k, x in enumerate(f) if x < 0)
        f = simple_reflection(f, i + 1)
    assert f == (2, 1, 1, -2, 2, 1)


def test_sort_and_walk_agree():
    rng = random.Random(7)
    zeros = 0
    for _ in range(400):
        N = rng.randint(3, 8)
        w = tuple(rng.randint(-8, 8) for _ in range(N))
        a = bott(w)
        b = bott_by_reflections(w)
        assert a == b, w
        zeros += a is None
    assert 0 < zeros < 400  # the sample hits both outcomes


def test_bott_on_dominant_weight_is_identity():
    assert bott((3, 1, 0, -2)) == (0, (3, 1, 0, -2))
    assert bott((0, 0, 0)) == (0, (0, 0, 0))


# --------------------------------------------------------- representations


def test_to_weight_layout():
    assert to_weight(Bundle((2, 1), (3, 1, 1), 2), 2) == (3, 1, 1, -3, -4)
    assert to_weight(Bundle((), (), 0), 3) == (0,) * 7
    with pytest.raises(ValueError):
        to_weight(Bundle((1, 1, 1), (), 0), 2)


def test_canonicalize_strips_full_columns():
    assert canonicalize(Bundle((2, 2), (1, 1, 1), 0), 2) == Bundle((), (), 3)
    assert canonicalize(Bundle((3, 1), (2, 1), -1), 2) == Bundle((2,), (2, 1), 0)
    with pytest.raises(ValueError):
        canonicalize(Bundle((), (1,) * 4, 0), 2)


def test_canonicalization_preserves_cohomology():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(2, 4)
        u = tuple(sorted((rng.randint(0, 4) for _ in range(n)), reverse=True))
        q = tuple(sorted((rng.randint(0, 4) for _ in range(n + 1)), reverse=True))
        b = Bundle(u, q, rng.randint(-2 * n - 3, 2 * n + 3))
        assert pd(cohomology(b, n)) == pd(cohomology(canonicalize(b, n), n))


# ---------------------------------------------------------------- duality


def random_bundle(rng, n, max_boxes=4, max_twist=None):
    if max_twist is None:
        max_twist = 2 * n + 3
    pool_u = [()] + [p for w in range(1, max_boxes + 1) for p in partitions_of(w, max_rows=n)]
    pool_q = [()] + [
        p for w in range(1, max_boxes + 1) for p in partitions_of(w, max_rows=n + 1)
    ]
    return Bundle(
        rng.choice(pool_u), rng.choice(pool_q), rng.randint(-max_twist, max_twist)
    )


def test_serre_dual_of_structure_sheaf():
    assert serre_dual(Bundle((), (), 0), 2) == Bundle((), (), -5)
    assert serre_dual(Bundle((), (), -5), 2) == Bundle((), (), 0)


def test_serre_dual_is_involutive():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(1, 4)
        b = random_bundle(rng, n)
        assert serre_dual(serre_dual(b, n), n) == canonicalize(b, n)


def test_serre_duality_pairs_cohomology():
    rng = random.Random(13)
    seen = 0
    for _ in range(200):
        n = rng.randint(2, 4)
        b = random_bundle(rng, n)
        c = cohomology(b, n)
        d = cohomology(serre_dual(b, n), n)
        assert (c is None) == (d is None)
        if c is not None:
            assert d.degree == n * (n + 1) - c.degree
            assert d.dim == c.dim
            seen += 1
    assert seen > 50
