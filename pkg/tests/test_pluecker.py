"""Exact linear algebra behind the section-symmetry probe."""

import random
from fractions import Fraction

from cypairs.pluecker import (
    as_matrix,
    compound,
    det,
    identity,
    inverse,
    mat_mul,
    mat_vec,
    pluecker_embed,
    section_eval,
    symmetry_obstruction_probe,
    transpose,
    transposition_action,
)


def random_matrix(rng, rows, cols, lo=-5, hi=5):
    return as_matrix(
        [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]
    )


def random_invertible(rng, d):
    while True:
        m = random_matrix(rng, d, d, -3, 3)
        if det(m):
            return m


def test_det_known_values():
    assert det([[1, 2], [3, 4]]) == -2
    assert det([[2, 0, 1], [1, 1, 0], [0, 3, 1]]) == 5
    assert det([[1, 2], [2, 4]]) == 0
    assert det(identity(6)) == 1


def test_det_is_multiplicative_and_transpose_invariant():
    rng = random.Random(11)
    for _ in range(40):
        d = rng.randint(1, 5)
        a = random_matrix(rng, d, d)
        b = random_matrix(rng, d, d)
        assert det(mat_mul(a, b)) == det(a) * det(b)
        assert det(transpose(a)) == det(a)


def test_inverse_round_trip_and_singular_rejection():
    rng = random.Random(23)
    for _ in range(30):
        d = rng.randint(1, 5)
        a = random_invertible(rng, d)
        assert mat_mul(a, inverse(a)) == identity(d)
        assert mat_mul(inverse(a), a) == identity(d)
    try:
        inverse([[1, 2], [2, 4]])
    except ValueError:
        pass
    else:
        assert False, "singular matrix must be rejected"


def test_compound_edge_orders():
    rng = random.Random(5)
    a = random_matrix(rng, 4, 4)
    assert compound(a, 1) == a
    assert compound(a, 4) == ((det(a),),)
    assert compound(a, 0) == ((Fraction(1),),)
    for k in range(5):
        assert compound(identity(4), k) == identity(len(compound(a, k)))


def test_compound_is_functorial():
    # Cauchy-Binet: the compound of a product is the product of compounds,
    # including rectangular factors.
    rng = random.Random(71)
    for _ in range(50):
        m = rng.randint(2, 5)
        p = rng.randint(2, 5)
        q = rng.randint(2, 5)
        k = rng.randint(1, min(m, p, q))
        a = random_matrix(rng, m, p)
        b = random_matrix(rng, p, q)
        assert compound(mat_mul(a, b), k) == mat_mul(compound(a, k), compound(b, k))
        assert compound(transpose(a), k) == transpose(compound(a, k))


def test_pluecker_embed_coordinate_plane():
    # span(e0, e1) in 4-space: only the (0,1) coordinate survives.
    coords = pluecker_embed([[1, 0, 0, 0], [0, 1, 0, 0]])
    assert coords == (1, 0, 0, 0, 0, 0)
    try:
        pluecker_embed([[1, 2, 0], [2, 4, 0]])
    except ValueError:
        pass
    else:
        assert False, "dependent rows must be rejected"


def test_pluecker_embed_row_operations_rescale():
    rng = random.Random(37)
    for _ in range(30):
        n, big = rng.randint(1, 3), rng.randint(4, 6)
        a = random_matrix(rng, n, big)
        g = random_invertible(rng, n)
        try:
            coords = pluecker_embed(a)
        except ValueError:
            continue
        scaled = pluecker_embed(mat_mul(g, a))
        assert scaled == tuple(det(g) * c for c in coords)


def test_pluecker_embed_is_equivariant():
    # Acting on the ambient space transforms the coordinates through the
    # transposed compound matrix.
    rng = random.Random(41)
    checked = 0
    while checked < 50:
        n, big = rng.randint(1, 3), rng.randint(4, 6)
        a = random_matrix(rng, n, big)
        g = random_invertible(rng, big)
        try:
            coords = pluecker_embed(a)
        except ValueError:
            continue
        moved = pluecker_embed(mat_mul(a, g))
        assert moved == mat_vec(transpose(compound(g, n)), coords)
        checked += 1


def test_pluecker_quadric_relation():
    # For planes in 4-space the coordinates satisfy the classical quadric
    # p01 p23 - p02 p13 + p03 p12 = 0; this pins the lexicographic indexing.
    rng = random.Random(53)
    checked = 0
    while checked < 40:
        a = random_matrix(rng, 2, 4)
        try:
            p = pluecker_embed(a)
        except ValueError:
            continue
        assert p[0] * p[5] - p[1] * p[4] + p[2] * p[3] == 0
        checked += 1


def test_section_eval_matches_explicit_sum():
    s = as_matrix([[1, 2], [3, 4]])
    assert section_eval(s, (1, 0), (0, 1)) == 3
    assert section_eval(s, (1, 1), (1, 1)) == 10
    rng = random.Random(67)
    for _ in range(20):
        d = rng.randint(1, 4)
        s = random_matrix(rng, d, d)
        x = tuple(Fraction(rng.randint(-5, 5)) for _ in range(d))
        y = tuple(Fraction(rng.randint(-5, 5)) for _ in range(d))
        explicit = sum(
            y[i] * s[i][j] * x[j] for i in range(d) for j in range(d)
        )
        assert section_eval(s, x, y) == explicit


def test_transposition_action_is_the_pullback():
    # The twisted section evaluated at (x, y) agrees with the original
    # section evaluated at the swapped images (M^{-T} y, M x), exactly.
    rng = random.Random(83)
    for _ in range(50):
        d = rng.randint(2, 5)
        s = random_matrix(rng, d, d)
        m = random_invertible(rng, d)
        minv_t = transpose(inverse(m))
        x = tuple(Fraction(rng.randint(-4, 4)) for _ in range(d))
        y = tuple(Fraction(rng.randint(-4, 4)) for _ in range(d))
        twisted = transposition_action(s, m)
        assert section_eval(twisted, x, y) == section_eval(
            s, mat_vec(minv_t, y), mat_vec(m, x)
        )


def test_transposition_action_involutive_for_symmetric_twist():
    rng = random.Random(97)
    for _ in range(25):
        d = rng.randint(2, 4)
        s = random_matrix(rng, d, d)
        while True:
            half = random_matrix(rng, d, d, -3, 3)
            m = mat_mul(half, transpose(half))
            if det(m):
                break
        assert transposition_action(transposition_action(s, m), m) == s


def test_symmetry_probe_reports_obstruction():
    probe = symmetry_obstruction_probe(2, trials=20, seed=0)
    assert probe["ambient_size"] == 10
    assert probe["hits"] == 0
    assert probe["identity_control_hits"] == 20
    assert (probe["flag_dimension"], probe["group_dimension"]) == (45, 25)
    assert probe["gap_holds"] and probe["obstructed"]
    # deterministic under the seed
    assert probe == symmetry_obstruction_probe(2, trials=20, seed=0)


def test_symmetry_probe_degenerate_case_is_honest():
    # At n = 1 the flag of the ambient is smaller than the group, so no
    # obstruction is claimed even though random sections still miss.
    probe = symmetry_obstruction_probe(1, trials=10, seed=3)
    assert not probe["gap_holds"]
    assert not probe["obstructed"]
    assert probe["identity_control_hits"] == 10
