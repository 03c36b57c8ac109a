import random
from fractions import Fraction
from itertools import combinations

import pytest

from minkpair.core import (
    Cone2,
    Cone3,
    GeometryError,
    ccw_compare,
    cone_strictly_feasible,
    dot,
    in_polar_interior,
    linear_feasible,
    normalize_direction,
    vscale,
)
from conftest import rand_direction


def test_normalize_direction_examples():
    assert normalize_direction((4, -6)) == (2, -3)
    assert normalize_direction((0, 5)) == (0, 1)
    assert normalize_direction((2, 2, -4)) == (1, 1, -2)


def test_normalize_direction_rejects_zero():
    with pytest.raises(GeometryError):
        normalize_direction((0, 0))


def test_normalize_direction_rational_input():
    assert normalize_direction((Fraction(1, 2), Fraction(-3, 4))) == (2, -3)


def test_normalize_scaling_invariance():
    rng = random.Random(7)
    dirs = [rand_direction(rng) for _ in range(8)] + [(1, 0), (0, -1), (3, -7)]
    for u in dirs:
        for k in range(1, 1001):
            assert normalize_direction(vscale(k, u)) == u


def test_ccw_compare_examples():
    assert ccw_compare((1, 0), (0, 1), (1, 0)) == -1
    assert ccw_compare((0, -1), (0, 1), (1, 0)) == 1
    assert ccw_compare((3, 4), (3, 4), (1, 0)) == 0


def test_ccw_compare_total_order():
    rng = random.Random(3)
    start = (2, -1)
    dirs = list({rand_direction(rng, 9) for _ in range(200)})[:100]
    for u, v in combinations(dirs, 2):
        duv = ccw_compare(u, v, start)
        dvu = ccw_compare(v, u, start)
        assert duv in (-1, 1) and duv == -dvu
    ranked = sorted(dirs, key=lambda d: [ccw_compare(d, e, start) < 0 for e in dirs].count(True))
    for a, b, c in zip(ranked, ranked[1:], ranked[2:]):
        if ccw_compare(a, b, start) == -1 and ccw_compare(b, c, start) == -1:
            assert ccw_compare(a, c, start) == -1


def test_polar_interior_examples():
    V = Cone2.from_generators([(-1, -1), (-1, 1)])
    assert in_polar_interior((1, 0), V)
    assert not in_polar_interior((0, 1), V)
    assert in_polar_interior((5, -3), Cone2(()))


def test_polar_interior_implies_negative_pairing():
    rng = random.Random(11)
    V = Cone2.from_generators([(-2, -1), (-1, 3)])
    for _ in range(200):
        u = rand_direction(rng)
        if not in_polar_interior(u, V):
            continue
        a, b = rng.randint(0, 5), rng.randint(0, 5)
        v = tuple(a * g1 + b * g2 for g1, g2 in zip(*V.gens))
        if v != (0, 0):
            assert dot(u, v) < 0


def test_cone_strictly_feasible_examples():
    # x > 0 and -x > 0 simultaneously: impossible
    assert not cone_strictly_feasible([((-1, 0), "<"), ((1, 0), "<")])
    # x > 0 alone in two variables
    assert cone_strictly_feasible([((-1, 0), "<")])
    # x+y > 0, x-y > 0, -x >= 0: adding the first two forces x > 0
    assert not cone_strictly_feasible([((-1, -1), "<"), ((-1, 1), "<"), ((1, 0), "<=")])


def test_linear_feasible_affine():
    # 0 <= x <= 1, x >= 2 is empty; x >= 1/2 inside is fine
    assert not linear_feasible([((1,), "<=", 1), ((-1,), "<=", 0), ((-1,), "<=", -2)], 1)
    assert linear_feasible([((1,), "<=", 1), ((-1,), "<=", Fraction(-1, 2))], 1)
    # strict corner: x < 0 and x >= 0
    assert not linear_feasible([((1,), "<", 0), ((-1,), "<=", 0)], 1)
    # equality plus inequality
    assert linear_feasible([((1, 1), "=", 2), ((1, 0), "<=", 1)], 2)
    assert not linear_feasible([((1, 1), "=", 2), ((1, 0), "<=", 0), ((0, 1), "<=", 0)], 2)


def test_cone2_canonicalization():
    V = Cone2.from_generators([(2, 2), (1, 0), (1, 1), (0, -1)])
    assert V.kind == "wedge"
    assert V.gens == ((0, -1), (1, 1))
    assert Cone2.from_generators([(3, -6), (1, -2)]).kind == "ray"
    with pytest.raises(GeometryError):
        Cone2.from_generators([(1, 0), (-1, 0)])
    with pytest.raises(GeometryError):
        Cone2.from_generators([(1, 0), (0, 1), (-1, -1)])


def test_cone2_reference_direction_interior():
    rng = random.Random(5)
    from conftest import rand_wedge

    for _ in range(300):
        V = rand_wedge(rng, 6)
        assert V.polar_interior_contains(V.u0())
    # asymmetric wedge where -(g1+g2) leaves the polar
    V = Cone2.from_generators([(1, 0), (-5, 1)])
    assert V.polar_interior_contains(V.u0())


def test_cone3_pointedness_and_membership():
    with pytest.raises(GeometryError):
        Cone3.from_generators([(0, 0, 1), (0, 0, -1)])
    V = Cone3.from_generators([(1, 0, -1), (-1, 0, -1), (0, 1, -1)])
    assert V.contains_vector((0, 0, -1))
    assert not V.contains_vector((0, 0, 1))
    assert V.polar_interior_contains((0, 0, 1))
    # redundant generator dropped
    W = Cone3.from_generators([(1, 0, -1), (-1, 0, -1), (0, 0, -1)])
    assert W.gens == tuple(sorted([(1, 0, -1), (-1, 0, -1)]))
    assert Cone3.from_generators([]).is_trivial
