import random
from itertools import product

import pytest

from charsum import (MPoly, build_extension, count_points, enumerate_points,
                     parse_polynomial, prime_field, sample_points)
from charsum.errors import BudgetError, CharsumError
from charsum.mpoly import frac_mod


def system_of(texts, names):
    return [parse_polynomial(t, variables=names).poly for t in texts]


def brute_points(system, p, n):
    pts = []
    for x in product(range(p), repeat=n):
        if all(f.eval_mod(p, x) == 0 for f in system):
            pts.append(x)
    return pts


def test_line_and_circle():
    names = ("x", "y")
    line = system_of(["y - 2*x - 1"], names)
    assert enumerate_points(line, 7) == brute_points(line, 7, 2)
    assert count_points(line, 7) == 7
    circle = system_of(["x^2 + y^2 - 1"], names)
    got = enumerate_points(circle, 13)
    assert got == brute_points(circle, 13, 2)
    assert count_points(circle, 13) == len(got)


def test_random_systems_match_brute_force():
    rng = random.Random(59)
    for _ in range(60):
        p = rng.choice([2, 3, 5, 7, 11])
        n = rng.randint(1, 3)
        system = []
        for _ in range(rng.randint(1, 2)):
            terms = {}
            for _ in range(rng.randint(1, 5)):
                e = tuple(rng.randint(0, 2) for _ in range(n))
                terms[e] = rng.randint(-6, 6)
            f = MPoly(n, terms)
            if not f.is_zero():
                system.append(f)
        if not system:
            continue
        got = enumerate_points(system, p, nvars=n)
        expect = brute_points(system, p, n)
        assert got == expect
        assert count_points(system, p, nvars=n) == len(expect)


def test_empty_system_is_full_space():
    assert count_points([], 5, nvars=2) == 25
    assert len(enumerate_points([], 3, nvars=3)) == 27


def test_inconsistent_system():
    names = ("x",)
    system = system_of(["x", "x - 1"], names)
    assert enumerate_points(system, 11) == []
    assert count_points(system, 11) == 0
    one = system_of(["1"], names)
    assert count_points(one, 11) == 0


def test_box_filtering():
    names = ("x", "y")
    line = system_of(["y - x"], names)
    pts = enumerate_points(line, 11, box=[(0, 5), (0, 11)])
    assert pts == [(i, i) for i in range(5)]
    assert count_points(line, 11, box=[(0, 5), (3, 11)]) == 2  # x = y in 3,4
    with pytest.raises(CharsumError):
        enumerate_points(line, 11, box=[(0, 5)])
    with pytest.raises(CharsumError):
        enumerate_points(line, 11, box=[(0, 12), (0, 11)])
    with pytest.raises(CharsumError):
        enumerate_points(line, 11, box=[(-1, 5), (0, 11)])


def test_count_shortcut_agrees_with_enumeration_on_curves():
    names = ("x", "y")
    for text in ("y^2 - x^3 - x", "y^2 - x^3 + 2*x - 1", "x*y - 1",
                 "y^2 + x*y - x^3 - 5", "x^2 + y^2 - 3"):
        system = system_of([text], names)
        for p in (3, 5, 7, 11, 13, 17, 19, 23):
            assert count_points(system, p) == \
                len(enumerate_points(system, p))


def test_budget_enforced():
    names = ("x", "y", "z")
    system = system_of(["x*y*z - 1"], names)
    with pytest.raises(BudgetError):
        enumerate_points(system, 101, budget=10 ** 4)
    with pytest.raises(BudgetError):
        count_points(system, 101, budget=10 ** 4)
    # elimination does not rescue the budget check; it applies to p^n
    line = system_of(["y - x"], ("x", "y"))
    with pytest.raises(BudgetError):
        count_points(line, 101, budget=100)


def test_extension_field_enumeration():
    F = build_extension(2, 2)
    names = ("x", "y")
    system = system_of(["x*y - 1"], names)
    pts = enumerate_points(system, F)
    # the multiplicative group has order 3
    assert len(pts) == 3
    for x, y in pts:
        assert (x * y) == F.one()
    assert count_points(system, F) == 3
    with pytest.raises(CharsumError):
        enumerate_points(system, F, box=[(0, 2), (0, 2)])


def test_prime_field_descriptor_accepted():
    names = ("x", "y")
    system = system_of(["y - x^2"], names)
    assert count_points(system, prime_field(7)) == \
        count_points(system, 7)


def test_denominator_clash_is_bad_prime():
    names = ("x",)
    system = system_of(["1/2*x - 1"], names)
    assert enumerate_points(system, 7) == [(2,)]
    from charsum.errors import BadPrimeError
    with pytest.raises(BadPrimeError):
        enumerate_points(system, 2)


def test_sample_points_on_curve_mod_large_prime():
    names = ("x", "y")
    system = system_of(["y^2 - x^3 - x"], names)
    p = 1000003
    pts = sample_points(system, p, 12)
    assert len(pts) == 12
    assert len(set(pts)) == 12
    for pt in pts:
        assert all(f.eval_mod(p, pt) == 0 for f in system)


def test_sample_points_on_graph_system():
    names = ("x", "y", "z")
    system = system_of(["y - x^2", "z - x*y"], names)
    p = 1000033
    pts = sample_points(system, p, 8)
    for x, y, z in pts:
        assert y == x * x % p and z == x * y % p


def test_sample_points_failure_is_loud():
    names = ("x", "y")
    # no points: x^2 + y^2 = -1 has solutions mod every prime, so use an
    # inconsistent pair instead
    system = system_of(["x", "x - 1"], names)
    with pytest.raises(CharsumError):
        sample_points(system, 101, 5)


def test_nvars_validation():
    f = parse_polynomial("x + y").poly
    with pytest.raises(CharsumError):
        enumerate_points([], 5)
    with pytest.raises(CharsumError):
        enumerate_points([f, MPoly(3, {(0, 0, 1): 1})], 5)
