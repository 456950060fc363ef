import math
import random

import pytest

from charsum import (axiom3_sup, box_count, exp_sum, exp_sum_points,
                     hyperplane_height_test, laurent_from_expression,
                     parse_polynomial, prime_field, primes_in,
                     standard_character, twisted_character, weil_check,
                     weil_check_curve)
from charsum.errors import CharsumError
from charsum.weil import _candidate_vectors

TOL = 1e-9


def poly(text, names=None):
    return parse_polynomial(text, variables=names).poly


def test_sum_over_the_whole_line_vanishes_for_linear():
    # sum of psi(a x + b) over x is 0 for a != 0
    p = 31
    f = poly("3*x + 5")
    char = standard_character(prime_field(p))
    assert abs(exp_sum([], f, char)) < TOL


def test_gauss_sum_magnitude_is_exactly_sqrt_p():
    for p in primes_in(200)[1:]:  # odd primes
        rec = weil_check(poly("x^2"), p)
        assert abs(rec.magnitude - math.sqrt(p)) < TOL
        assert rec.passed and rec.degree == 2
        assert rec.bound == math.sqrt(p)


def test_shifts_and_scalings_keep_gauss_magnitude():
    rng = random.Random(89)
    for _ in range(20):
        p = rng.choice(primes_in(300)[1:])
        a = rng.randrange(1, p)
        b = rng.randrange(p)
        c = rng.randrange(p)
        rec = weil_check([c, b, a], p)
        assert abs(rec.magnitude - math.sqrt(p)) < TOL


def test_weil_check_random_polynomials_within_bound():
    rng = random.Random(97)
    for _ in range(100):
        p = rng.choice(primes_in(100))
        d = rng.randint(2, 6)
        if math.gcd(d, p) != 1:
            continue
        coeffs = [rng.randint(-20, 20) for _ in range(d)] + [
            rng.randrange(1, p)]
        rec = weil_check(coeffs, p)
        assert rec.passed, (coeffs, p, rec)


def test_weil_check_wild_degree_rejected():
    with pytest.raises(CharsumError):
        weil_check(poly("x^5 + x"), 5)
    with pytest.raises(CharsumError):
        weil_check(poly("x^2"), 2)


def test_weil_check_degree_drop_rejected():
    # 7 x^3 + x has degree 1 mod 7: inside the hypotheses but trivial;
    # 7 x^3 + 7 x drops to degree < 1 and is an error
    rec = weil_check(poly("7*x^3 + x"), 7)
    assert rec.degree == 1 and abs(rec.magnitude) < TOL
    with pytest.raises(CharsumError):
        weil_check(poly("7*x^3 + 7*x"), 7)


def test_weil_check_twisted_character():
    p = 43
    for twist in (1, 2, 5):
        char = twisted_character(prime_field(p), twist)
        rec = weil_check(poly("x^3 + 2*x"), p, char=char)
        assert rec.passed
        assert abs(rec.magnitude) <= 2 * math.sqrt(p) + TOL


def test_exp_sum_points_agrees_with_fast_line_path():
    p = 53
    f = poly("x^4 + 3*x + 1")
    char = standard_character(prime_field(p))
    fast = exp_sum([], f, char)
    slow = exp_sum_points([(x,) for x in range(p)], f, char)
    assert abs(fast - slow) < TOL


def test_kloosterman_sum_within_classical_bound():
    names = ("x", "y")
    system = [poly("x*y - 1", names)]
    f = poly("x + y", names)
    for p in primes_in(60)[1:]:
        char = standard_character(prime_field(p))
        s = exp_sum(system, f, char)
        assert abs(s.imag) < TOL  # Kloosterman sums are real
        assert abs(s) <= 2 * math.sqrt(p) + TOL


def test_weil_check_curve_is_flagged_heuristic():
    names = ("x", "y")
    system = [poly("x*y - 1", names)]
    f = poly("x + y", names)
    rec = weil_check_curve(system, f, 37)
    assert rec.heuristic
    assert rec.passed
    rec2 = weil_check_curve(system, f, 37, constant=2.0)
    assert rec2.bound == 2.0 * math.sqrt(37)


def test_axiom3_validation():
    names = ("x", "y")
    system = [poly("x*y - 1", names)]
    with pytest.raises(CharsumError):
        axiom3_sup(system, laurent_from_expression("z1", nvars=2), 11)
    with pytest.raises(CharsumError):
        axiom3_sup(system,
                   laurent_from_expression("z1*zb1", nvars=2), 11)
    nopts = [poly("x", names), poly("x - 1", names)]
    with pytest.raises(CharsumError):
        axiom3_sup(nopts, laurent_from_expression("z1 + zb1", nvars=2), 11,
                   nvars=2)


def test_axiom3_passes_on_hyperbola():
    names = ("x", "y")
    system = [poly("x*y - 1", names)]
    h = laurent_from_expression("z1*zb2 + zb1*z2", nvars=2)
    for p in (11, 101, 499):
        res = axiom3_sup(system, h, p, nvars=2)
        assert res.npoints == p - 1
        assert res.passed
        assert res.sup >= -res.tolerance


def test_axiom3_fails_on_a_line_with_a_negative_witness():
    # the y-axis has constant first coordinate, so h = -(z1 + zb1) is
    # identically -2 on its character image while the tolerance shrinks
    # like 1/sqrt(p): the positivity floor must report a failure
    names = ("x", "y")
    system = [poly("x + 0*y", names)]
    h = laurent_from_expression("0 - z1 - zb1", nvars=2)
    res = axiom3_sup(system, h, 53, nvars=2)
    assert res.npoints == 53
    assert abs(res.sup + 2.0) < TOL
    assert not res.passed


def test_candidate_vectors_order_and_primitivity():
    got = list(_candidate_vectors(2, 2))
    assert got[:4] == [(-1, 1), (0, 1), (1, 0), (1, 1)]
    assert all(max(abs(c) for c in v) <= 2 for v in got)
    assert (2, 2) not in got          # not primitive
    assert (0, -1) not in got         # canonical sign
    assert len(set(got)) == len(got)
    # height 1 vectors all come before any height 2 vector
    heights = [max(abs(c) for c in v) for v in got]
    assert heights == sorted(heights)


def test_hyperplane_found_for_affine_graphs():
    names = ("x", "y")
    system = [poly("y - 2*x - 1", names)]
    res = hyperplane_height_test(system, 3)
    assert res is not None
    assert res.vector == (-2, 1)
    assert res.constant == 1
    assert res.exact
    line = [poly("x + 0*y", names)]
    res2 = hyperplane_height_test(line, 3)
    assert res2.vector == (1, 0)
    assert res2.constant == 0
    assert res2.exact


def test_hyperplane_absent_for_parabola():
    names = ("x", "y")
    system = [poly("y - x^2", names)]
    assert hyperplane_height_test(system, 3) is None


def test_hyperplane_height_cap():
    names = ("x", "y")
    system = [poly("y - x", names)]
    with pytest.raises(CharsumError):
        hyperplane_height_test(system, 0)
    with pytest.raises(CharsumError):
        hyperplane_height_test(system, 100)


def test_box_count_quadrant_of_parabola():
    names = ("x", "y")
    system = [poly("y - x^2", names)]
    p = 103
    half = (p + 1) // 2
    res = box_count(system, p, [(0, half), (0, half)], 1)
    assert res.hyperplane is None
    assert res.count == sum(1 for x in range(half)
                            if x * x % p < half)
    assert abs(res.fraction - 0.25) < 5 / math.sqrt(p)
    assert math.isclose(res.expected, p * (half / p) ** 2)


def test_box_count_flags_contained_line():
    names = ("x", "y")
    system = [poly("x + 0*y", names)]
    p = 103
    res = box_count(system, p, [(0, p), (0, (p + 1) // 2)], 1)
    assert res.count == (p + 1) // 2
    assert res.hyperplane is not None
    assert res.hyperplane.vector == (1, 0)
    res2 = box_count(system, p, [(0, p), (0, p)], 1, flag_height=0)
    assert res2.hyperplane is None
