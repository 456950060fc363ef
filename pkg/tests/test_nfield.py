import random
from fractions import Fraction

import pytest

from charsum import (Angle, NFElem, hnf, lattice_basis, nf_build, nf_reduce,
                     qlin_relations, value_set)
from charsum.errors import CharsumError


def test_certificates_by_degree():
    assert nf_build([3, 1]).certificate == "degree 1"
    assert nf_build([-2, 0, 1]).certificate == "no rational roots (degree 2)"
    assert nf_build([-2, 0, 0, 1]).certificate == \
        "no rational roots (degree 3)"
    desc = nf_build([1, 1, 0, 0, 1])  # x^4 + x + 1
    assert desc.certificate == "irreducible mod 2"
    assert desc.degree == 4


def test_reducible_inputs_are_refused():
    with pytest.raises(CharsumError, match="reducible"):
        nf_build([-1, 0, 1])            # (x-1)(x+1)
    with pytest.raises(CharsumError, match="repeated factor"):
        nf_build([1, 2, 1])             # (x+1)^2
    with pytest.raises(CharsumError, match="divisible by x - 2"):
        nf_build([-8, 0, 0, 1])         # x^3 - 8
    # x^4 + 1 is irreducible over Q but reducible mod every prime, so the
    # honest answer is that no certificate of this kind exists
    with pytest.raises(CharsumError, match="certificate not found"):
        nf_build([1, 0, 0, 0, 1])


def test_defining_polynomial_validation():
    with pytest.raises(CharsumError):
        nf_build([1, 2])                 # not monic
    with pytest.raises(CharsumError):
        nf_build([Fraction(1, 2), 1])    # not integral
    with pytest.raises(CharsumError):
        nf_build([5])                    # constant


def test_nfelem_arithmetic_satisfies_the_minimal_polynomial():
    desc = nf_build([-2, 0, 0, 1])  # b^3 = 2
    b = NFElem.generator(desc)
    assert (b ** 3).rational_value() == 2
    assert ((b * b) * b - 2).is_zero()
    x = 1 + b
    y = b * b - 3
    assert (x + y) - y == x
    assert x * y == y * x
    assert x * (y + 2) == x * y + 2 * x
    # (1 + b)(1 - b + b^2) = 1 + b^3 = 3
    z = x * NFElem(desc, (1, -1, 1))
    assert z.is_rational() and z.rational_value() == 3


def test_nfelem_power_matches_repeated_multiplication():
    rng = random.Random(91)
    desc = nf_build([1, -1, 0, 0, 1])  # x^4 - x + 1, irreducible mod 2
    for _ in range(10):
        x = NFElem(desc, [Fraction(rng.randint(-3, 3), rng.randint(1, 2))
                          for _ in range(4)])
        acc = NFElem.rational(desc, 1)
        for k in range(6):
            assert x ** k == acc
            acc = acc * x


def test_nfelem_validation():
    desc = nf_build([-2, 0, 1])
    other = nf_build([-3, 0, 1])
    with pytest.raises(CharsumError):
        NFElem(desc, (1,))
    with pytest.raises(CharsumError):
        NFElem.generator(desc) + NFElem.generator(other)
    with pytest.raises(CharsumError):
        NFElem.generator(desc) ** -1
    with pytest.raises(CharsumError):
        NFElem.generator(desc).rational_value()


def test_nf_reduce_is_a_ring_homomorphism():
    desc = nf_build([-2, 0, 1])  # b = sqrt(2)
    p = 7  # 2 is a QR mod 7: 3^2 = 2
    b = 3
    rng = random.Random(93)
    for _ in range(25):
        x = NFElem(desc, [rng.randint(-9, 9) for _ in range(2)])
        y = NFElem(desc, [rng.randint(-9, 9) for _ in range(2)])
        assert nf_reduce(x + y, p, b) == \
            (nf_reduce(x, p, b) + nf_reduce(y, p, b)) % p
        assert nf_reduce(x * y, p, b) == \
            (nf_reduce(x, p, b) * nf_reduce(y, p, b)) % p
    g = NFElem.generator(desc)
    assert nf_reduce(g, p, b) == b
    assert nf_reduce(g * g, p, b) == 2


def test_nf_reduce_rejects_non_roots():
    desc = nf_build([-2, 0, 1])
    with pytest.raises(CharsumError):
        nf_reduce(NFElem.generator(desc), 7, 2)  # 2^2 != 2 mod 7
    with pytest.raises(CharsumError):
        nf_reduce(NFElem(desc, (Fraction(1, 7), Fraction(0))), 7, 3)


def test_hnf_examples():
    assert hnf([[2, 0], [0, 2], [1, 1]]) == [(1, 1), (0, 2)]
    assert hnf([[4], [6]]) == [(2,)]
    assert hnf([[0, 0], [0, 0]]) == []
    assert hnf([[1, 2, 3]]) == [(1, 2, 3)]
    assert hnf([[-1, 0], [0, -1]]) == [(1, 0), (0, 1)]


def test_hnf_shape_properties():
    rng = random.Random(97)
    for _ in range(50):
        rows = [[rng.randint(-9, 9) for _ in range(4)]
                for _ in range(rng.randint(1, 5))]
        h = hnf(rows)
        # echelon: pivot columns strictly increase
        pivots = []
        for r in h:
            nz = [j for j, a in enumerate(r) if a]
            assert nz, "zero rows must be dropped"
            pivots.append(nz[0])
        assert pivots == sorted(set(pivots))
        # pivots positive, entries above reduced
        for i, r in enumerate(h):
            assert r[pivots[i]] > 0
            for k in range(i):
                assert 0 <= h[k][pivots[i]] < r[pivots[i]]


def test_hnf_is_a_lattice_invariant():
    rng = random.Random(101)
    for _ in range(40):
        n = rng.randint(1, 4)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        h1 = hnf(rows)
        # apply random elementary integer row operations
        mat = [list(r) for r in rows]
        for _ in range(12):
            i, j = rng.randrange(len(mat)), rng.randrange(len(mat))
            op = rng.randrange(3)
            if op == 0 and i != j:
                m = rng.randint(-3, 3)
                mat[i] = [a + m * b for a, b in zip(mat[i], mat[j])]
            elif op == 1:
                mat[i], mat[j] = mat[j], mat[i]
            else:
                mat[i] = [-a for a in mat[i]]
        assert hnf(mat) == h1


def test_lattice_basis_round_trip():
    desc = nf_build([-2, 0, 1])
    b = NFElem.generator(desc)
    elems = [1 + b, 2 * b, NFElem(desc, (Fraction(1, 2), Fraction(0)))]
    lat = lattice_basis(elems)
    assert lat.field == desc
    for i, e in enumerate(elems):
        acc = NFElem.rational(desc, 0)
        for c, bas in zip(lat.expression[i], lat.basis):
            acc = acc + c * bas
        assert acc == e


def test_lattice_basis_double_membership():
    # appending the basis itself must not change the lattice
    desc = nf_build([-2, 0, 0, 1])
    b = NFElem.generator(desc)
    elems = [3 * b + 1, b * b, 2 - b, NFElem(desc, (0, Fraction(5, 3), 0))]
    lat = lattice_basis(elems)
    again = lattice_basis(elems + list(lat.basis))
    assert again.basis == lat.basis


def test_lattice_basis_validation():
    desc = nf_build([-2, 0, 1])
    with pytest.raises(CharsumError):
        lattice_basis([])
    with pytest.raises(CharsumError):
        lattice_basis([NFElem.rational(desc, 0)])
    other = nf_build([-3, 0, 1])
    with pytest.raises(CharsumError):
        lattice_basis([NFElem.generator(desc), NFElem.generator(other)])


def test_qlin_relations_examples():
    desc = nf_build([-2, 0, 1])
    b = NFElem.generator(desc)
    half = NFElem.rational(desc, Fraction(1, 2))
    combo = half + b  # 1/2 + b
    rels = qlin_relations([half, b, combo])
    assert rels == ((1, 1, -1),)
    # independent elements have no relations
    assert qlin_relations([half, b]) == ()
    # scalar multiples
    assert qlin_relations([b, 3 * b]) == ((3, -1),)


def test_value_set_exponent_matrix():
    desc = nf_build([2, 1])  # the rational field presented by x + 2
    elems = [NFElem.rational(desc, v)
             for v in (Fraction(1, 2), Fraction(1, 3), Fraction(5, 6))]
    vs = value_set(elems)
    lat = vs.lattice
    assert len(lat.basis) == 1
    assert lat.basis[0].rational_value() == Fraction(1, 6)
    assert vs.exponents == ((3,), (2,), (5,))


def test_value_set_sp_annotations():
    desc = nf_build([2, 1])
    third = NFElem.rational(desc, Fraction(1, 3))
    vs = value_set([third], sp_mode=True)
    assert len(vs.annotations) == 1
    ann = vs.annotations[0]
    assert ann.value == Fraction(1, 3)
    got = dict((k, a) for a, k in ann.values)
    # k = 2 selects angle 1/3 (t = 1), k = 1 selects angle 2/3 (t = 2)
    assert got == {2: Angle(Fraction(1, 3)), 1: Angle(Fraction(2, 3))}


def test_value_set_integer_annotation():
    desc = nf_build([2, 1])
    one = NFElem.rational(desc, 2)
    vs = value_set([one], sp_mode=True)
    ann = vs.annotations[0]
    assert ann.values == ((Angle(0), 0),)


def test_value_set_skips_irrational_basis():
    desc = nf_build([-2, 0, 1])
    vs = value_set([NFElem.generator(desc)], sp_mode=True)
    assert vs.annotations == ()
