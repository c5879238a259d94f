from fractions import Fraction

import pytest

from reciprocity.artinian import ArtinianAlgebra, dual_numbers
from reciprocity.errors import NonUnitError, TowerError
from reciprocity.fields import (
    QQ,
    AlgebraElement,
    ExtensionField,
    PrimeField,
    find_irreducible,
    is_prime,
    lift,
)


def test_primality():
    assert is_prime(2) and is_prime(3) and is_prime(65537)
    assert not is_prime(1) and not is_prime(91) and not is_prime(2**16)
    with pytest.raises(ValueError):
        PrimeField(6)


def test_rational_elements():
    a = QQ.coerce(Fraction(3, 2))
    b = QQ.from_int(2)
    assert a + b == Fraction(7, 2)
    assert (a / b).data == Fraction(3, 4)
    assert str(a) == "3/2"
    assert (-a).data == Fraction(-3, 2)
    with pytest.raises(NonUnitError):
        QQ.zero().inverse()


def test_prime_field_arith(F7):
    a, b = F7.from_int(3), F7.from_int(5)
    assert a + b == 1
    assert a * b == 1
    assert a.inverse() == b
    assert a ** (-1) == b
    assert (a - b) == F7.from_int(-2)


def test_extension_field_requires_irreducible():
    with pytest.raises(ValueError):
        ExtensionField(3, [2, 0, 1])  # x^2 + 2 = (x-1)(x+1) over F3
    with pytest.raises(ValueError):
        ExtensionField(5, [0, 0, 1])  # x^2 not monic-irreducible
    F9 = ExtensionField(3, [1, 0, 1])
    u = F9.generator()
    assert u * u == F9.from_int(-1)
    assert (u + 1) * (u + 1) == 2 * u
    assert u.inverse() * u == F9.one()


def test_find_irreducible_runs():
    for p, d in ((2, 2), (2, 3), (3, 2), (5, 3)):
        m = find_irreducible(p, d)
        assert len(m) == d + 1 and m[-1] == 1
        ExtensionField(p, m)  # constructor re-checks irreducibility


def test_lift_chain(F3, F9):
    a = F3.from_int(2)
    lifted = lift(a, F9)
    assert lifted.ring == F9 and lifted == F9.from_int(2)
    A = ArtinianAlgebra(F9, [("e", 2)])
    deep = lift(a, A)
    assert deep.ring == A
    with pytest.raises(TowerError):
        lift(F9.generator(), F3)


def test_artinian_truncation():
    A = ArtinianAlgebra(QQ, [("e1", 2), ("e2", 3)])
    e1, e2 = A.generator(0), A.generator(1)
    assert e1 * e1 == A.zero()
    assert e2 * e2 * e2 == A.zero()
    assert not (e2 * e2).is_zero()
    assert A.dimension == 6
    assert A.nil_index == 4
    assert A.is_nilpotent(e1 + e2 * e2)
    assert not A.is_nilpotent(A.one() + e1)


def test_artinian_inverse_and_errors():
    A = dual_numbers(QQ)
    e1, e2 = A.generator(0), A.generator(1)
    x = A.one() + 2 * e1 + 3 * e2 + e1 * e2
    assert x * x.inverse() == A.one()
    with pytest.raises(NonUnitError):
        (e1 + e2).inverse()
    y = A.from_int(2) + e1
    assert y * y.inverse() == A.one()


def test_artinian_over_extension(F9):
    A = ArtinianAlgebra(F9, [("e", 2)])
    u = lift(F9.generator(), A)
    e = A.generator("e")
    x = A.one() + u * e
    assert x * x.inverse() == A.one()
    assert A.residue(x) == F9.one()


def test_element_equality_and_hash(F5):
    a = F5.from_int(7)
    assert a == 2 and 2 == a
    assert hash(a) == hash(F5.from_int(2))
    s = {a, F5.from_int(2), F5.from_int(3)}
    assert len(s) == 2
    assert F5.from_int(1) != QQ.from_int(1)


def test_element_str_round_shape(F9):
    u = F9.generator()
    assert str(u + 2) == "u + 2"
    A = ArtinianAlgebra(QQ, [("e1", 2), ("e2", 2)])
    x = A.one() + A.generator(0) * A.generator(1)
    assert str(x) == "1 + e1*e2"
    y = A.one() - 3 * A.generator(0)
    assert str(y) == "1 - 3*e1"


def test_random_elements_live_in_ring(rng, F9):
    A = ArtinianAlgebra(F9, [("a", 3)])
    for _ in range(20):
        x = A.random_element(rng)
        assert x.ring == A
        y = F9.random_element(rng)
        assert y.ring == F9
