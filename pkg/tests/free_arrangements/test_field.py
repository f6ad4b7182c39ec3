import doctest
import pickle
import random
from fractions import Fraction

import pytest
import sympy as sp

from free_arrangements import CycloField, CycloNum, FieldMismatchError, field_make
from free_arrangements.field import cyclotomic_polynomial


def random_element(field: CycloField, rng: random.Random) -> CycloNum:
    return CycloNum(field, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(field.degree)])


def test_field_make() -> None:
    Q: CycloField = field_make(1)
    assert Q.is_rational
    assert Q.degree == 1
    assert field_make(3).modulus == (1, 1, 1)
    assert field_make(4).modulus == (1, 0, 1)
    assert field_make(5) is field_make(5)
    with pytest.raises(ValueError):
        field_make(0)


def test_cyclotomic_polynomial() -> None:
    x: sp.Symbol = sp.Symbol("x")
    for n in range(1, 31):
        expected: list[int] = [int(c) for c in reversed(sp.Poly(sp.cyclotomic_poly(n, x), x).all_coeffs())]
        assert list(cyclotomic_polynomial(n)) == expected, n


def test_arithmetic() -> None:
    K3: CycloField = field_make(3)
    z: CycloNum = K3.generator()
    assert not (1 + z + z * z)
    K4: CycloField = field_make(4)
    i: CycloNum = K4.generator()
    assert i * i == -1
    Q: CycloField = field_make(1)
    assert Q(Fraction(1, 2)) + Q(Fraction(1, 3)) == Fraction(5, 6)


def test_inverse() -> None:
    i: CycloNum = field_make(4).generator()
    assert i.inverse() == -i
    assert field_make(1)(2).inverse() == Fraction(1, 2)
    z: CycloNum = field_make(3).generator()
    assert (1 + z).inverse() == -z
    with pytest.raises(ZeroDivisionError):
        field_make(5).zero().inverse()


def test_field_mismatch() -> None:
    with pytest.raises(FieldMismatchError):
        field_make(3).one() + field_make(4).one()
    with pytest.raises(TypeError):
        field_make(3).generator() * field_make(5).generator()


def test_root_of_unity() -> None:
    K: CycloField = field_make(6)
    z: CycloNum = K.generator()
    assert z**6 == 1
    assert z**3 == -1
    assert K.root(7) == z
    # the modulus vanishes at the generator
    total: CycloNum = K.zero()
    for k, c in enumerate(K.modulus):
        total = total + z**k * c
    assert not total


def test_field_axioms() -> None:
    rng: random.Random = random.Random(11)
    for n in (1, 5, 8, 12):
        K: CycloField = field_make(n)
        for _ in range(20):
            a, b, c = (random_element(K, rng) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert (a + b) * c == a * c + b * c
            assert a + (-a) == 0
            assert not any((a - a).coeffs)
            if a:
                assert a * a.inverse() == 1
                assert (b / a) * a == b


def test_string() -> None:
    K: CycloField = field_make(5)
    z: CycloNum = K.generator()
    assert str(1 - 2 * z + z * z) == "1-2z+z^2"
    assert str(field_make(4).generator() * Fraction(1, 2)) == "(1/2)z"
    assert str(K.zero()) == "0"


def test_pickle() -> None:
    z: CycloNum = field_make(7).generator()
    copy: CycloNum = pickle.loads(pickle.dumps(z))
    assert copy == z
    assert copy.field is field_make(7)


def test_docstring() -> None:
    import free_arrangements.field

    results: doctest.TestResults = doctest.testmod(free_arrangements.field, verbose=True)
    assert results.failed == 0
