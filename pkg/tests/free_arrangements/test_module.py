import doctest
import random

import pytest
import sympy as sp

from free_arrangements import (
    CycloField,
    ModVec,
    MultiPoly,
    Submodule,
    ZeroFormError,
    field_make,
    minimal_generators,
    module_intersect,
    syzygy_basis,
)
from free_arrangements.module import (
    buchberger,
    free_module,
    modvec_compare_leading,
    module_membership,
    normal_form,
)


Q: CycloField = field_make(1)
x, y = MultiPoly.variable(Q, 2, 0), MultiPoly.variable(Q, 2, 1)
zero: MultiPoly = MultiPoly.zero(Q, 2)
one: MultiPoly = MultiPoly.constant(Q, 2, 1)


def vec(*components: MultiPoly) -> ModVec:
    return ModVec(list(components))


def same_module(a: Submodule, b: Submodule) -> bool:
    return all(module_membership(g, b) for g in a) and all(module_membership(g, a) for g in b)


def test_compare_leading() -> None:
    assert modvec_compare_leading(vec(x, zero), vec(zero, x)) == 1
    assert modvec_compare_leading(vec(x * x, zero), vec(zero, x)) == 1
    assert modvec_compare_leading(vec(x, y), vec(x, zero)) == 0
    with pytest.raises(ZeroFormError):
        modvec_compare_leading(vec(zero, zero), vec(x, zero))


def test_normal_form() -> None:
    assert not normal_form(vec(x * x, zero), [vec(x, zero)])
    assert normal_form(vec(y, zero), [vec(x, zero)]) == vec(y, zero)
    assert normal_form(vec(x * x + y, zero), [vec(x, zero)]) == vec(y, zero)
    v: ModVec = vec(x * x * y + y * y, x * y)
    basis: list[ModVec] = [vec(x * y, zero), vec(zero, y)]
    reduced: ModVec = normal_form(v, basis)
    assert normal_form(reduced, basis) == reduced


def test_buchberger() -> None:
    gb = buchberger([vec(x, zero), vec(zero, one)])
    assert len(gb.elements()) == 2
    assert gb.spairs_reduce_to_zero()
    ideal = buchberger([ModVec([x * x - y])])
    assert ideal.contains(ModVec([x * x - y]))
    assert not ideal.contains(ModVec([x]))


def test_ideal_groebner_against_sympy() -> None:
    rng: random.Random = random.Random(2)
    X, Y, Z = sp.symbols("x1 x2 x3")
    R: list[MultiPoly] = [MultiPoly.variable(Q, 3, i) for i in range(3)]
    for _ in range(5):
        gens: list[MultiPoly] = []
        exprs: list[sp.Expr] = []
        for _ in range(3):
            a, b, c = (rng.randint(-2, 2) for _ in range(3))
            gens.append(R[0] * R[1] * a + R[1] * R[2] * b + R[2] * R[2] * c + R[0] * R[0])
            exprs.append(X * Y * a + Y * Z * b + Z * Z * c + X * X)
        expected = sp.groebner(exprs, X, Y, Z, order="grevlex")
        ours = buchberger([ModVec([g]) for g in gens])
        assert len(ours.elements()) == len(expected.exprs)
        for element in ours.elements():
            expr = sp.sympify(str(element[0]).replace("^", "**"), locals={"x1": X, "x2": Y, "x3": Z})
            assert expected.contains(expr)


def test_membership() -> None:
    M: Submodule = Submodule.from_generators([vec(x, zero)])
    assert module_membership(vec(x * x, zero), M)
    assert not module_membership(vec(y, zero), M)
    N: Submodule = Submodule.from_generators([vec(x, zero), vec(zero, y)])
    assert module_membership(vec(x, y), N)
    assert module_membership(vec(zero, zero), N)


def test_syzygies() -> None:
    relations: Submodule = syzygy_basis([ModVec([x]), ModVec([y])])
    assert len(relations) == 1
    (s,) = relations
    assert s[0] * x + s[1] * y == 0
    assert len(syzygy_basis([vec(x, zero), vec(zero, y)])) == 0
    assert [str(s) for s in syzygy_basis([ModVec([x]), ModVec([x])])] == ["(1, -1)"]


def test_intersect_boolean() -> None:
    dx: Submodule = Submodule.from_generators([vec(x, y), vec(zero, one)])
    dy: Submodule = Submodule.from_generators([vec(x, y), vec(one, zero)])
    both: Submodule = module_intersect(dx, dy)
    expected: Submodule = Submodule.from_generators([vec(x, zero), vec(zero, y)])
    assert same_module(both, expected)
    gens: list[ModVec] = minimal_generators(both)
    assert [g.pdeg for g in gens] == [1, 1]


def test_intersect_identities() -> None:
    M: Submodule = Submodule.from_generators([vec(x * y, zero), vec(y, x)])
    assert same_module(module_intersect(M, M), M)
    assert same_module(module_intersect(M, free_module(Q, 2, 2)), M)


def test_intersect_contained() -> None:
    rng: random.Random = random.Random(9)
    M: Submodule = Submodule.from_generators([vec(x, y), vec(y * y, zero)])
    N: Submodule = Submodule.from_generators([vec(x * x, zero), vec(zero, y)])
    both: Submodule = module_intersect(M, N)
    for g in both:
        assert module_membership(g, M)
        assert module_membership(g, N)
        assert g.pdeg is not None
    for _ in range(5):
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
        candidate: ModVec = M.generators[0] * (x * x * y * a) + M.generators[1] * (x * x * b)
        if module_membership(candidate, N):
            assert module_membership(candidate, both)


def test_minimal_generators() -> None:
    M: Submodule = Submodule.from_generators([vec(x, zero), vec(x * x, zero), vec(zero, y)])
    gens: list[ModVec] = minimal_generators(M)
    assert [str(g) for g in gens] == ["(x1, 0)", "(0, x2)"]
    assert len(minimal_generators(Submodule.from_generators([vec(x, y)]))) == 1
    rng: random.Random = random.Random(4)
    generators: list[ModVec] = [vec(x, zero), vec(zero, y), vec(y * y, x * y), vec(x * y, y * y)]
    count: int = len(minimal_generators(Submodule.from_generators(generators)))
    for _ in range(5):
        shuffled: list[ModVec] = generators + [generators[0] * (x + y)]
        rng.shuffle(shuffled)
        assert len(minimal_generators(Submodule.from_generators(shuffled))) == count


def test_docstring() -> None:
    import free_arrangements.module

    results: doctest.TestResults = doctest.testmod(free_arrangements.module, verbose=True)
    assert results.failed == 0
