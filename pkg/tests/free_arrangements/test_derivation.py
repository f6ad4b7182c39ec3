import doctest

import pytest

from free_arrangements import (
    Arrangement,
    CycloField,
    Derivation,
    DimensionError,
    FreenessReport,
    IntPoly,
    LinearForm,
    ModVec,
    MultiPoly,
    NotHomogeneousError,
    ZeroFormError,
    arrangement_make,
    boolean,
    braid,
    degreewise_dim_oracle,
    derivation_module,
    determinant,
    euler_derivation,
    field_make,
    hilbert_prediction,
    is_free,
    membership_test,
    minimal_generators,
    monomial,
    poincare_poly,
    q_surjective,
    random_arrangement,
    restriction_map,
    saito_check,
    vee,
)
from free_arrangements.derivation import dalpha_basis


Q: CycloField = field_make(1)
B2: Arrangement = arrangement_make(Q, 2, [[1, 0], [0, 1], [1, -1], [1, 1]])


def test_euler_and_vee() -> None:
    theta: Derivation = euler_derivation(Q, 3)
    x1, x2, x3 = (MultiPoly.variable(Q, 3, i) for i in range(3))
    f: MultiPoly = x1 * x2 * x3 + x1**3
    # Euler's identity on a homogeneous polynomial
    assert theta(f) == 3 * f
    assert vee(Q, [1, 0, -1])(f) == x2 * x3 + 3 * x1**2 - x1 * x2
    assert vee(Q, [0, 2]).pdeg == 0
    with pytest.raises(ZeroFormError):
        vee(Q, [0, 0])
    with pytest.raises(DimensionError):
        euler_derivation(Q, 0)
    with pytest.raises(DimensionError):
        Derivation(ModVec([x1]))


def test_dalpha_basis() -> None:
    K: CycloField = field_make(5)
    z = K.generator()
    for field, coeffs in ((Q, [1, -2, 1]), (Q, [0, 0, 3]), (K, [z, 1, z * z + 1])):
        form: LinearForm = LinearForm.make(field, coeffs)
        basis: list[Derivation] = dalpha_basis(form)
        assert len(basis) == form.dim
        det: MultiPoly = determinant(basis)
        alpha: MultiPoly = form.to_poly()
        assert det == alpha * (det.leading_coefficient / alpha.leading_coefficient)
        assert all(membership_test(theta, arrangement_make(field, form.dim, [form])) for theta in basis)


def test_derivation_module() -> None:
    degrees: list[int | None] = sorted(g.pdeg for g in minimal_generators(derivation_module(braid(3))))
    assert degrees == [0, 1, 2]
    assert sorted(derivation_module(boolean(3)).degrees) == [1, 1, 1]
    empty: Arrangement = arrangement_make(Q, 2, [])
    assert sorted(derivation_module(empty).degrees) == [0, 0]


def test_membership_test() -> None:
    x1, x2 = MultiPoly.variable(Q, 2, 0), MultiPoly.variable(Q, 2, 1)
    zero: MultiPoly = MultiPoly.zero(Q, 2)
    assert membership_test(euler_derivation(Q, 2), B2)
    assert membership_test(Derivation.from_polys([x1**3, x2**3]), B2)
    assert not membership_test(Derivation.from_polys([x1**2, zero]), B2)
    assert not membership_test(vee(Q, [1, 1]), B2)
    assert membership_test(vee(Q, [1, 1]), arrangement_make(Q, 2, [[1, -1]]))


@pytest.mark.parametrize(
    ("A", "exponents"),
    [
        (boolean(2), (1, 1)),
        (boolean(3), (1, 1, 1)),
        (braid(3), (0, 1, 2)),
        (B2, (1, 3)),
        (arrangement_make(Q, 2, [[1, 0]]), (0, 1)),
        (monomial(3, 3, 2), (1, 2)),
    ],
)
def test_is_free(A: Arrangement, exponents: tuple[int, ...]) -> None:
    report: FreenessReport = is_free(A)
    assert report.free
    assert report.exponents == exponents
    assert report.generator_count == A.dim
    assert sum(exponents) == len(A)
    assert report.basis is not None
    assert saito_check(report.basis, A)[0]


def test_not_free() -> None:
    generic: Arrangement = arrangement_make(Q, 3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    report: FreenessReport = is_free(generic)
    assert not report.free
    assert report.generator_count > 3
    assert report.exponents is None
    assert report.basis is None


def test_empty_space() -> None:
    report: FreenessReport = is_free(arrangement_make(Q, 0, []))
    assert report.free
    assert report.exponents == ()


def test_saito_check() -> None:
    x1, x2 = MultiPoly.variable(Q, 2, 0), MultiPoly.variable(Q, 2, 1)
    zero: MultiPoly = MultiPoly.zero(Q, 2)
    A: Arrangement = boolean(2)
    basis: list[Derivation] = [Derivation.from_polys([x1, zero]), Derivation.from_polys([zero, x2])]
    accepted, constant = saito_check(basis, A)
    assert accepted
    assert constant == 1
    scaled, constant = saito_check([basis[0] * 3, basis[1]], A)
    assert scaled and constant == 3
    # not in D(A)
    assert saito_check([vee(Q, [1, 0]), basis[1]], A) == (False, None)
    # in D(A) but the determinant has the wrong degree
    assert saito_check([basis[0] * x2, basis[1]], A) == (False, None)
    # zero determinant
    assert saito_check([basis[0], basis[0]], A) == (False, None)
    with pytest.raises(DimensionError):
        saito_check(basis[:1], A)
    with pytest.raises(NotHomogeneousError):
        saito_check([Derivation.from_polys([x1 + x1 * x1, zero]), basis[1]], A)


@pytest.mark.parametrize("A", [boolean(3), braid(4), monomial(2, 1, 3), monomial(3, 3, 2)])
def test_saito_rejects_corrupted_bases(A: Arrangement) -> None:
    report: FreenessReport = is_free(A)
    assert report.basis is not None
    basis: list[Derivation] = list(report.basis)
    assert saito_check(basis, A)[0]
    x1: MultiPoly = MultiPoly.variable(A.field, A.dim, 0)
    n: int = len(basis)
    for i in range(n):
        raised: list[Derivation] = basis[:i] + [basis[i] * x1] + basis[i + 1 :]
        assert saito_check(raised, A)[0] is False
        duplicated: list[Derivation] = basis[:i] + [basis[(i + 1) % n]] + basis[i + 1 :]
        assert saito_check(duplicated, A)[0] is False
        zeroed: list[Derivation] = basis[:i] + [basis[i] * 0] + basis[i + 1 :]
        assert saito_check(zeroed, A) == (False, None)
        with pytest.raises(DimensionError):
            saito_check(basis[:i] + basis[i + 1 :], A)


@pytest.mark.parametrize("A", [braid(3), B2, boolean(3)])
def test_oracle_matches_prediction(A: Arrangement) -> None:
    report: FreenessReport = is_free(A)
    assert report.exponents is not None
    for degree in range(4):
        assert degreewise_dim_oracle(A, degree) == hilbert_prediction(report.exponents, A.dim, degree)


def test_oracle_generic() -> None:
    generic: Arrangement = arrangement_make(Q, 3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    assert degreewise_dim_oracle(generic, 0) == 0
    assert degreewise_dim_oracle(generic, 1) == 1
    with pytest.raises(ValueError):
        degreewise_dim_oracle(generic, -1)


@pytest.mark.parametrize("conductor", [1, 3])
@pytest.mark.parametrize("seed", range(4))
def test_random_oracle(conductor: int, seed: int) -> None:
    A: Arrangement = random_arrangement(field_make(conductor), 3, 5, seed=seed)
    report: FreenessReport = is_free(A)
    if report.free:
        assert report.exponents is not None
        for degree in range(3):
            assert degreewise_dim_oracle(A, degree) == hilbert_prediction(report.exponents, 3, degree)
    else:
        assert degreewise_dim_oracle(A, 1) >= 1


@pytest.mark.slow
@pytest.mark.parametrize("count", range(3, 7))
@pytest.mark.parametrize("seed", range(5))
def test_random_oracle_up_to_degree_six(count: int, seed: int) -> None:
    A: Arrangement = random_arrangement(field_make((1, 3)[seed % 2]), 3, count, seed=100 + seed)
    report: FreenessReport = is_free(A)
    if report.free:
        assert report.exponents is not None
        for degree in range(7):
            assert degreewise_dim_oracle(A, degree) == hilbert_prediction(report.exponents, 3, degree)
    else:
        assert report.generator_count > 3


def test_restriction_map() -> None:
    A: Arrangement = braid(3)
    h: LinearForm = A[0]
    image: Derivation = restriction_map(euler_derivation(Q, 3), A, h)
    assert image == euler_derivation(Q, 2)
    target: Arrangement = A.restrict(h).arrangement
    for g in derivation_module(A).generators:
        theta: Derivation = Derivation(g)
        mapped: Derivation = restriction_map(theta, A, h)
        assert mapped.pdeg == theta.pdeg or not mapped
        assert membership_test(mapped, target)


def test_q_surjective() -> None:
    for A in (boolean(2), braid(3), B2):
        assert all(q_surjective(A, h) for h in A)


@pytest.mark.slow
@pytest.mark.parametrize(
    ("A", "exponents"),
    [
        (braid(4), (0, 1, 2, 3)),
        (braid(5), (0, 1, 2, 3, 4)),
        (monomial(2, 1, 3), (1, 3, 5)),
        (monomial(2, 2, 3), (1, 2, 3)),
        (monomial(3, 1, 2), (1, 4)),
        (monomial(4, 2, 2), (1, 5)),
        (monomial(4, 4, 2), (1, 3)),
        (monomial(3, 3, 3), (1, 4, 4)),
    ],
)
def test_is_free_families(A: Arrangement, exponents: tuple[int, ...]) -> None:
    report: FreenessReport = is_free(A)
    assert report.free
    assert report.exponents == exponents
    assert degreewise_dim_oracle(A, 2) == hilbert_prediction(exponents, A.dim, 2)


@pytest.mark.slow
@pytest.mark.parametrize("dim", [2, 3])
@pytest.mark.parametrize(("r", "p"), [(r, p) for r in range(1, 5) for p in sorted({1, r})])
def test_monomial_grid(r: int, p: int, dim: int) -> None:
    A: Arrangement = monomial(r, p, dim)
    report: FreenessReport = is_free(A)
    assert report.free
    assert report.exponents is not None
    assert sum(report.exponents) == len(A)
    essential: Arrangement = A.essentialize().arrangement
    assert poincare_poly(essential) == IntPoly.from_exponents(b for b in report.exponents if b)


def test_docstring() -> None:
    import free_arrangements.derivation

    results: doctest.TestResults = doctest.testmod(free_arrangements.derivation, verbose=True)
    assert results.failed == 0
