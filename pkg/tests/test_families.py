from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wittleibniz.core import ContractError, LeibnizElement, ModuleParams, element, leibniz_product
from wittleibniz.families import (DomainError, FamilyId, _IICoefficients, a_coeff, b_coeff_II,
                                  b_coeff_IV, build_table, gamma_of, iv_discrepancies,
                                  records_csv, records_latex, table_records)
from wittleibniz.scalar import Scalar

import oracles

d = LeibnizElement.d
mid = st.integers(min_value=-20, max_value=20)

TABLES = {
    FamilyId.II: build_table(FamilyId.II, ModuleParams(0, 3)),
    FamilyId.III: build_table(FamilyId.III, ModuleParams(0, 1)),
    FamilyId.IV: build_table(FamilyId.IV, ModuleParams(0, -1)),
    FamilyId.X0: build_table(FamilyId.X0, ModuleParams(0, 0)),
    FamilyId.X2: build_table(FamilyId.X2, ModuleParams(0, 2)),
}
BETAS = {FamilyId.II: 3, FamilyId.III: 1, FamilyId.IV: -1, FamilyId.X0: 0, FamilyId.X2: 2}


@pytest.mark.parametrize("i, expected", [(2, 1), (-2, 0), (3, 3), (-3, 0), (4, Fraction(63, 10)), (-4, Fraction(-1, 2))])
def test_a_coeff(i, expected):
    assert a_coeff(i) == Scalar(expected)


@pytest.mark.parametrize("i", [-1, 0, 1])
def test_a_coeff_domain(i):
    with pytest.raises(DomainError):
        a_coeff(i)


def test_b_coeff_II_anchors():
    assert b_coeff_II(2, 2) == 9
    assert b_coeff_II(-2, -2) == -9
    assert b_coeff_II(3, 3) == 72
    assert b_coeff_II(2, 3) == Scalar(oracles.b23_from_pair_equation()) == Scalar(Fraction(162, 5))
    assert b_coeff_II(2, 3, sign=1) == Scalar(Fraction(216, 5))


def test_b_coeff_IV_printed():
    diag = oracles.iv_printed_diag(6)
    for i in range(2, 7):
        assert b_coeff_IV(i, i) == Scalar(diag[i])
    assert b_coeff_IV(3, 3) == Scalar(Fraction(19, 7))
    assert b_coeff_IV(2, 3) == 3
    assert b_coeff_IV(-2, -2) == -2


@pytest.mark.parametrize("fn, args", [
    (b_coeff_II, (1, 3)), (b_coeff_II, (0, 2)), (b_coeff_II, (3, -3)),
    (b_coeff_IV, (-1, 4)), (b_coeff_IV, (-5, 3)), (b_coeff_IV, (4, -4)),
])
def test_b_domain(fn, args):
    with pytest.raises(DomainError):
        fn(*args)


@given(mid, mid)
def test_II_table_matches_closed_form(i, j):
    assert gamma_of(TABLES[FamilyId.II], i, j) == Scalar(oracles.gamma_beta3(i, j))


@given(mid, mid)
def test_III_and_IV_match_oracles(i, j):
    assert gamma_of(TABLES[FamilyId.III], i, j) == Scalar(oracles.gamma_beta1(i, j))
    assert gamma_of(TABLES[FamilyId.IV], i, j) == Scalar(oracles.gamma_beta_m1(i, j))


@pytest.mark.parametrize("family", list(TABLES))
def test_tables_solve_reduced_identity(family):
    t, beta = TABLES[family], BETAS[family]
    g = lambda i, j: gamma_of(t, i, j).to_fraction()
    R = range(-7, 8)
    assert all(oracles.reduced_residual(g, beta, i, j, k) == 0 for i in R for j in R for k in R)


@pytest.mark.parametrize("family", list(TABLES))
@given(i=mid, j=mid)
def test_symmetry_relation(family, i, j):
    t = TABLES[family]
    if i in (0, j, -j):
        return
    assert i * gamma_of(t, i, j) == j * gamma_of(t, j, i)


@pytest.mark.parametrize("family", list(TABLES))
@given(j=mid)
def test_antidiagonal_relation(family, j):
    t, beta = TABLES[family], BETAS[family]
    if j == 0:
        return
    assert beta * gamma_of(t, j, -j) + (beta - 2) * gamma_of(t, j, j) == 0


@given(mid)
def test_III_diagonal_is_general_formula(i):
    assert gamma_of(TABLES[FamilyId.III], i, i) == i ** 3 - i == i * (i * i - 1)


def test_memo_determinism():
    fresh = _IICoefficients()
    t = build_table(FamilyId.II, ModuleParams(0, 3))
    for i in range(-12, 13):
        for j in range(-12, 13):
            assert Scalar(fresh.gamma(i, j)) == gamma_of(t, i, j)


def test_build_table_examples():
    t3 = build_table(FamilyId.III, ModuleParams(2, 1))
    assert leibniz_product(t3, d(3), d(-3)) == element({0: 6}, {-2: 24})
    t1 = build_table(FamilyId.I, ModuleParams(5, 2))
    assert leibniz_product(t1, d(4), d(1)) == element({5: 3})
    t2 = build_table(FamilyId.II, ModuleParams(0, 3))
    assert leibniz_product(t2, d(2), d(2)) == element({}, {4: 9})
    assert gamma_of(t3, 2, 3) == 15
    assert gamma_of(t2, 3, 1) == 3
    assert gamma_of(t1, 7, -2) == 0


def test_normalization_scales_and_zero_degenerates():
    t = build_table(FamilyId.II, ModuleParams(0, 3), 5)
    assert gamma_of(t, 3, 3) == 360
    t0 = build_table(FamilyId.III, ModuleParams(0, 1), 0)
    assert not t0.has_corrections and gamma_of(t0, 2, 3) == 0


@pytest.mark.parametrize("family, alpha, beta", [
    (FamilyId.THM1, 1, 0), (FamilyId.I, "1/2", 0), (FamilyId.II, 0, 1),
    (FamilyId.III, 0, 3), (FamilyId.IV, 0, 1), (FamilyId.II, "1/2", 3),
])
def test_family_constraints(family, alpha, beta):
    with pytest.raises(ContractError):
        build_table(family, ModuleParams(alpha, beta))


def test_family_I_any_beta():
    for beta in (-1, 0, 1, 2, 3, "7/2"):
        build_table(FamilyId.I, ModuleParams(0, beta))


def test_records_and_renderings():
    t = build_table(FamilyId.III, ModuleParams(2, 1))
    recs = table_records(t, range(-1, 2))
    r = next(r for r in recs if (r["i"], r["j"]) == (1, -1))
    assert r == {"i": 1, "j": -1, "witt_index": 0, "witt_coeff": "2", "module_index": -2, "module_coeff": "0"}
    csv_text = records_csv(recs)
    assert csv_text.splitlines()[0] == "i,j,witt_index,witt_coeff,module_index,module_coeff"
    assert len(csv_text.splitlines()) == 10
    tex = records_latex(table_records(build_table(FamilyId.II, ModuleParams(0, 3)), [2, 3]))
    assert "\\frac{162}{5}" in tex and tex.startswith("\\begin{tabular}")
    thm1 = table_records(build_table(FamilyId.THM1, ModuleParams("1/2", 0)), [0])
    assert thm1[0]["module_index"] is None


def test_iv_printed_disagrees_with_solver_table():
    diffs = iv_discrepancies(range(2, 7))
    pairs = {(x["i"], x["j"]) for x in diffs}
    assert (3, 3) in pairs
    assert (2, 2) not in pairs and (2, 3) not in pairs
