import json

import pytest
from hypothesis import given, strategies as st

from wittleibniz.core import (ContractError, LeibnizElement, ModuleElement, ModuleParams,
                              WittElement, element, is_reducible, leibniz_defect, leibniz_product,
                              module_action, witt_bracket)
from wittleibniz.families import FamilyId, build_table
from wittleibniz.scalar import Scalar, parse_scalar

from conftest import scalars, small_index

d = LeibnizElement.d
v = LeibnizElement.v
W = WittElement.basis
V = ModuleElement.basis

sparse_coeffs = st.dictionaries(small_index, scalars, max_size=4)
witt_elements = sparse_coeffs.map(WittElement)
module_elements = sparse_coeffs.map(ModuleElement)


def test_witt_bracket_examples():
    assert witt_bracket(W(2), W(3)) == WittElement({5: -1})
    assert not witt_bracket(W(1), W(1))
    assert witt_bracket(W(2), W(-2)) == WittElement({0: 4})


def test_module_action_examples():
    assert module_action(V(0), W(1), ModuleParams("1/2", 0)) == ModuleElement({1: Scalar("1/2")})
    assert module_action(V(-1), W(1), ModuleParams(0, 0)) == ModuleElement({0: -1})
    assert module_action(V(1), W(2), ModuleParams(2, 1)) == ModuleElement({3: 5})


def test_product_examples():
    t1 = build_table(FamilyId.I, ModuleParams(5, 2))
    assert leibniz_product(t1, d(2), d(3)) == element({5: -1})
    assert not leibniz_product(t1, v(3), v(5))
    t3 = build_table(FamilyId.III, ModuleParams(2, 1))
    assert leibniz_product(t3, d(2), d(3)) == element({5: -1}, {3: 15})


def test_defect_examples():
    t1 = build_table(FamilyId.I, ModuleParams(5, 2))
    assert not leibniz_defect(t1, d(1), d(2), d(3))
    perturbed = build_table(FamilyId.II, ModuleParams(0, 3), overrides={(2, 1): 2})
    # at (d_2, d_1, d_0) the gamma_{2,1} terms cancel identically (1 = 3 - 2)
    assert not leibniz_defect(perturbed, d(2), d(1), d(0))
    for triple in [(0, 1, 2), (2, 2, 1), (2, 1, 2)]:
        dft = leibniz_defect(perturbed, *(d(i) for i in triple))
        assert dft and not dft.witt


@pytest.mark.parametrize("alpha, beta, expected", [
    (1, 0, True), ("1/2", 0, False), (0, 3, False), (-4, 1, True), ("1/3", 1, False), (2, 2, False),
])
def test_is_reducible(alpha, beta, expected):
    assert is_reducible(ModuleParams(alpha, beta)) is expected


def test_module_index_contract():
    p = ModuleParams("1/2", 0)
    with pytest.raises(ContractError):
        p.module_index(1, 2)
    assert ModuleParams(0, 3).module_index(2, 3) == 5
    assert ModuleParams(2, 3).module_index(2, 3) == 3


def test_corrections_need_integral_alpha():
    t = build_table(FamilyId.II, ModuleParams(0, 3))
    bad = type(t)(FamilyId.II, ModuleParams("1/2", 3))
    with pytest.raises(ContractError):
        leibniz_product(bad, d(1), d(2))


@given(small_index, small_index, small_index)
def test_jacobi_on_basis(i, j, k):
    x, y, z = W(i), W(j), W(k)
    lhs = witt_bracket(x, witt_bracket(y, z))
    rhs = witt_bracket(witt_bracket(x, y), z) - witt_bracket(witt_bracket(x, z), y)
    assert lhs == rhs


@given(witt_elements, witt_elements)
def test_bracket_antisymmetric_and_support(x, y):
    assert witt_bracket(x, y) == -witt_bracket(y, x)
    support = {i + j for i in x.support for j in y.support}
    assert set(witt_bracket(x, y).support) <= support


@given(scalars, scalars, small_index, small_index, small_index)
def test_right_module_identity(alpha, beta, n, i, j):
    p = ModuleParams(alpha, beta)
    vn, x, y = V(n), W(i), W(j)
    lhs = module_action(vn, witt_bracket(x, y), p)
    rhs = module_action(module_action(vn, x, p), y, p) - module_action(module_action(vn, y, p), x, p)
    assert lhs == rhs


@given(module_elements, witt_elements, scalars, scalars)
def test_product_restrictions(m, x, alpha, beta):
    p = ModuleParams(alpha, beta)
    t = build_table(FamilyId.I, ModuleParams(0, beta)) if p.alpha_integer else build_table(FamilyId.THM1, p)
    t_mod = LeibnizElement(module=m)
    t_w = LeibnizElement(witt=x)
    assert leibniz_product(t, t_mod, t_w).module == module_action(m, x, t.params)
    assert not leibniz_product(t, t_w, t_mod)
    assert not leibniz_product(t, t_mod, t_mod)


@given(sparse_coeffs, sparse_coeffs)
def test_no_stored_zeros(a, b):
    x, y = WittElement(a), WittElement(b)
    for e in (x + y, x - y, x - x, x.scale(0), witt_bracket(x, y)):
        assert all(c for _, c in e.items())
    assert not (x - x)


@given(sparse_coeffs, sparse_coeffs)
def test_json_round_trip(a, b):
    e = element(a, b)
    text = json.dumps(e.to_json())
    assert LeibnizElement.from_json(json.loads(text)) == e


def test_json_shape():
    e = element({2: 1}, {-1: parse_scalar("1/2+1i")})
    assert e.to_json() == {"witt": {"2": "1"}, "module": {"-1": "1/2+1i"}}


@given(st.lists(scalars, min_size=3, max_size=3), st.lists(small_index, min_size=3, max_size=3))
def test_defect_linear_in_first_slot(coeffs, idx):
    """Spot check of the basis-triple reduction: the defect is linear in each slot."""
    t = build_table(FamilyId.III, ModuleParams(0, 1))
    i, j, k = idx
    a = d(i).scale(coeffs[0]) + d(j).scale(coeffs[1]) + v(k).scale(coeffs[2])
    lhs = leibniz_defect(t, a, d(j), d(k))
    rhs = (leibniz_defect(t, d(i), d(j), d(k)).scale(coeffs[0])
           + leibniz_defect(t, d(j), d(j), d(k)).scale(coeffs[1])
           + leibniz_defect(t, v(k), d(j), d(k)).scale(coeffs[2]))
    assert lhs == rhs
