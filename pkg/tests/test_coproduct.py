import pytest

import yangslice.coproduct as cp
from yangslice.cartan import cartan
from yangslice.coproduct import (
    DirectRangeError,
    TensorNC,
    coprod_ctx,
    coproduct_relation_check,
    delta_gen,
    delta_raise,
    explicit_comult_check,
    f_weight_shape_check,
    grading_check,
    localized_e_check,
    raise_vs_direct_check,
    shift_compatibility_check,
)
from yangslice.gklo import gklo_data
from yangslice.rational import Rat
from yangslice.yangian import GenSym, NCElem

A1, A2, B2 = cartan("A1"), cartan("A2"), cartan("B2")
one = NCElem.one()


def _ok(results):
    bad = [r for r in results if not r.passed]
    assert not bad, bad[:3]
    return results


@pytest.fixture(scope="module")
def a1_ctx():
    data = gklo_data(A1, (2,), (0,))
    return coprod_ctx(A1, data, data)


def test_unshifted_e1_is_primitive(a1_ctx):
    expected = TensorNC.tensor(NCElem.gen("E", 0, 1), one) + TensorNC.tensor(one, NCElem.gen("E", 0, 1))
    assert (a1_ctx.delta_symbolic(GenSym("E", 0, 1)) - expected).is_zero()


def test_low_e_stays_on_the_left():
    ctx = coprod_ctx(A1, gklo_data(A1, (0,), (-2,)), gklo_data(A1, (2,), (0,)))
    for r in (1, 2):
        got = ctx.delta_symbolic(GenSym("E", 0, r))
        assert (got - TensorNC.tensor(NCElem.gen("E", 0, r), one)).is_zero()


def test_first_levendorskii_element_is_primitive():
    ctx = coprod_ctx(A1, gklo_data(A1, (0,), (-2,)), gklo_data(A1, (2,), (0,)))
    expected = TensorNC.tensor(NCElem.gen("H", 0, 3), one) + TensorNC.tensor(one, NCElem.gen("H", 0, 1))
    assert (ctx.delta_S(0, 1) - expected).is_zero()


def test_raised_e2_matches_direct(a1_ctx):
    direct = delta_gen(a1_ctx, GenSym("E", 0, 2))
    assert delta_raise(a1_ctx, GenSym("E", 0, 2), start=1) == direct


def test_raised_f2_matches_direct(a1_ctx):
    assert delta_raise(a1_ctx, GenSym("F", 0, 2), start=1) == delta_gen(a1_ctx, GenSym("F", 0, 2))


def test_a1_checks(a1_ctx):
    _ok(raise_vs_direct_check(a1_ctx, 3))
    _ok(grading_check(a1_ctx, 3))
    _ok(coproduct_relation_check(a1_ctx, 3))


def test_direct_range_is_enforced(a1_ctx):
    with pytest.raises(DirectRangeError):
        delta_gen(a1_ctx, GenSym("E", 0, 4))
    with pytest.raises(ValueError):
        delta_raise(a1_ctx, GenSym("E", 0, 2), start=3)


def test_shifted_split_rejects_direct_formulas():
    ctx = coprod_ctx(A1, gklo_data(A1, (2,), (0,)), gklo_data(A1, (2,), (2,)))
    assert ctx.shifted
    with pytest.raises(DirectRangeError):
        delta_gen(ctx, GenSym("E", 0, 1))


def test_a2_relations():
    data = gklo_data(A2, (1, 1), (0, 0))
    _ok(coproduct_relation_check(coprod_ctx(A2, data, data), 2))


def test_b2_raising_agrees_with_direct_formulas():
    # regression: non-simple F root vectors must be dual to the E root vectors
    data = gklo_data(B2, (0, 1), (0, 0), ((), (Rat(1, 2),)))
    _ok(raise_vs_direct_check(coprod_ctx(B2, data, data), 3))


def test_wrong_root_vector_normalisation_is_detected(monkeypatch):
    orig = cp._root_data(A2)
    monkeypatch.setattr(cp, "_root_data", lambda dat: tuple((g, s, c * 2 if sum(g) > 1 else c) for g, s, c in orig))
    data = gklo_data(A2, (1, 1), (0, 0))
    results = coproduct_relation_check(coprod_ctx(A2, data, data), 2)
    assert any(not r.passed for r in results)


def test_shift_square_a1():
    _ok(shift_compatibility_check(A1, gklo_data(A1, (1,), (-1,)), gklo_data(A1, (1,), (-1,)), (-1,), (-1,), 3))


def test_localized_e():
    results = _ok(localized_e_check(A1, (2,), (0,), ((0, 0),), 0))
    assert all("via shift embedding" in r.check_id for r in results)


@pytest.mark.parametrize("i", [0, 1])
def test_localized_e_a2(i):
    _ok(localized_e_check(A2, (1, 1), (0, 0), ((0,), (0,)), i))


def test_f_weight_shape():
    _ok(f_weight_shape_check(A2, (1, 1), (0, 0), ((0,), (0,)), 0))


def test_explicit_comultiplication_a1():
    _ok(explicit_comult_check(A1, (2,), (0,), ((0, 0),), 0))


def test_explicit_comultiplication_with_parameters():
    _ok(explicit_comult_check(A1, (4,), (2,), (("0", "1/2", "1", "0"),), 0))
