import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yangslice.cartan import cartan
from yangslice.localization import (
    DOp,
    ad_nilpotency_check,
    ad_nilpotency_identities,
    default_oracle_family,
    dop_commutator,
    dop_mul,
    presentation_map,
    qhr_check,
)
from yangslice.rational import Rat
from yangslice.yangian import E, YangianCtx, commutator, nf_a1

A1, A2 = cartan("A1"), cartan("A2")


def test_z_and_d_do_not_commute():
    assert dop_commutator(DOp.z(), DOp.partial()) == DOp.scalar(-1)


def test_z_against_second_derivative():
    assert dop_commutator(DOp.z(), DOp.partial(2)) == DOp.partial(1) * -2


def test_inverse_z_times_z_is_one():
    assert DOp.z(-1) * DOp.z() == DOp.scalar(1)


def _apply(op: DOp, n: int):
    """Action on z^n as {exponent: coefficient}; D sits to the left of z."""
    out = {}
    for (m, k), c in op.terms.items():
        e, coeff = n + k, c
        for _ in range(m):
            coeff *= e
            e -= 1
        if coeff:
            out[e] = out.get(e, 0) + coeff
    return {e: c for e, c in out.items() if c}


def _compose(a: DOp, b: DOp, n: int):
    out = {}
    for e, c in _apply(b, n).items():
        for e2, c2 in _apply(a, e).items():
            out[e2] = out.get(e2, 0) + c * c2
    return {e: c for e, c in out.items() if c}


dops = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(-2, 3)), st.integers(-4, 4), max_size=3).map(DOp)


@settings(max_examples=60, deadline=None)
@given(dops, dops, st.integers(-4, 6))
def test_product_agrees_with_action_on_monomials(a, b, n):
    assert _apply(dop_mul(a, b), n) == _compose(a, b, n)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_presentation_map(d):
    img = presentation_map(d)
    assert img["E"] * img["F"] == DOp.scalar(Rat(-1, d))
    assert dop_commutator(img["E"], img["A"]) == img["E"] * d


def test_qhr_check_passes():
    results = qhr_check(20)
    assert all(r.passed for r in results)
    assert any("dimension 1" in r.check_id for r in results)


def test_unshifted_has_no_ad_nilpotency():
    with pytest.raises(ValueError):
        ad_nilpotency_identities(YangianCtx(A1, (0,), cap=6), 0)
    with pytest.raises(ValueError):
        ad_nilpotency_identities(YangianCtx(A1, (-1,), cap=6), 0)


def test_ad_nilpotency_a1_exact():
    results = ad_nilpotency_check(YangianCtx(A1, (-2,), cap=8), 0)
    assert results and all(r.passed for r in results)


def test_ee_commutator_needs_its_square_correction():
    ctx = YangianCtx(A1, (-2,), cap=8)
    assert not nf_a1(ctx, commutator(E(0, 1), E(0, 2))).is_zero()


def test_ad_nilpotency_a2_oracle_relative():
    ctx = YangianCtx(A2, (-2, -2), cap=8)
    results = ad_nilpotency_check(ctx, 0)
    assert results and all(r.passed and "oracle-relative" in r.check_id for r in results)


def test_oracle_family_must_share_shift():
    ctx = YangianCtx(A2, (-2, -2), cap=8)
    family = default_oracle_family(A2, (-3, -3))
    with pytest.raises(ValueError):
        ad_nilpotency_check(ctx, 0, family)
