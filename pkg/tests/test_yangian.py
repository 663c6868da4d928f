import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yangslice.cartan import cartan
from yangslice.poly import PolyRing
from yangslice.rational import HALF, ONE, Rat
from yangslice.yangian import (
    MIXED,
    CapOverflow,
    E,
    F,
    GenSym,
    H,
    NCElem,
    YangianCtx,
    a_series,
    commutator,
    filtration_degree,
    is_ordered,
    levendorskii_S,
    nf_a1,
    relation_defect,
    relation_instances,
    root_grading,
    shift_morphism,
)

A1, A2 = cartan("A1"), cartan("A2")


@pytest.fixture
def y0():
    return YangianCtx(A1, (0,), cap=6)


def test_ef_defect(y0):
    assert relation_defect(y0, "EF", (0, 0), (1, 1)) == E(0, 1) * F(0, 1) - F(0, 1) * E(0, 1) - H(0, 1)


def test_hh_defect_is_plain_commutator(y0):
    assert relation_defect(y0, "HH", (0, 0), (1, 2)) == commutator(H(0, 1), H(0, 2))


def test_ee_defect_a1(y0):
    e1, e2 = E(0, 1), E(0, 2)
    expected = commutator(e2, e1) - commutator(e1, e2) - e1 * e1 * 2
    assert relation_defect(y0, "EE", (0, 0), (1, 1)) == expected


def test_normal_form_e2_e1(y0):
    assert nf_a1(y0, E(0, 2) * E(0, 1)) == E(0, 1) * E(0, 2) + E(0, 1) * E(0, 1)


def test_normal_form_f1_e1(y0):
    assert nf_a1(y0, F(0, 1) * E(0, 1)) == E(0, 1) * F(0, 1) - H(0, 1)


def test_ordered_monomial_is_fixed(y0):
    x = E(0, 1) * E(0, 2) * F(0, 1) * H(0, 2)
    assert nf_a1(y0, x) == x


@pytest.mark.parametrize("rel, idx, sups", [r for r in relation_instances(YangianCtx(A1, (0,), cap=3), 3)])
def test_defects_vanish_in_normal_form(rel, idx, sups):
    ctx = YangianCtx(A1, (0,), cap=6)
    assert nf_a1(ctx, relation_defect(ctx, rel, idx, sups)).is_zero()


letters = st.sampled_from([GenSym(k, 0, r) for k in "EFH" for r in (1, 2)])


@settings(max_examples=40, deadline=None)
@given(st.lists(letters, min_size=1, max_size=4))
def test_normal_form_is_ordered_and_idempotent(word):
    ctx = YangianCtx(A1, (0,), cap=8)
    nf = nf_a1(ctx, NCElem({tuple(word): ONE}))
    assert all(is_ordered(w) for w in nf.terms)
    assert nf_a1(ctx, nf) == nf


@settings(max_examples=25, deadline=None)
@given(st.lists(letters, min_size=1, max_size=2), st.lists(letters, min_size=1, max_size=2))
def test_normal_form_respects_products(u, v):
    ctx = YangianCtx(A1, (0,), cap=8)
    x, y = NCElem({tuple(u): ONE}), NCElem({tuple(v): ONE})
    assert nf_a1(ctx, nf_a1(ctx, x) * nf_a1(ctx, y)) == nf_a1(ctx, x * y)


def test_shift_morphism_a1():
    ctx = YangianCtx(A1, (0,), cap=6)
    _, img = shift_morphism(ctx, (0,), (-2,), F(0, 1) + E(0, 1) + H(0, 1))
    assert img == F(0, 3) + E(0, 1) + H(0, 3)


def test_trivial_shift_is_identity():
    ctx = YangianCtx(A2, (0, 0), cap=4)
    x = E(0, 1) * F(1, 2) + H(1, 1)
    assert shift_morphism(ctx, (0, 0), (0, 0), x)[1] == x


def test_shift_morphism_a2_left():
    ctx = YangianCtx(A2, (0, 0), cap=4)
    _, img = shift_morphism(ctx, (-1, 0), (0, 0), E(0, 2) + E(1, 2))
    assert img == E(0, 3) + E(1, 2)


def test_shift_rejects_non_antidominant():
    with pytest.raises(ValueError):
        shift_morphism(YangianCtx(A1, (0,)), (1,), (0,), E(0, 1))


def test_shift_past_cap_overflows():
    with pytest.raises(CapOverflow):
        shift_morphism(YangianCtx(A1, (0,), cap=3), (0,), (-2,), F(0, 2))


def test_levendorskii_elements():
    ctx = YangianCtx(A1, (0,), cap=4)
    assert levendorskii_S(ctx, 0, 1) == H(0, 1)
    assert levendorskii_S(ctx, 0, 2) == H(0, 2) - H(0, 1) * H(0, 1) * HALF
    assert levendorskii_S(YangianCtx(A1, (-1,), cap=4), 0, 1) == H(0, 2)


def test_filtration_degrees():
    assert filtration_degree(E(0, 1), (0,), (0,)) == 1
    assert filtration_degree(H(0, 1), (0,), (0,)) == 1
    assert filtration_degree(F(0, 2), (0,), (-2,)) == 0
    assert filtration_degree(NCElem(), (0,), (0,)) is None


def test_root_grading():
    assert root_grading(E(0, 1) * F(0, 2), 2) == (0, 0)
    assert root_grading(E(0, 1) * E(1, 1), 2) == (1, 1)
    assert root_grading(E(0, 1) + H(0, 1), 2) == MIXED


def test_a_series_numeric_host():
    ring = PolyRing(["w"])
    w = ring.var("w")
    # H^(1) = 2w + 1 for lambda = 2, mu = 0, R = {0, 0}
    a = a_series(A1, (2,), (0,), ((0, 0),), 1, lambda i, p: w * 2 + ring.one(), ring.one())
    assert a[(0, 0)] == ring.one()
    assert a[(0, 1)] == -w


def test_a_series_symbolic_host():
    ring = PolyRing(["h"])
    h = ring.var("h")
    a = a_series(A1, (2,), (0,), ((0, 0),), 1, lambda i, p: h, ring.one())
    assert a[(0, 1)] == h * Rat(-1, 2) + ring.const(HALF)
