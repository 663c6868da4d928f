import pytest

from yangslice.kscalar import KScalar
from yangslice.laurent import LPoly, lagrange
from yangslice.rational import ONE, Rat
from yangslice.series import TruncSeries
from yangslice.slices import (
    LocusError,
    LoopMat,
    W0AlphaPoint,
    chart_coordinates,
    ga_action,
    gauss_decompose,
    identity_point,
    inverse_map,
    moment_map,
    multiply_slices,
    pi_project,
    psi_coeffs,
    r_point,
    shift_point,
    slice_point,
)

HI = 8


def x(k=1, c=ONE):
    """c t^-k as a series."""
    return TruncSeries.monomial(c, k, HI)


def test_laurent_division():
    t = LPoly.t()
    q, r = (t ** 3 + LPoly.const(2)).divmod(t * t + LPoly.const(1))
    assert q == t and r == LPoly.const(2) - t


def test_lagrange_interpolates():
    p = lagrange([(Rat(0), Rat(1)), (Rat(1), Rat(3)), (Rat(2), Rat(7))])
    assert p == LPoly.from_coeffs([1, 1, 1])


def test_series_round_trip():
    p = LPoly({2: ONE, 0: Rat(-3)})
    assert LPoly.from_series(p.to_series(HI)) == p


def test_identity_decomposes_trivially():
    u, h, low = gauss_decompose(LoopMat.identity(2, HI))
    assert all(p.is_one() for p in h)
    assert u.agrees_with(LoopMat.identity(2, HI)) and low.agrees_with(LoopMat.identity(2, HI))


def test_gauss_factors_recompose():
    upper = LoopMat.root_element(2, 0, 1, x(), HI)
    lower = LoopMat.root_element(2, 1, 0, x(), HI)
    g = upper * lower
    u, h, low = gauss_decompose(g)
    assert u[0, 1].coefficient(1) == 1 and low[1, 0].coefficient(1) == 1
    assert all(p.is_one() for p in h)
    assert slice_point(g, (0, 0)).agrees_with(pi_project(g))


def test_pi_strips_polynomial_unipotents():
    # x(t + t^-1) t^mu with mu = 0 projects to x(t^-1)
    poly_and_tail = TruncSeries({-1: ONE, 1: ONE}, -1, HI)
    g = LoopMat.root_element(2, 0, 1, poly_and_tail, HI)
    p = pi_project(g, (0, 0))
    assert p.g.agrees_with(LoopMat.root_element(2, 0, 1, x(), HI))


def test_big_cell_is_enforced():
    swap = LoopMat([[TruncSeries({}, HI + 1, HI), x(0)], [x(0), TruncSeries({}, HI + 1, HI)]])
    with pytest.raises(LocusError):
        gauss_decompose(swap)


def test_wrong_torus_shape_is_rejected():
    with pytest.raises(LocusError):
        slice_point(LoopMat.t_power((1, -1), HI), (0, 0))


def test_psi_of_r_point():
    p = r_point(0, Rat(2), Rat(3), hi=HI)
    assert psi_coeffs(p, 0, 1) == 2 and psi_coeffs(p, 0, 2) == 6
    assert chart_coordinates(p, 0) == (2, 3)


def test_moment_map_scales_by_root_of_symmetrizer():
    p = r_point(0, Rat(2), Rat(3), hi=HI)
    assert moment_map(p, 0) == 2
    assert moment_map(p, 0, d=4) == 1
    assert moment_map(p, 0, d=2) == KScalar.sqrt_d((2,), 0)


@pytest.mark.parametrize("d, c_new", [(1, 13), (4, 23)])
def test_ga_action_moves_c(d, c_new):
    # c -> c + d^(1/2) a b with a = 5, b = 2, c = 3
    moved = ga_action(Rat(5), r_point(0, Rat(2), Rat(3), hi=HI), 0, d)
    assert chart_coordinates(moved, 0) == (2, c_new)


def test_inverse_map_on_weight_zero_point():
    w, rest = inverse_map(r_point(0, Rat(-2), Rat(1, 3), hi=HI), 0)
    assert (w.b, w.c) == (-2, Rat(1, 3))
    assert rest.agrees_with(identity_point((0, 0), HI))


def test_outside_moment_locus():
    with pytest.raises(LocusError):
        inverse_map(identity_point((0, 0), HI), 0)


def test_w0_point_needs_nonzero_b():
    with pytest.raises(ValueError):
        W0AlphaPoint(0, Rat(0), Rat(1))


def test_product_of_weight_zero_points():
    p = multiply_slices(r_point(0, Rat(1), Rat(0), hi=HI), r_point(0, Rat(1), Rat(0), hi=HI))
    assert p.mu == (-2, 2)
    assert psi_coeffs(p, 0, 1) == 1


def test_shift_requires_antidominant():
    with pytest.raises(ValueError):
        shift_point(identity_point((0, 0), HI), (1, 0), (0, 0))
