"""Seeded sweeps over random slice points: inverse pair, equivariance,
rank-one reduction and membership."""

from __future__ import annotations

import random
from typing import Iterable, List, Sequence, Tuple

from .gklo import InstanceResult
from .series import TruncSeries
from .rank1 import (
    CONSTRAINTS,
    Rank1SliceCoords,
    _random_rat,
    coords_from_point,
    minor_degree_check,
    mutate,
    random_rank1_point,
    random_w0_point,
    rank1_reduce,
    reduce_via_inverse_map,
    worked_example,
)
from .slices import (
    DEFAULT_WINDOW,
    LoopMat,
    SlicePoint,
    W0AlphaPoint,
    ga_action,
    inverse_map,
    moment_map,
    multiply_slices,
    pi_project,
    shift_point,
    slice_point,
)

PGL2_CASES = tuple((lam, m) for lam in range(5) for m in range(1, lam + 2))


def _same_w0(a: W0AlphaPoint, b: W0AlphaPoint) -> bool:
    return a.i == b.i and a.b == b.b and a.c == b.c


def _tally(label: str, oks: Sequence[bool]) -> InstanceResult:
    return InstanceResult(label, all(oks), f"{sum(oks)}/{len(oks)}")


def pgl2_inverse_pair_check(lam: int, m: int, samples: int = 100, seed: int = 0, collect: List | None = None) -> List[InstanceResult]:
    """m(f(g)) = g, f(m(g1, g2)) = (g1, g2), Ga equivariance and Phi(m(g1, g2)) = Phi(g1).

    Every comparison is on polynomial coordinates, so it is exact.  Points
    produced along the way are appended to ``collect``.
    """
    rng = random.Random(f"pgl2-{lam}-{m}-{seed}")
    mf, fm, equi, phi = [], [], [], []
    for _ in range(samples):
        g = random_rank1_point(rng, lam, m)
        w, rest = inverse_map(g.to_point(), 0)
        back = coords_from_point(multiply_slices(w.point(), rest), lam)
        mf.append(back.same(g))

        g1 = random_w0_point(rng)
        g2 = random_rank1_point(rng, lam, m - 1)
        prod_point = multiply_slices(g1.point(), g2.to_point())
        prod = coords_from_point(prod_point, lam)
        w2, rest2 = inverse_map(prod.to_point(), 0)
        fm.append(_same_w0(w2, g1) and coords_from_point(rest2, lam).same(g2))

        a = _random_rat(rng)
        lhs = coords_from_point(multiply_slices(ga_action(a, g1.point(), 0), g2.to_point()), lam)
        rhs = coords_from_point(ga_action(a, prod.to_point(), 0), lam)
        equi.append(lhs.same(rhs))
        phi.append(moment_map(prod_point, 0) == moment_map(g1.point(), 0))
        if collect is not None:
            collect.extend([g, g2, prod, lhs, coords_from_point(rest, lam)])
    tag = f"PGL2 lambda={lam} m={m}"
    return [
        _tally(f"{tag}: m(f(g)) = g", mf),
        _tally(f"{tag}: f(m(g1, g2)) = (g1, g2)", fm),
        _tally(f"{tag}: m(a.g1, g2) = a.m(g1, g2)", equi),
        _tally(f"{tag}: Phi(m(g1, g2)) = Phi(g1)", phi),
    ]


def pgl2_sweep(samples: int = 100, seed: int = 0, cases: Iterable[Tuple[int, int]] = PGL2_CASES, collect: List | None = None) -> List[InstanceResult]:
    out = []
    for lam, m in cases:
        out.extend(pgl2_inverse_pair_check(lam, m, samples, seed, collect))
    return out


# SL_3 at lambda = varpi_1 + varpi_2


def random_sl3_point(rng: random.Random, i: int, hi: int = DEFAULT_WINDOW) -> SlicePoint:
    """1 + v w^T t^-1 with w^T v = 0 and nonzero (i, i+1) entry."""
    while True:
        v = [_random_rat(rng) for _ in range(3)]
        w = [_random_rat(rng) for _ in range(3)]
        # force w.v = 0 through the last coordinate of w
        if v[2] == 0:
            continue
        w[2] = -(v[0] * w[0] + v[1] * w[1]) / v[2]
        if v[i] * w[i + 1] == 0:
            continue
        g = LoopMat.identity(3, hi)
        for r in range(3):
            for s in range(3):
                if v[r] * w[s]:
                    g.rows[r][s] = g.rows[r][s] + TruncSeries({1: v[r] * w[s]}, 1, hi)
        return slice_point(g, (0, 0, 0))


def sl3_spot_check(samples: int = 20, seed: int = 0) -> List[InstanceResult]:
    rng = random.Random(f"sl3-{seed}")
    results = []
    for i in (0, 1):
        mf, fm, equi, phi = [], [], [], []
        for _ in range(samples):
            g = random_sl3_point(rng, i)
            w, rest = inverse_map(g, i)
            mf.append(multiply_slices(w.point(3), rest).agrees_with(g))

            g1 = random_w0_point(rng, i)
            _, g2 = inverse_map(random_sl3_point(rng, i), i)
            prod = multiply_slices(g1.point(3), g2)
            w2, rest2 = inverse_map(prod, i)
            fm.append(_same_w0(w2, g1) and rest2.agrees_with(g2))

            a = _random_rat(rng)
            lhs = multiply_slices(ga_action(a, g1.point(3), i), g2)
            equi.append(lhs.agrees_with(ga_action(a, prod, i)))
            phi.append(moment_map(prod, i) == moment_map(g1.point(3), i))
        tag = f"SL3 node {i + 1}"
        results += [
            _tally(f"{tag}: m(f(g)) = g on the window", mf),
            _tally(f"{tag}: f(m(g1, g2)) = (g1, g2) on the window", fm),
            _tally(f"{tag}: m(a.g1, g2) = a.m(g1, g2) on the window", equi),
            _tally(f"{tag}: Phi(m(g1, g2)) = Phi(g1)", phi),
        ]
    return results


# Rank-one reduction


def rank1_reduction_check(samples: int = 100, seed: int = 0, collect: List | None = None) -> List[InstanceResult]:
    rng = random.Random(f"rank1-{seed}")
    agree, valid, dprime = [], [], []
    for k in range(samples):
        lam, m = PGL2_CASES[k % len(PGL2_CASES)]
        p = random_rank1_point(rng, lam, m, b_lead=1)
        closed = rank1_reduce(p)
        general = reduce_via_inverse_map(p)
        agree.append(closed.same(general))
        valid.append(minor_degree_check(closed))
        dprime.append(closed.d == p.b)
        if collect is not None:
            collect.extend([p, closed])
    ex = worked_example()
    red = rank1_reduce(ex)
    example_ok = red.m == 0 and not red.b and red.d == 1 and reduce_via_inverse_map(ex).same(red)
    return [
        _tally("rank-one closed form agrees with pi(xi(g)^-1 g)", agree),
        _tally("reduced points satisfy the slice constraints", valid),
        _tally("d' = b", dprime),
        InstanceResult("worked example lambda=2, m=1 reduces to b'=0, d'=1", example_ok, str(red)),
    ]


# Membership


def membership_check(points: Sequence[Rank1SliceCoords], mutations: int = 50, seed: int = 0) -> List[InstanceResult]:
    rng = random.Random(f"minor-{seed}")
    out = [_tally("generated points satisfy the slice constraints", [minor_degree_check(p) for p in points])]
    pool = [p for p in points if p.m >= 1] or list(points)
    for name in CONSTRAINTS:
        rejected = [not minor_degree_check(mutate(rng, rng.choice(pool), name)) for _ in range(mutations)]
        out.append(_tally(f"mutations violating '{name}' are rejected", rejected))
    return out


# Structural properties of pi and the shift maps


def pi_invariance_check(samples: int = 20, seed: int = 0) -> List[InstanceResult]:
    """pi(n g n_-) = pi(g) for polynomial unipotents, and pi is idempotent."""
    from .laurent import LPoly

    rng = random.Random(f"pi-{seed}")
    inv, idem = [], []
    for _ in range(samples):
        lam = rng.randint(0, 3)
        p = random_rank1_point(rng, lam, rng.randint(1, lam + 1)).to_point()
        hi = p.window()
        n_poly = LPoly({k: _random_rat(rng) for k in range(3)}).to_series(hi)
        nm_poly = LPoly({k: _random_rat(rng) for k in range(3)}).to_series(hi)
        g = LoopMat.root_element(2, 0, 1, n_poly, hi) * p.g * LoopMat.root_element(2, 1, 0, nm_poly, hi)
        inv.append(pi_project(g, p.mu).agrees_with(p))
        idem.append(pi_project(p.g, p.mu).agrees_with(p))
    return [_tally("pi(n g n_-) = pi(g)", inv), _tally("pi(g) = g on W_mu", idem)]


def shift_square_check(samples: int = 20, seed: int = 0) -> List[InstanceResult]:
    """iota(m(g1, g2)) = m(iota(g1), iota(g2)) for antidominant shifts on both sides."""
    rng = random.Random(f"shift-{seed}")
    oks = []
    for _ in range(samples):
        g1 = random_w0_point(rng).point()
        g2 = random_rank1_point(rng, rng.randint(0, 3), 1).to_point()
        nu1 = (-rng.randint(0, 2), 0)
        nu2 = (0, rng.randint(0, 2))
        top = shift_point(multiply_slices(g1, g2), nu1, nu2)
        bottom = multiply_slices(shift_point(g1, nu1, (0, 0)), shift_point(g2, (0, 0), nu2))
        oks.append(top.agrees_with(bottom))
    return [_tally("shift and multiplication commute", oks)]
