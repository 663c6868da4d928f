"""Explicit PGL_2 slices: matrices [[a, b], [c, d]] of polynomials in t.

A point of the slice of weight lambda at mu = lambda - 2m has d monic of
degree m, b and c of degree below m, and determinant t^lambda.  On the
GL_2 cover its torus exponents are (lambda - m, m).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .laurent import LPoly, lagrange
from .rational import ONE, Rat, rat
from .slices import DEFAULT_WINDOW, LoopMat, SlicePoint, inverse_map, slice_point


@dataclass(frozen=True)
class Rank1SliceCoords:
    lam: int
    m: int
    a: LPoly
    b: LPoly
    c: LPoly
    d: LPoly

    @property
    def mu(self) -> Tuple[int, int]:
        return (self.lam - self.m, self.m)

    def to_point(self, hi: int = DEFAULT_WINDOW) -> SlicePoint:
        return slice_point(LoopMat.from_lpolys([[self.a, self.b], [self.c, self.d]], hi), self.mu)

    def det(self) -> LPoly:
        return self.a * self.d - self.b * self.c

    def b_coeff(self, k: int):
        """b^(k): coefficient of t^(m-k) in b."""
        return self.b.coeff(self.m - k)

    def d_coeff(self, k: int):
        return self.d.coeff(self.m - k)

    def same(self, other: "Rank1SliceCoords") -> bool:
        return (self.lam, self.m) == (other.lam, other.m) and all(
            getattr(self, f) == getattr(other, f) for f in "abcd"
        )

    def to_record(self) -> Dict[str, object]:
        return {"lambda": self.lam, "m": self.m, **{f: getattr(self, f).to_strings() for f in "abcd"}}


def coords_from_point(p: SlicePoint, lam: int) -> Rank1SliceCoords:
    """Read polynomial entries back; a nonzero t^-k coefficient inside the window raises."""
    entries = [[LPoly.from_series(p.g.rows[i][j]) for j in range(2)] for i in range(2)]
    for row in entries:
        for e in row:
            if not e.is_polynomial():
                raise ValueError(f"entry {e} is not a polynomial")
    lam_minus_m, m = p.mu
    if lam_minus_m + m != lam:
        raise ValueError(f"torus exponents {p.mu} do not match lambda = {lam}")
    return Rank1SliceCoords(lam, m, entries[0][0], entries[0][1], entries[1][0], entries[1][1])


# Membership


def minor_degree_check(p: Rank1SliceCoords) -> bool:
    """Entries polynomial, d monic of degree m, deg b, deg c < m, det = t^lambda."""
    return all(ok for _, ok in constraint_report(p))


def constraint_report(p: Rank1SliceCoords) -> List[Tuple[str, bool]]:
    return [
        ("polynomial entries", all(getattr(p, f).is_polynomial() for f in "abcd")),
        ("d monic of degree m", p.d.is_monic() and p.d.degree() == p.m),
        ("deg b, deg c < m", p.b.degree() < p.m and p.c.degree() < p.m),
        ("det = t^lambda", p.det() == LPoly.t(p.lam)),
    ]


# Reduction by one step


def rank1_reduce(p: Rank1SliceCoords) -> Rank1SliceCoords:
    """Closed form for pi(xi(g)^-1 g) on the level set b^(1) = 1.

    b' = b (t - b^(2) + d^(1)) - d and d' = b; c' = a mod b, and a' follows
    from det = t^lambda.
    """
    if p.m < 1 or p.b_coeff(1) != 1:
        raise ValueError("rank1_reduce needs m >= 1 and b^(1) = 1")
    b2, d1 = p.b_coeff(2), p.d_coeff(1)
    b_new = p.b * LPoly({1: ONE, 0: d1 - b2}) - p.d
    d_new = p.b
    c_new = p.a % d_new
    a_new = (LPoly.t(p.lam) + b_new * c_new).exact_div(d_new)
    out = Rank1SliceCoords(p.lam, p.m - 1, a_new, b_new, c_new, d_new)
    if not minor_degree_check(out):
        raise AssertionError(f"reduced point violates the slice constraints: {out}")
    return out


def reduce_via_inverse_map(p: Rank1SliceCoords, hi: int = DEFAULT_WINDOW) -> Rank1SliceCoords:
    """Second component of f(g), read back as polynomial coordinates."""
    _, rest = inverse_map(p.to_point(hi), 0)
    return coords_from_point(rest, p.lam)


# Random points


def _random_rat(rng: random.Random, size: int = 5, nonzero: bool = False) -> Rat:
    while True:
        v = Rat(rng.randint(-size, size), rng.randint(1, size))
        if v or not nonzero:
            return v


def random_rank1_point(rng: random.Random, lam: int, m: int, b_lead=None) -> Rank1SliceCoords:
    """A point with d split over Q with distinct roots.

    d is chosen first, then b freely (nonvanishing at the roots of d), then
    c by interpolation so that b c = -t^lambda at the roots; a = (t^lambda + b c) / d.
    """
    if m == 0:
        return Rank1SliceCoords(lam, 0, LPoly.t(lam), LPoly(), LPoly(), LPoly.const(ONE))
    while True:
        roots = set()
        while len(roots) < m:
            roots.add(_random_rat(rng))
        roots = sorted(roots)
        d = LPoly.const(ONE)
        for x in roots:
            d = d * LPoly({1: ONE, 0: -x})
        lead = rat(b_lead) if b_lead is not None else _random_rat(rng, nonzero=True)
        b = LPoly({m - 1: lead, **{k: _random_rat(rng) for k in range(m - 1)}})
        if any(b.evaluate(x) == 0 for x in roots):
            continue
        c = lagrange([(x, -(x ** lam) / b.evaluate(x)) for x in roots])
        a = (LPoly.t(lam) + b * c).exact_div(d)
        return Rank1SliceCoords(lam, m, a, b, c, d)


def random_w0_point(rng: random.Random, i: int = 0):
    from .slices import W0AlphaPoint

    return W0AlphaPoint(i, _random_rat(rng, nonzero=True), _random_rat(rng))


# Mutations, one family per constraint


def _bump(rng: random.Random, poly: LPoly, k: int) -> LPoly:
    return poly + LPoly.t(k, _random_rat(rng, nonzero=True))


def mutate(rng: random.Random, p: Rank1SliceCoords, constraint: str) -> Rank1SliceCoords:
    """Perturb ``p`` so that exactly the named constraint is (at least) violated."""
    fields = {f: getattr(p, f) for f in "abcd"}
    if constraint == "polynomial entries":
        f = rng.choice("abcd")
        fields[f] = _bump(rng, fields[f], -rng.randint(1, 3))
    elif constraint == "d monic of degree m":
        if rng.random() < 0.5:
            fields["d"] = fields["d"] + LPoly.t(p.m, _random_rat(rng, nonzero=True))
        else:
            fields["d"] = _bump(rng, fields["d"], p.m + rng.randint(1, 2))
    elif constraint == "deg b, deg c < m":
        f = rng.choice("bc")
        fields[f] = _bump(rng, fields[f], p.m + rng.randint(0, 2))
    elif constraint == "det = t^lambda":
        fields["a"] = _bump(rng, fields["a"], rng.randint(0, max(p.lam, 1)))
    else:
        raise ValueError(f"unknown constraint {constraint!r}")
    return Rank1SliceCoords(p.lam, p.m, **fields)


CONSTRAINTS = ("polynomial entries", "d monic of degree m", "deg b, deg c < m", "det = t^lambda")


def worked_example(d1=Fraction(3, 2)) -> Rank1SliceCoords:
    """lambda = 2, m = 1: [[t - d1, 1], [-d1^2, t + d1]]."""
    d1 = rat(d1)
    return Rank1SliceCoords(2, 1, LPoly({1: ONE, 0: -d1}), LPoly.const(ONE), LPoly.const(-d1 * d1), LPoly({1: ONE, 0: d1}))
