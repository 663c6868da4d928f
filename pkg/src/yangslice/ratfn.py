"""Rational functions with a factored, unreduced denominator.

The denominator is a multiset of monic polynomial factors.  Sums use the
least common multiple of the two factor multisets, so repeated identical
denominators never compound.  No gcd is ever taken: equality is decided by
cross-multiplication, which here amounts to testing whether the numerator of
the difference vanishes.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Tuple

from .kscalar import KScalar
from .poly import MPoly, PolyRing
from .rational import ONE, Rat, is_rat, rat


class RatFn:
    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: Mapping[tuple, Tuple[MPoly, int]] | None = None):
        self.num = num
        # factor key -> (monic factor, multiplicity)
        self.den: Dict[tuple, Tuple[MPoly, int]] = dict(den or {})

    @property
    def ring(self) -> PolyRing:
        return self.num.ring

    @classmethod
    def poly(cls, p: MPoly) -> "RatFn":
        return cls(p)

    @classmethod
    def fraction(cls, num: MPoly, den: MPoly) -> "RatFn":
        """num / den with ``den`` treated as a single factor."""
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.is_constant() and len(den.terms) == 1 and 0 in den.terms:
            return cls(num * (ONE / den.terms[0]))
        monic, lc = den.monic()
        return cls(num * (ONE / lc), {monic.key(): (monic, 1)})

    @classmethod
    def from_factors(cls, num: MPoly, factors: Iterable[MPoly]) -> "RatFn":
        out = cls(num)
        for f in factors:
            out = out * cls.fraction(num.ring.one(), f)
        return out

    def _lift(self, other) -> "RatFn":
        if isinstance(other, RatFn):
            return other
        if isinstance(other, MPoly):
            return RatFn(other)
        if is_rat(other) or isinstance(other, KScalar):
            return RatFn(self.num.ring.const(other))
        return NotImplemented

    def den_poly(self) -> MPoly:
        out = self.num.ring.one()
        for f, e in self.den.values():
            out = out * f ** e
        return out

    # arithmetic
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den.keys() == other.den.keys() and all(
            self.den[k][1] == other.den[k][1] for k in self.den
        ):
            return RatFn(self.num + other.num, self.den)
        lcm = dict(self.den)
        for k, (f, e) in other.den.items():
            if k not in lcm or lcm[k][1] < e:
                lcm[k] = (f, e)
        return RatFn(self._raise_to(lcm) + other._raise_to(lcm), lcm)

    def _raise_to(self, lcm) -> MPoly:
        num = self.num
        for k, (f, e) in lcm.items():
            have = self.den[k][1] if k in self.den else 0
            if e > have:
                num = num * f ** (e - have)
        return num

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rat(other):
            return RatFn(self.num * other, self.den)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        num = self.num * other.num
        if num.is_zero():
            return RatFn(num)
        den = dict(self.den)
        for k, (f, e) in other.den.items():
            den[k] = (f, den[k][1] + e) if k in den else (f, e)
        return RatFn(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFn":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFn.fraction(self.den_poly(), self.num)

    def __truediv__(self, other):
        if is_rat(other):
            return RatFn(self.num * (ONE / rat(other)), self.den)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFn(self.num.ring.one())
        for _ in range(n):
            out = out * self
        return out

    # substitution
    def shift(self, amounts: Mapping[int, object]) -> "RatFn":
        """Substitute w_j -> w_j + amounts[j]; shifting keeps factors monic."""
        if not amounts:
            return self
        den = {}
        for f, e in self.den.values():
            g = f.shift(amounts)
            den[g.key()] = (g, e)
        return RatFn(self.num.shift(amounts), den)

    def evaluate(self, values: Mapping[int, object]) -> "RatFn":
        num = self.num.evaluate(values)
        out = RatFn(num)
        for f, e in self.den.values():
            out = out * RatFn.fraction(self.num.ring.one(), f.evaluate(values)) ** e
        return out

    # predicates
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.den

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return ratfn_eq(self, other)

    __hash__ = None

    def factors(self):
        """Denominator factors with multiplicities, in a deterministic order."""
        return [self.den[k] for k in sorted(self.den)]

    def reduce(self) -> "RatFn":
        """Cancel denominator factors that divide the numerator.

        Only factors containing some variable to the first power with unit
        coefficient are tried; that covers every factor produced by the
        difference-operator code.
        """
        num = self.num
        den = dict(self.den)
        for k in sorted(den):
            f, e = den[k]
            while e:
                q = divide_linear(num, f)
                if q is None:
                    break
                num = q
                e -= 1
            if e:
                den[k] = (f, e)
            else:
                del den[k]
        return RatFn(num, den)

    def to_poly(self) -> MPoly:
        r = self.reduce()
        if r.den:
            raise ValueError("not a polynomial")
        return r.num

    def __repr__(self):
        return f"RatFn({self})"

    def __str__(self):
        if not self.den:
            return str(self.num)
        dens = " * ".join(f"({f})" + (f"^{e}" if e > 1 else "") for f, e in self.factors())
        return f"({self.num}) / ({dens})"


def divide_linear(p: MPoly, f: MPoly) -> MPoly | None:
    """Exact quotient p / f when f = x_j + (terms free of x_j), else None."""
    ring = p.ring
    pivot = None
    for j in sorted(f.variables()):
        if f.degree(j) == 1:
            lin = f.coeff(tuple(1 if k == j else 0 for k in range(ring.nvars)))
            only_linear = all(
                not ((key >> ring.offset(j)) & 1) or key == (1 << ring.offset(j)) for key in f.terms
            )
            if only_linear and lin == 1:
                pivot = j
                break
    if pivot is None:
        return None
    off = ring.offset(pivot)
    unit = 1 << off
    rest = f - ring.var(pivot)  # f = x + rest, root x = -rest
    deg = p.degree(pivot)
    if deg < 0:
        return ring.zero()
    # coefficients of p as a polynomial in x_pivot
    coeffs = [ring.zero() for _ in range(deg + 1)]
    from .kernels import FIELD

    for key, c in p.terms.items():
        e = (key >> off) & FIELD
        coeffs[e] = coeffs[e] + MPoly(ring, {key - e * unit: c})
    # synthetic division by (x - root) with root = -rest
    root = -rest
    quot = [None] * deg
    carry = coeffs[deg]
    for e in range(deg - 1, -1, -1):
        quot[e] = carry
        carry = coeffs[e] + carry * root
    if not carry.is_zero():
        return None
    out = ring.zero()
    x = ring.var(pivot)
    for e in range(deg - 1, -1, -1):
        out = out * x + quot[e]
    return out


def ratfn_eq(a: RatFn, b: RatFn) -> bool:
    """a == b iff a.num*b.den - b.num*a.den is the zero polynomial."""
    return (a - b).num.is_zero()
