"""Truncated Laurent series with an explicit validity window.

A series in a variable ``x`` stores coefficients for exponents in
``[lo, hi]``: every exponent below ``lo`` is known to be zero and nothing is
known above ``hi``.  Arithmetic narrows the window instead of silently
dropping precision:

* sum:       [min(lo1, lo2), min(hi1, hi2)]
* product:   [lo1 + lo2, min(lo1 + hi2, lo2 + hi1)]
* inverse:   [-v, hi - 2v] where v is the valuation

Loop-group entries are series in ``x = t^-1`` so a polynomial in ``t`` has a
negative ``lo``.
"""

from __future__ import annotations

from typing import Callable, Dict, Mapping

from .kscalar import KScalar
from .poly import MPoly
from .ratfn import RatFn
from .rational import ONE, Rat, ZERO, is_rat


class PrecisionError(ValueError):
    """A coefficient above the validity window was requested."""


class NotInvertibleError(ZeroDivisionError):
    pass


def unit_inverse(c):
    """Inverse of a coefficient, or NotInvertibleError when it is not a unit."""
    if is_rat(c):
        if c == 0:
            raise NotInvertibleError("zero coefficient")
        return ONE / Rat(c)
    if isinstance(c, KScalar):
        return c.inverse()
    if isinstance(c, RatFn):
        if c.is_zero():
            raise NotInvertibleError("zero coefficient")
        return c.inverse()
    if isinstance(c, MPoly):
        if c.is_constant() and len(c.terms) == 1 and 0 in c.terms:
            return c.ring.const(ONE / c.terms[0])
        raise NotInvertibleError(f"polynomial {c} is not a unit")
    if hasattr(c, "inverse"):
        if not c:
            raise NotInvertibleError("zero coefficient")
        return c.inverse()
    raise NotInvertibleError(f"cannot invert {c!r}")


class TruncSeries:
    __slots__ = ("var", "lo", "hi", "coeffs")

    def __init__(self, coeffs: Mapping[int, object], lo: int, hi: int, var: str = "x"):
        if lo > hi + 1:
            raise ValueError(f"empty window [{lo}, {hi}]")
        self.var = var
        self.lo = lo
        self.hi = hi
        clean: Dict[int, object] = {}
        for k, c in coeffs.items():
            if not c:
                continue
            if k < lo:
                raise ValueError(f"coefficient at {k} below window [{lo}, {hi}]")
            if k <= hi:
                clean[k] = c
        self.coeffs = clean

    @classmethod
    def monomial(cls, coeff, exponent: int, hi: int, var: str = "x") -> "TruncSeries":
        return cls({exponent: coeff}, exponent, hi, var)

    def _check(self, other: "TruncSeries"):
        if self.var != other.var:
            raise ValueError(f"series in {self.var} vs {other.var}")

    def coefficient(self, k: int):
        if k > self.hi:
            raise PrecisionError(f"exponent {k} beyond window [{self.lo}, {self.hi}]")
        return self.coeffs.get(k, ZERO)

    def __getitem__(self, k: int):
        return self.coefficient(k)

    def valuation(self) -> int | None:
        return min(self.coeffs) if self.coeffs else None

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return self + TruncSeries({0: other}, min(self.lo, 0), self.hi, self.var)
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return TruncSeries(out, min(self.lo, other.lo), min(self.hi, other.hi), self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries({k: -c for k, c in self.coeffs.items()}, self.lo, self.hi, self.var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries({k: c * other for k, c in self.coeffs.items()}, self.lo, self.hi, self.var)
        self._check(other)
        lo = self.lo + other.lo
        hi = min(self.lo + other.hi, other.lo + self.hi)
        out: Dict[int, object] = {}
        for k1, c1 in self.coeffs.items():
            if k1 + other.lo > hi:
                continue
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                if k > hi:
                    continue
                p = c1 * c2
                out[k] = out[k] + p if k in out else p
        return TruncSeries(out, lo, hi, self.var)

    def __rmul__(self, other):
        return TruncSeries({k: other * c for k, c in self.coeffs.items()}, self.lo, self.hi, self.var)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by x^k."""
        return TruncSeries({e + k: c for e, c in self.coeffs.items()}, self.lo + k, self.hi + k, self.var)

    def truncate(self, hi: int) -> "TruncSeries":
        return TruncSeries(self.coeffs, self.lo, min(hi, self.hi), self.var)

    def map(self, fn: Callable) -> "TruncSeries":
        return TruncSeries({k: fn(c) for k, c in self.coeffs.items()}, self.lo, self.hi, self.var)

    def invert(self) -> "TruncSeries":
        v = self.valuation()
        if v is None:
            raise NotInvertibleError("zero series")
        lead_inv = unit_inverse(self.coeffs[v])
        prec = self.hi - v  # relative precision
        # g = x^-v * sum_{n} g_n x^n with sum_k f_{v+k} g_{n-k} = [n == 0]
        g = [lead_inv]
        for n in range(1, prec + 1):
            acc = None
            for k in range(1, n + 1):
                f = self.coeffs.get(v + k)
                if f is None or not f:
                    continue
                term = f * g[n - k]
                acc = term if acc is None else acc + term
            g.append(ZERO if acc is None else -(acc * lead_inv))
        return TruncSeries({n - v: c for n, c in enumerate(g)}, -v, self.hi - 2 * v, self.var)

    def agrees_with(self, other: "TruncSeries") -> bool:
        """Equality on the common validity window."""
        self._check(other)
        hi = min(self.hi, other.hi)
        keys = {k for k in self.coeffs if k <= hi} | {k for k in other.coeffs if k <= hi}
        return all(not (self.coeffs.get(k, ZERO) - other.coeffs.get(k, ZERO)) for k in keys)

    def is_one(self) -> bool:
        return self.agrees_with(TruncSeries({0: ONE}, 0, self.hi, self.var))

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi and self.agrees_with(other)

    __hash__ = None

    def __repr__(self):
        terms = " + ".join(f"({self.coeffs[k]})*{self.var}^{k}" for k in sorted(self.coeffs)) or "0"
        return f"TruncSeries({terms}; [{self.lo}, {self.hi}])"


def series_invert(f: TruncSeries) -> TruncSeries:
    return f.invert()
