"""Laurent polynomials in t with exact coefficients.

Used for the explicit rank-one slice model, where every matrix entry is a
polynomial in t, and for converting between that model and windowed series
in x = t^-1.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Tuple

from .rational import ONE, ZERO, Rat, is_rat, rat, rat_str
from .series import PrecisionError, TruncSeries


class LPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        self.terms: Dict[int, object] = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[object]) -> "LPoly":
        """Ascending coefficients: ``[c0, c1, ...]`` is c0 + c1 t + ..."""
        return cls({k: rat(c) if is_rat(c) or isinstance(c, str) else c for k, c in enumerate(coeffs)})

    @classmethod
    def t(cls, k: int = 1, coeff=ONE) -> "LPoly":
        return cls({k: coeff})

    @classmethod
    def const(cls, c) -> "LPoly":
        return cls({0: c})

    # arithmetic
    def __add__(self, other):
        other = other if isinstance(other, LPoly) else LPoly.const(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return LPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LPoly):
            return LPoly({k: c * other for k, c in self.terms.items()})
        out: Dict[int, object] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                p = c1 * c2
                out[k] = out[k] + p if k in out else p
        return LPoly(out)

    def __rmul__(self, other):
        return LPoly({k: other * c for k, c in self.terms.items()})

    def __pow__(self, n: int):
        out = LPoly.const(ONE)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = other if isinstance(other, LPoly) else LPoly.const(other)
        keys = set(self.terms) | set(other.terms)
        return all(not (self.coeff(k) - other.coeff(k)) for k in keys)

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    # inspection
    def coeff(self, k: int):
        return self.terms.get(k, ZERO)

    def degree(self) -> int:
        """Largest exponent; -1 for the zero polynomial (so deg 0 < m holds only for m >= 1)."""
        return max(self.terms) if self.terms else -1

    def low(self) -> int | None:
        return min(self.terms) if self.terms else None

    def is_polynomial(self) -> bool:
        return all(k >= 0 for k in self.terms)

    def leading(self):
        return self.terms[self.degree()] if self.terms else ZERO

    def is_monic(self) -> bool:
        return bool(self.terms) and self.leading() == 1

    def evaluate(self, x):
        out = ZERO
        for k, c in self.terms.items():
            out = out + c * x ** k
        return out

    def divmod(self, other: "LPoly") -> Tuple["LPoly", "LPoly"]:
        """Polynomial long division; both operands must be polynomials."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not (self.is_polynomial() and other.is_polynomial()):
            raise ValueError("divmod needs polynomials")
        q: Dict[int, object] = {}
        r = LPoly(self.terms)
        dd, lead = other.degree(), other.leading()
        lead_inv = ONE / lead if is_rat(lead) else lead.inverse()
        while r and r.degree() >= dd:
            k = r.degree() - dd
            c = r.leading() * lead_inv
            q[k] = c
            r = r - other * LPoly.t(k, c)
        return LPoly(q), r

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "LPoly") -> "LPoly":
        q, r = self.divmod(other)
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    # series conversion
    def to_series(self, hi: int) -> TruncSeries:
        """As a series in x = t^-1, exact up to x^hi."""
        coeffs = {-k: c for k, c in self.terms.items()}
        lo = min(coeffs) if coeffs else hi + 1
        return TruncSeries(coeffs, min(lo, hi + 1), hi)

    @classmethod
    def from_series(cls, s: TruncSeries, min_check: int = 1) -> "LPoly":
        """Read a polynomial-plus-principal-part back from a series.

        Requires at least ``min_check`` coefficients past x^0 inside the window
        so that a truncated tail is detected rather than silently dropped."""
        if s.hi < min_check:
            raise PrecisionError(f"window ends at x^{s.hi}; need x^{min_check}")
        return cls({-k: c for k, c in s.coeffs.items()})

    def to_strings(self) -> List[str]:
        """Ascending coefficient list of "p/q" strings (polynomials only)."""
        if not self.is_polynomial():
            raise ValueError("negative powers present")
        return [rat_str(self.coeff(k)) for k in range(self.degree() + 1)]

    def __repr__(self):
        return f"LPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            cs = rat_str(c) if is_rat(c) else f"({c})"
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)


def lagrange(points: List[Tuple[Rat, Rat]]) -> LPoly:
    """Unique polynomial of degree < len(points) through the given nodes."""
    out = LPoly()
    for j, (xj, yj) in enumerate(points):
        term = LPoly.const(yj)
        for k, (xk, _) in enumerate(points):
            if k != j:
                term = term * (LPoly({1: ONE, 0: -xk}) * (ONE / (xj - xk)))
        out = out + term
    return out
