"""Scalars in Q(s_1, ..., s_n) with s_i**2 = d_i.

A ``KScalar`` stores a map from square-free monomials in the s_i to rational
coefficients.  Monomials are bitmasks: bit ``k`` set means s_{k+1} divides
the monomial.  ``s_i`` stands for the positive square root of the symmetrizer
``d_i``, which is how the factors d_i^(1/2) and d_i^(-1/2) stay exact.
"""

from __future__ import annotations

from math import isqrt
from typing import Dict, Iterable, Tuple

from .rational import Rat, ONE, ZERO, is_rat, rat, rat_str


class ContextError(ValueError):
    """Two scalars were built over different symmetrizer tuples."""


class NotInvertibleError(ZeroDivisionError):
    pass


def _mask_product(d: Tuple[int, ...], m1: int, m2: int) -> Tuple[int, int]:
    """Return (mask, rational factor) for the product of two monomials."""
    common = m1 & m2
    factor = 1
    k = 0
    while common:
        if common & 1:
            factor *= d[k]
        common >>= 1
        k += 1
    return m1 ^ m2, factor


class KScalar:
    __slots__ = ("d", "terms")

    def __init__(self, d: Iterable[int], terms: Dict[int, Rat] | None = None):
        self.d = tuple(int(x) for x in d)
        # no stored zeros
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    # construction helpers
    @classmethod
    def const(cls, d, value) -> "KScalar":
        return cls(d, {0: rat(value)})

    @classmethod
    def sqrt_d(cls, d, i: int, power: int = 1) -> "KScalar":
        """d_i^(power/2) for a 0-based node index ``i`` and integer ``power``."""
        d = tuple(d)
        half, odd = divmod(power, 2)
        coeff = Rat(d[i]) ** half
        if odd and isqrt(d[i]) ** 2 == d[i]:
            return cls(d, {0: coeff * isqrt(d[i])})
        return cls(d, {(1 << i) if odd else 0: coeff})

    def _coerce(self, other) -> "KScalar":
        if isinstance(other, KScalar):
            if other.d != self.d:
                raise ContextError(f"symmetrizers {self.d} vs {other.d}")
            return other
        if is_rat(other):
            return KScalar(self.d, {0: Rat(other)})
        return NotImplemented

    # ring operations
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, ZERO) + c
        return KScalar(self.d, out)

    __radd__ = __add__

    def __neg__(self):
        return KScalar(self.d, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[int, Rat] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m, f = _mask_product(self.d, m1, m2)
                out[m] = out.get(m, ZERO) + c1 * c2 * f
        return KScalar(self.d, out)

    __rmul__ = __mul__

    def conjugate(self, k: int) -> "KScalar":
        """Apply s_{k+1} -> -s_{k+1}."""
        bit = 1 << k
        return KScalar(self.d, {m: (-c if m & bit else c) for m, c in self.terms.items()})

    def inverse(self) -> "KScalar":
        if not self.terms:
            raise NotInvertibleError("zero has no inverse")
        # multiply by Galois conjugates until the value is rational
        numer = KScalar(self.d, {0: ONE})
        value = self
        for k in range(len(self.d)):
            if any(m >> k & 1 for m in value.terms):
                conj = value.conjugate(k)
                numer = numer * conj
                value = value * conj
        norm = value.to_rat()
        if norm == 0:
            raise NotInvertibleError("zero divisor")
        return numer * (ONE / norm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = KScalar(self.d, {0: ONE})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # predicates
    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return all(m == 0 for m in self.terms)

    def to_rat(self) -> Rat:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.terms.get(0, ZERO)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash((self.d, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"KScalar({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            syms = "*".join(f"s{k + 1}" for k in range(len(self.d)) if m >> k & 1)
            if not syms:
                parts.append(rat_str(c))
            elif c == 1:
                parts.append(syms)
            else:
                parts.append(f"{rat_str(c)}*{syms}")
        return " + ".join(parts)


def kscalar_mul(a: KScalar, b: KScalar) -> KScalar:
    return a * b
