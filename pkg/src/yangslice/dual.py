"""Dual numbers a + eps*b with eps**2 = 0, for exact directional derivatives."""

from __future__ import annotations

from typing import Sequence

from .poly import MPoly
from .kernels import BITS, FIELD
from .rational import ONE, ZERO, is_rat


class DualScalar:
    """Value plus infinitesimal part over any commutative coefficient ring."""

    __slots__ = ("value", "infinitesimal")

    def __init__(self, value, infinitesimal=ZERO):
        self.value = value
        self.infinitesimal = infinitesimal

    def _lift(self, other):
        return other if isinstance(other, DualScalar) else DualScalar(other, ZERO)

    def __add__(self, other):
        other = self._lift(other)
        return DualScalar(self.value + other.value, self.infinitesimal + other.infinitesimal)

    __radd__ = __add__

    def __neg__(self):
        return DualScalar(-self.value, -self.infinitesimal)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        # eps^2 term dropped
        return DualScalar(
            self.value * other.value,
            self.value * other.infinitesimal + self.infinitesimal * other.value,
        )

    __rmul__ = __mul__

    def inverse(self) -> "DualScalar":
        """(a + eps b)^-1 = a^-1 - eps b a^-2; the value must be a unit."""
        v = self.value
        inv = ONE / v if is_rat(v) else v.inverse()
        return DualScalar(inv, -(self.infinitesimal * inv * inv))

    def __bool__(self):
        return bool(self.value) or bool(self.infinitesimal)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = DualScalar(1, ZERO)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._lift(other)
        return not (self.value - other.value) and not (self.infinitesimal - other.infinitesimal)

    __hash__ = None

    def __repr__(self):
        return f"DualScalar({self.value} + eps*({self.infinitesimal}))"


def dual_apply(f: MPoly, point: Sequence[DualScalar]) -> DualScalar:
    """Evaluate the polynomial ``f`` at a point whose coordinates are dual numbers.

    ``point[j]`` replaces variable ``j`` of ``f``'s ring; radical slots are kept
    as constants of that ring.
    """
    ring = f.ring
    n = ring.nvars
    if len(point) != n:
        raise ValueError(f"expected {n} coordinates, got {len(point)}")
    ordinary_bits = (1 << (n * BITS)) - 1
    total = DualScalar(ring.zero(), ring.zero())
    for key, c in f.terms.items():
        term = DualScalar(MPoly(ring, {key & ~ordinary_bits: c}), ring.zero())
        for j in range(n):
            e = (key >> (j * BITS)) & FIELD
            if e:
                term = term * point[j] ** e
        total = total + term
    return total
