"""Sparse multivariate polynomials with exact coefficients in Q(s_1..s_k).

The radicals s_j (s_j**2 = d_j) are folded into the exponent key as extra
slots holding 0 or 1, so every stored coefficient is a plain rational and a
product needs no nested scalar arithmetic.  ``MPoly.coeff`` reassembles the
``KScalar`` coefficient of an ordinary monomial on demand.
"""

from __future__ import annotations

from math import isqrt
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .kernels import BITS, FIELD, poly_mul, poly_shift
from .kscalar import KScalar
from .rational import ONE, Rat, ZERO, is_rat, rat, rat_str


class RingMismatch(ValueError):
    pass


class PolyRing:
    """Variable names plus the symmetrizers whose square roots are adjoined."""

    __slots__ = ("names", "roots", "nvars", "radmask", "radslots", "_index", "_hash")

    def __init__(self, names: Sequence[str], roots: Sequence[int] = ()):
        self.names = tuple(names)
        self.roots = tuple(int(d) for d in roots)
        self.nvars = len(self.names)
        if len(set(self.names)) != self.nvars:
            raise ValueError("duplicate variable names")
        slots = [(2 << ((self.nvars + k) * BITS), Rat(d)) for k, d in enumerate(self.roots)]
        self.radslots = tuple(slots)
        mask = 0
        for bit, _ in slots:
            mask |= bit
        self.radmask = mask
        self._index = {n: k for k, n in enumerate(self.names)}
        self._hash = hash((self.names, self.roots))

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names and self.roots == other.roots

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PolyRing({self.names}, roots={self.roots})"

    def index(self, name: str) -> int:
        return self._index[name]

    def offset(self, var: int | str) -> int:
        if isinstance(var, str):
            var = self._index[var]
        return var * BITS

    # constructors
    def zero(self) -> "MPoly":
        return MPoly(self, {})

    def one(self) -> "MPoly":
        return MPoly(self, {0: ONE})

    def const(self, value) -> "MPoly":
        if isinstance(value, KScalar):
            return self.from_kscalar(value)
        value = rat(value)
        return MPoly(self, {0: value} if value else {})

    def var(self, name: int | str) -> "MPoly":
        return MPoly(self, {1 << self.offset(name): ONE})

    def gens(self) -> Tuple["MPoly", ...]:
        return tuple(self.var(k) for k in range(self.nvars))

    def sqrt_d(self, j: int, power: int = 1) -> "MPoly":
        """d_j^(power/2) for radical slot ``j`` (0-based)."""
        half, odd = divmod(power, 2)
        d = self.roots[j]
        coeff = Rat(d) ** half
        if odd and isqrt(d) ** 2 == d:
            # perfect square: the radical is rational
            return MPoly(self, {0: coeff * isqrt(d)})
        key = (1 << ((self.nvars + j) * BITS)) if odd else 0
        return MPoly(self, {key: coeff})

    def from_kscalar(self, value: KScalar) -> "MPoly":
        if value.d != self.roots[: len(value.d)]:
            raise RingMismatch(f"scalar context {value.d} vs ring roots {self.roots}")
        terms = {}
        for mask, c in value.terms.items():
            key = 0
            j = 0
            while mask:
                if mask & 1:
                    key += 1 << ((self.nvars + j) * BITS)
                mask >>= 1
                j += 1
            terms[key] = c
        return MPoly(self, terms)

    def monomial(self, exps: Sequence[int], coeff=ONE) -> "MPoly":
        key = 0
        for k, e in enumerate(exps):
            if e < 0 or e > FIELD // 2:
                raise ValueError("exponent out of range")
            key += e << (k * BITS)
        return MPoly(self, {key: rat(coeff)} if coeff else {})

    def unpack(self, key: int) -> Tuple[Tuple[int, ...], int]:
        """Split a packed key into (ordinary exponents, radical mask)."""
        exps = tuple((key >> (k * BITS)) & FIELD for k in range(self.nvars))
        mask = 0
        for j in range(len(self.roots)):
            if (key >> ((self.nvars + j) * BITS)) & FIELD:
                mask |= 1 << j
        return exps, mask


class MPoly:
    __slots__ = ("ring", "terms", "_key")

    def __init__(self, ring: PolyRing, terms: Dict[int, Rat]):
        self.ring = ring
        self.terms = terms
        self._key = None

    # coercion
    def _lift(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if is_rat(other):
            return self.ring.const(other)
        if isinstance(other, KScalar):
            return self.ring.from_kscalar(other)
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        get = out.get
        for k, c in other.terms.items():
            v = get(k, ZERO) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return MPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rat(other):
            if not other:
                return MPoly(self.ring, {})
            other = Rat(other)
            return MPoly(self.ring, {k: c * other for k, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return MPoly(self.ring, {})
        ring = self.ring
        return MPoly(ring, poly_mul(self.terms, other.terms, ring.radmask, ring.radslots))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "MPoly":
        return self * c

    # predicates and accessors
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        """True when no ordinary variable occurs (radicals allowed)."""
        low = (1 << (self.ring.nvars * BITS)) - 1
        return all(not (k & low) for k in self.terms)

    def constant_term(self) -> Rat:
        return self.terms.get(0, ZERO)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def key(self) -> tuple:
        """Hashable canonical form (sorted term list)."""
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    def __hash__(self):
        return hash(self.key())

    def leading(self) -> Tuple[int, Rat]:
        """Term with the largest packed key (a fixed monomial order)."""
        k = max(self.terms)
        return k, self.terms[k]

    def monic(self) -> Tuple["MPoly", Rat]:
        """Return (p / lc, lc) where lc is the leading rational coefficient."""
        _, lc = self.leading()
        inv = ONE / lc
        return MPoly(self.ring, {k: c * inv for k, c in self.terms.items()}), lc

    def coeff(self, exps: Sequence[int]) -> KScalar:
        """KScalar coefficient of the ordinary monomial with exponents ``exps``."""
        ring = self.ring
        base = 0
        for k, e in enumerate(exps):
            base += e << (k * BITS)
        out = {}
        for key, c in self.terms.items():
            low = key & ((1 << (ring.nvars * BITS)) - 1)
            if low != base:
                continue
            _, mask = ring.unpack(key)
            out[mask] = c
        return KScalar(ring.roots, out)

    def items(self) -> Iterator[Tuple[Tuple[int, ...], KScalar]]:
        """Iterate (ordinary exponents, KScalar coefficient) in sorted order."""
        ring = self.ring
        grouped: Dict[Tuple[int, ...], Dict[int, Rat]] = {}
        for key in sorted(self.terms):
            exps, mask = ring.unpack(key)
            grouped.setdefault(exps, {})[mask] = self.terms[key]
        for exps in sorted(grouped):
            yield exps, KScalar(ring.roots, grouped[exps])

    def degree(self, var: int | str) -> int:
        off = self.ring.offset(var)
        return max(((k >> off) & FIELD for k in self.terms), default=-1)

    def total_degree(self) -> int:
        n = self.ring.nvars
        return max((sum((k >> (j * BITS)) & FIELD for j in range(n)) for k in self.terms), default=-1)

    def variables(self) -> set:
        used = set()
        for k in self.terms:
            for j in range(self.ring.nvars):
                if (k >> (j * BITS)) & FIELD:
                    used.add(j)
        return used

    # substitutions
    def shift(self, amounts: Mapping[int, object]) -> "MPoly":
        """Substitute x_j -> x_j + amounts[j] (rational amounts)."""
        shifts = tuple((j * BITS, rat(c)) for j, c in sorted(amounts.items()) if c)
        if not shifts or not self.terms:
            return self
        return MPoly(self.ring, poly_shift(self.terms, shifts))

    def evaluate(self, values: Mapping[int, object]) -> "MPoly":
        """Substitute x_j -> values[j] (rationals); other variables stay."""
        ring = self.ring
        vals = {j: rat(v) for j, v in values.items()}
        out: Dict[int, Rat] = {}
        for key, c in self.terms.items():
            for j, v in vals.items():
                e = (key >> (j * BITS)) & FIELD
                if e:
                    key -= e << (j * BITS)
                    c = c * v ** e
            out[key] = out.get(key, ZERO) + c
        return MPoly(ring, {k: c for k, c in out.items() if c})

    def value(self, values: Sequence[object]) -> KScalar:
        """Full evaluation at a rational point; radicals survive in the KScalar."""
        p = self.evaluate(dict(enumerate(values)))
        out = {}
        for key, c in p.terms.items():
            _, mask = self.ring.unpack(key)
            out[mask] = c
        return KScalar(self.ring.roots, out)

    def map_ring(self, target: PolyRing, var_map: Sequence[int], root_map: Sequence[int] | None = None) -> "MPoly":
        """Re-embed into ``target``: variable j goes to slot var_map[j]."""
        if root_map is None:
            root_map = list(range(len(self.ring.roots)))
        n_src = self.ring.nvars
        out: Dict[int, Rat] = {}
        for key, c in self.terms.items():
            new = 0
            for j in range(n_src):
                e = (key >> (j * BITS)) & FIELD
                if e:
                    new += e << (var_map[j] * BITS)
            for j in range(len(self.ring.roots)):
                if (key >> ((n_src + j) * BITS)) & FIELD:
                    new += 1 << ((target.nvars + root_map[j]) * BITS)
            out[new] = out.get(new, ZERO) + c
        return MPoly(target, {k: c for k, c in out.items() if c})

    def __repr__(self):
        return f"MPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        names = list(ring.names) + [f"s{j + 1}" for j in range(len(ring.roots))]
        parts = []
        for key in sorted(self.terms, reverse=True):
            c = self.terms[key]
            factors = []
            for j, name in enumerate(names):
                e = (key >> (j * BITS)) & FIELD
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                parts.append(rat_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{rat_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_ring(names: Iterable[str], roots: Iterable[int] = ()) -> PolyRing:
    return PolyRing(tuple(names), tuple(roots))
