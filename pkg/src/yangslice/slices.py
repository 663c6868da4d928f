"""Loop-group points of the spaces W_mu at finite series precision.

Matrices have entries in C((t^-1)), stored as windowed series in x = t^-1.
Gauss factors are taken in the order U T U_-, so the pivots come from the
bottom-right corner.  Coweights are recorded as exponent tuples of the
diagonal torus of GL_n: t^mu = diag(t^mu_1, ..., t^mu_n).  For SL_n they sum
to zero; the PGL_2 model carries det = t^lambda and mu = (lambda - m, m).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

from .kscalar import KScalar
from .rational import ONE, ZERO, is_rat
from .series import NotInvertibleError, TruncSeries

DEFAULT_WINDOW = 30


class LocusError(ValueError):
    """The element is outside the big cell, or its torus part has the wrong shape."""


def _zero(hi: int) -> TruncSeries:
    return TruncSeries({}, hi + 1, hi)


def _const(c, hi: int) -> TruncSeries:
    return TruncSeries({0: c}, 0, hi) if c else _zero(hi)


def sqrt_d(d: int, power: int = 1):
    """d^(power/2), rational when it can be."""
    k = KScalar.sqrt_d((d,), 0, power)
    return k.to_rat() if k.is_rational() else k


class LoopMat:
    """Square matrix of series in x = t^-1."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[TruncSeries]]):
        self.rows = [list(r) for r in rows]
        if any(len(r) != len(self.rows) for r in self.rows):
            raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int, hi: int = DEFAULT_WINDOW) -> "LoopMat":
        return cls([[_const(ONE if i == j else ZERO, hi) for j in range(n)] for i in range(n)])

    @classmethod
    def t_power(cls, exps: Sequence[int], hi: int = DEFAULT_WINDOW) -> "LoopMat":
        """diag(t^e_1, ..., t^e_n)."""
        n = len(exps)
        return cls([[TruncSeries.monomial(ONE, -exps[i], hi) if i == j else _zero(hi) for j in range(n)] for i in range(n)])

    @classmethod
    def from_lpolys(cls, rows, hi: int = DEFAULT_WINDOW) -> "LoopMat":
        return cls([[p.to_series(hi) for p in r] for r in rows])

    @classmethod
    def root_element(cls, n: int, i: int, j: int, value, hi: int = DEFAULT_WINDOW) -> "LoopMat":
        """1 + value * E_ij, with ``value`` a scalar or a series."""
        out = cls.identity(n, hi)
        out.rows[i][j] = value if isinstance(value, TruncSeries) else _const(value, hi)
        return out

    def __getitem__(self, ij: Tuple[int, int]) -> TruncSeries:
        return self.rows[ij[0]][ij[1]]

    def __mul__(self, other: "LoopMat") -> "LoopMat":
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = None
                for k in range(n):
                    a, b = self.rows[i][k], other.rows[k][j]
                    if not a.coeffs or not b.coeffs:
                        continue
                    p = a * b
                    acc = p if acc is None else acc + p
                if acc is None:
                    acc = _zero(min(min(r.hi for r in self.rows[i]), min(other.rows[k][j].hi for k in range(n))))
                row.append(acc)
            out.append(row)
        return LoopMat(out)

    def window(self) -> int:
        """Largest exponent of x known in every entry."""
        return min(e.hi for r in self.rows for e in r)

    def map(self, fn) -> "LoopMat":
        return LoopMat([[e.map(fn) for e in r] for r in self.rows])

    def agrees_with(self, other: "LoopMat") -> bool:
        return self.n == other.n and all(
            self.rows[i][j].agrees_with(other.rows[i][j]) for i in range(self.n) for j in range(self.n)
        )

    def det(self) -> TruncSeries:
        """Cofactor expansion; meant for n <= 3."""
        if self.n == 1:
            return self.rows[0][0]
        total = None
        for j in range(self.n):
            minor = LoopMat([r[:j] + r[j + 1:] for r in self.rows[1:]])
            term = self.rows[0][j] * minor.det()
            if j % 2:
                term = -term
            total = term if total is None else total + term
        return total

    def __repr__(self):
        return f"LoopMat({self.rows!r})"


def tau(n: int, i: int, block: Sequence[Sequence[TruncSeries]], hi: int) -> LoopMat:
    """Embed a 2x2 block on rows/columns i, i+1 of the n x n identity."""
    out = LoopMat.identity(n, hi)
    for a in range(2):
        for b in range(2):
            out.rows[i + a][i + b] = block[a][b]
    return out


# Gauss decomposition


def gauss_decompose(g: LoopMat, mu: Sequence[int] | None = None):
    """g = u * diag(h) * l with u unipotent upper, l unipotent lower.

    ``h`` holds the pivots (torus part including t^mu).  When ``mu`` is given
    the pivots must have the shape t^mu_k (1 + O(t^-1)).
    """
    n = g.n
    work = [list(r) for r in g.rows]
    hi = g.window()
    u = LoopMat.identity(n, hi)
    low = LoopMat.identity(n, hi)
    h: List[TruncSeries] = [None] * n
    for k in range(n - 1, -1, -1):
        p = work[k][k]
        try:
            p_inv = p.invert()
        except NotInvertibleError as exc:
            raise LocusError(f"zero pivot at position {k + 1}: not in the big cell") from exc
        h[k] = p
        for i in range(k):
            u.rows[i][k] = work[i][k] * p_inv
            low.rows[k][i] = p_inv * work[k][i]
        for i in range(k):
            for j in range(k):
                if work[i][k].coeffs and work[k][j].coeffs:
                    work[i][j] = work[i][j] - u.rows[i][k] * work[k][j]
    if mu is not None:
        check_torus_shape(h, mu)
    return u, h, low


def check_torus_shape(h: Sequence[TruncSeries], mu: Sequence[int]):
    for k, (p, e) in enumerate(zip(h, mu)):
        v = p.valuation()
        if v != -e or p.coefficient(v) != 1:
            lead = None if v is None else p.coefficient(v)
            raise LocusError(f"pivot {k + 1} is {lead} t^{None if v is None else -v}, expected t^{e}(1 + O(t^-1))")


def infer_mu(h: Sequence[TruncSeries]) -> Tuple[int, ...]:
    out = []
    for p in h:
        v = p.valuation()
        if v is None:
            raise LocusError("zero pivot")
        out.append(-v)
    return tuple(out)


def _split(s: TruncSeries) -> Tuple[TruncSeries, TruncSeries]:
    """(polynomial part in t, part in x C[[x]])."""
    poly = {k: c for k, c in s.coeffs.items() if k <= 0}
    tail = {k: c for k, c in s.coeffs.items() if k > 0}
    poly_s = TruncSeries(poly, min(min(poly, default=s.hi + 1), s.hi + 1), s.hi)
    return poly_s, TruncSeries(tail, min(1, s.hi + 1), s.hi)


def normalize_upper(u: LoopMat) -> LoopMat:
    """The U_1[[t^-1]] factor of u in U((t^-1)) = U[t] U_1[[t^-1]]."""
    n = u.n
    hi = u.window()
    q = LoopMat.identity(n, hi)
    out = LoopMat.identity(n, hi)
    for i in range(n):
        for j in range(i + 1, n):
            s = u.rows[i][j]
            for k in range(i + 1, j):
                if q.rows[i][k].coeffs and u.rows[k][j].coeffs:
                    s = s + q.rows[i][k] * u.rows[k][j]
            poly, tail = _split(s)
            q.rows[i][j] = -poly
            out.rows[i][j] = tail
    return out


def normalize_lower(low: LoopMat) -> LoopMat:
    """The U_{-,1}[[t^-1]] factor of l in U_-((t^-1)) = U_{-,1}[[t^-1]] U_-[t]."""
    n = low.n
    hi = low.window()
    q = LoopMat.identity(n, hi)
    out = LoopMat.identity(n, hi)
    for j in range(n):
        for i in range(j + 1, n):
            s = low.rows[i][j]
            for k in range(j + 1, i):
                if low.rows[i][k].coeffs and q.rows[k][j].coeffs:
                    s = s + low.rows[i][k] * q.rows[k][j]
            poly, tail = _split(s)
            q.rows[i][j] = -poly
            out.rows[i][j] = tail
    return out


def _diag(h: Sequence[TruncSeries]) -> LoopMat:
    n = len(h)
    hi = min(p.hi for p in h)
    return LoopMat([[h[i] if i == j else _zero(hi) for j in range(n)] for i in range(n)])


@dataclass
class SlicePoint:
    """A point of W_mu together with its Gauss factors."""

    g: LoopMat
    mu: Tuple[int, ...]
    u: LoopMat = field(repr=False)
    h: List[TruncSeries] = field(repr=False)
    low: LoopMat = field(repr=False)

    @property
    def n(self) -> int:
        return self.g.n

    def agrees_with(self, other: "SlicePoint") -> bool:
        return self.mu == other.mu and self.g.agrees_with(other.g)

    def window(self) -> int:
        return self.g.window()


def pi_project(g: LoopMat, mu: Sequence[int] | None = None) -> SlicePoint:
    """Normalize g = u h t^mu u_- into W_mu by left U[t] and right U_-[t] factors."""
    u, h, low = gauss_decompose(g)
    mu = infer_mu(h) if mu is None else tuple(mu)
    check_torus_shape(h, mu)
    u1, l1 = normalize_upper(u), normalize_lower(low)
    return SlicePoint(u1 * _diag(h) * l1, mu, u1, h, l1)


def slice_point(g: LoopMat, mu: Sequence[int]) -> SlicePoint:
    """Wrap an element already in W_mu, checking that it is."""
    u, h, low = gauss_decompose(g, mu)
    for i in range(g.n):
        for j in range(g.n):
            if i != j:
                e = u.rows[i][j] if i < j else low.rows[i][j]
                if e.coeffs and min(e.coeffs) < 1:
                    raise LocusError(f"Gauss factor entry ({i + 1},{j + 1}) has a polynomial part")
    return SlicePoint(g, tuple(mu), u, h, low)


def identity_point(mu: Sequence[int], hi: int = DEFAULT_WINDOW) -> SlicePoint:
    return slice_point(LoopMat.t_power(mu, hi), mu)


def _add(a: Sequence[int], b: Sequence[int], sign: int = 1) -> Tuple[int, ...]:
    return tuple(x + sign * y for x, y in zip(a, b))


def multiply_slices(p1: SlicePoint, p2: SlicePoint) -> SlicePoint:
    return pi_project(p1.g * p2.g, _add(p1.mu, p2.mu))


def is_antidominant_exps(nu: Sequence[int]) -> bool:
    return all(nu[j] <= nu[j + 1] for j in range(len(nu) - 1))


def shift_point(p: SlicePoint, nu1: Sequence[int], nu2: Sequence[int]) -> SlicePoint:
    """pi(t^-nu1 g t^-nu2), landing in W_{mu - nu1 - nu2}."""
    for nu in (nu1, nu2):
        if not is_antidominant_exps(nu):
            raise ValueError(f"shift {tuple(nu)} is not antidominant")
    hi = p.window()
    g = LoopMat.t_power([-x for x in nu1], hi) * p.g * LoopMat.t_power([-x for x in nu2], hi)
    return pi_project(g, _add(_add(p.mu, nu1, -1), nu2, -1))


# The point r_i(b, c) and the Ga action


def simple_coroot_exps(n: int, i: int) -> Tuple[int, ...]:
    return tuple(1 if k == i else -1 if k == i + 1 else 0 for k in range(n))


@dataclass(frozen=True)
class W0AlphaPoint:
    """r_i(b, c) in the slice of weight zero at -alpha_i^vee; b must be nonzero."""

    i: int
    b: object
    c: object

    def __post_init__(self):
        if not self.b:
            raise ValueError("b must be nonzero")

    def _block(self, hi: int, inverse: bool = False):
        b, c = self.b, self.c
        b_inv = ONE / b if is_rat(b) else b.inverse()
        if inverse:
            # [[t - c, -b], [b^-1, 0]]
            return [[TruncSeries({-1: ONE, 0: -c}, -1, hi), _const(-b, hi)], [_const(b_inv, hi), _zero(hi)]]
        return [[_zero(hi), _const(b, hi)], [_const(-b_inv, hi), TruncSeries({-1: ONE, 0: -c}, -1, hi)]]

    def matrix(self, n: int = 2, hi: int = DEFAULT_WINDOW) -> LoopMat:
        return tau(n, self.i, self._block(hi), hi)

    def inverse_matrix(self, n: int = 2, hi: int = DEFAULT_WINDOW) -> LoopMat:
        return tau(n, self.i, self._block(hi, inverse=True), hi)

    def point(self, n: int = 2, hi: int = DEFAULT_WINDOW) -> SlicePoint:
        return slice_point(self.matrix(n, hi), tuple(-x for x in simple_coroot_exps(n, self.i)))


def r_point(i: int, b, c, n: int = 2, hi: int = DEFAULT_WINDOW) -> SlicePoint:
    return W0AlphaPoint(i, b, c).point(n, hi)


def psi_coeffs(p: SlicePoint, i: int, k: int):
    """Coefficient of t^-k in the (i, i+1) entry of the U factor."""
    if k < 1:
        raise ValueError("psi coefficients start at k = 1")
    return p.u.rows[i][i + 1].coefficient(k)


def moment_map(p: SlicePoint, i: int, d: int = 1):
    """Phi_i = d_i^(-1/2) psi_i^(1)."""
    return sqrt_d(d, -1) * psi_coeffs(p, i, 1)


def ga_action(a, p: SlicePoint, i: int, d: int = 1) -> SlicePoint:
    """a . g = pi(x_{-i}(-d_i^(1/2) a) g)."""
    s = -(sqrt_d(d) * a)
    x = LoopMat.root_element(p.n, i + 1, i, s, p.window())
    return pi_project(x * p.g, p.mu)


def xi(p: SlicePoint, i: int) -> W0AlphaPoint:
    """r_i(psi^(1), psi^(2)/psi^(1)); requires Phi_i(g) != 0."""
    p1 = psi_coeffs(p, i, 1)
    if not p1:
        raise LocusError("moment map vanishes: outside the locus Phi_i != 0")
    return W0AlphaPoint(i, p1, psi_coeffs(p, i, 2) / p1)


def inverse_map(p: SlicePoint, i: int) -> Tuple[W0AlphaPoint, SlicePoint]:
    """f(g) = (xi(g), pi(xi(g)^-1 g))."""
    w = xi(p, i)
    rest = w.inverse_matrix(p.n, p.window()) * p.g
    return w, pi_project(rest, _add(p.mu, simple_coroot_exps(p.n, i)))


def chart_coordinates(p: SlicePoint, i: int) -> Tuple[object, object]:
    """(b, c) of a point of the form r_i(b, c): b is the (i, i+1) entry, t - c the (i+1, i+1) entry."""
    return p.g.rows[i][i + 1].coefficient(0), -p.g.rows[i + 1][i + 1].coefficient(0)
