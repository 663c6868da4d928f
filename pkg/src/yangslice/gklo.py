"""Difference operators and the GKLO representation of shifted Yangians.

An ``OpSpace`` lays out the variables w_{f,i,r} of one or more tensor
factors ``f``.  A ``DiffOp`` is a sum of (rational function in the w's) x
(monomial in the shift operators u_{f,i,r}), always normal ordered with the
shifts on the right.  Moving a shift monomial with exponents k past a
coefficient substitutes w_v -> w_v + k_v d_v.

Placing several factors in one space realises the tensor product of their
operator algebras: factors act on disjoint variables and commute.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .cartan import CartanDatum, Coweight, coroot_decomposition, coweight
from .kscalar import KScalar
from .poly import MPoly, PolyRing
from .ratfn import RatFn
from .rational import ONE, Rat, ZERO, is_rat, rat, rat_str
from .series import TruncSeries
from .yangian import (
    GenSym,
    NCElem,
    YangianCtx,
    a_series,
    relation_defect,
    relation_instances,
)


class OpSpace:
    """Variables for a list of factors; factor f has m_i variables at node i."""

    def __init__(self, dat: CartanDatum, ms: Sequence[Sequence[int]], labels: Sequence[str] | None = None):
        self.dat = dat
        self.ms = [tuple(m) for m in ms]
        self.labels = list(labels) if labels else [str(f) for f in range(len(self.ms))]
        self.slots: List[Tuple[int, int, int]] = []  # (factor, node, r) with r 1-based
        names = []
        for f, m in enumerate(self.ms):
            for i, mi in enumerate(m):
                for r in range(1, mi + 1):
                    self.slots.append((f, i, r))
                    prefix = f"{self.labels[f]}_" if len(self.ms) > 1 else ""
                    names.append(f"w{prefix}{i + 1}_{r}")
        self.slot_index = {s: k for k, s in enumerate(self.slots)}
        self.ring = PolyRing(names, dat.d)
        self.nvars = len(self.slots)
        self.slot_d = [Rat(dat.d[i]) for (_, i, _) in self.slots]
        self.zero_shift = (0,) * self.nvars

    def slot(self, factor: int, node: int, r: int) -> int:
        return self.slot_index[(factor, node, r)]

    def w(self, factor: int, node: int, r: int) -> MPoly:
        return self.ring.var(self.slot(factor, node, r))

    def shift_amounts(self, k: Sequence[int]) -> Dict[int, Rat]:
        return {v: e * self.slot_d[v] for v, e in enumerate(k) if e}

    def sqrt_d(self, i: int, power: int) -> MPoly:
        return self.ring.sqrt_d(i, power)


class DiffOp:
    __slots__ = ("space", "terms")

    def __init__(self, space: OpSpace, terms: Dict[Tuple[int, ...], RatFn] | None = None):
        self.space = space
        self.terms = {k: c for k, c in (terms or {}).items() if not c.num.is_zero()}

    @classmethod
    def scalar(cls, space: OpSpace, c) -> "DiffOp":
        return cls(space, {space.zero_shift: _coeff(space, c)})

    @classmethod
    def shift(cls, space: OpSpace, slot: int, exponent: int, coeff=ONE) -> "DiffOp":
        k = [0] * space.nvars
        k[slot] = exponent
        return cls(space, {tuple(k): _coeff(space, coeff)})

    def _lift(self, other) -> "DiffOp":
        if isinstance(other, DiffOp):
            if other.space is not self.space:
                raise ValueError("operators live in different spaces")
            return other
        return DiffOp.scalar(self.space, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return DiffOp(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return DiffOp(self.space, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if is_rat(other):
            return DiffOp(self.space, {k: c * other for k, c in self.terms.items()})
        other = self._lift(other)
        return diffop_mul(self, other)

    def __rmul__(self, other):
        return self._lift(other) * self

    def __pow__(self, n: int):
        out = DiffOp.scalar(self.space, ONE)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (self - self._lift(other)).is_zero()

    __hash__ = None

    def coefficient(self, k: Sequence[int] | None = None) -> RatFn:
        k = tuple(k) if k is not None else self.space.zero_shift
        return self.terms.get(k, RatFn(self.space.ring.zero()))

    def is_coefficient_only(self) -> bool:
        return all(k == self.space.zero_shift for k in self.terms)

    def reduce(self) -> "DiffOp":
        return DiffOp(self.space, {k: c.reduce() for k, c in self.terms.items()})

    def grades(self, factor: int | None = None) -> set:
        """Root-lattice grades of the terms (u^-1 carries +alpha_i)."""
        rank = self.space.dat.rank
        out = set()
        for k in self.terms:
            g = [0] * rank
            for v, e in enumerate(k):
                f, i, _ = self.space.slots[v]
                if factor is None or f == factor:
                    g[i] -= e
            out.add(tuple(g))
        return out

    def grade(self, factor: int | None = None):
        gs = self.grades(factor)
        if not gs:
            return None
        return gs.pop() if len(gs) == 1 else "mixed"

    def __repr__(self):
        return f"DiffOp({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        names = self.space.ring.names
        for k in sorted(self.terms):
            mono = "*".join(
                f"u[{names[v][1:]}]" + (f"^{e}" if e != 1 else "") for v, e in enumerate(k) if e
            )
            c = self.terms[k]
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def _coeff(space: OpSpace, c) -> RatFn:
    if isinstance(c, RatFn):
        return c
    if isinstance(c, MPoly):
        return RatFn(c)
    return RatFn(space.ring.const(c))


def diffop_mul(a: DiffOp, b: DiffOp) -> DiffOp:
    """Normal-ordered product: f u^k . g u^l = f sigma_k(g) u^(k+l)."""
    space = a.space
    out: Dict[Tuple[int, ...], RatFn] = {}
    shifted_cache: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], RatFn] = {}
    for k1, c1 in a.terms.items():
        amounts = space.shift_amounts(k1)
        for k2, c2 in b.terms.items():
            g = c2.shift(amounts) if amounts else c2
            prod = c1 * g
            k = tuple(x + y for x, y in zip(k1, k2))
            out[k] = out[k] + prod if k in out else prod
    return DiffOp(space, out)


def commutator(a: DiffOp, b: DiffOp) -> DiffOp:
    return a * b - b * a


# GKLO data and representation


@dataclass(frozen=True)
class GKLOData:
    dat: CartanDatum
    lam: Coweight
    mu: Coweight
    R: Tuple[Tuple[Rat, ...], ...]
    orientation: frozenset = None
    m: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "lam", coweight(self.lam))
        object.__setattr__(self, "mu", coweight(self.mu))
        object.__setattr__(self, "R", tuple(tuple(rat(c) for c in Ri) for Ri in self.R))
        if len(self.R) != self.dat.rank:
            raise ValueError("R needs one multiset per node")
        for i, Ri in enumerate(self.R):
            if len(Ri) != self.lam.pairing(i):
                raise ValueError(f"|R_{i + 1}| = {len(Ri)} but lambda_{i + 1} = {self.lam.pairing(i)}")
        if any(x < 0 for x in self.lam):
            raise ValueError("lambda must be dominant")
        object.__setattr__(self, "m", coroot_decomposition(self.dat, self.lam, self.mu))
        if self.orientation is None:
            object.__setattr__(self, "orientation", default_orientation(self.dat))

    def arrows_into(self, i: int) -> List[int]:
        return [j for (j, k) in sorted(self.orientation) if k == i]

    def arrows_out_of(self, i: int) -> List[int]:
        return [k for (j, k) in sorted(self.orientation) if j == i]

    def flipped(self) -> "GKLOData":
        return GKLOData(self.dat, self.lam, self.mu, self.R, frozenset((j, i) for (i, j) in self.orientation))

    def describe(self) -> str:
        R = "{" + "; ".join(",".join(rat_str(c) for c in Ri) for Ri in self.R) + "}"
        return f"{self.dat.name} lambda={self.lam.coords} mu={self.mu.coords} R={R}"


def default_orientation(dat: CartanDatum) -> frozenset:
    """i -> j for i < j along every Dynkin edge."""
    return frozenset((i, j) for i in dat.nodes for j in dat.nodes if i < j and dat.a[i][j] != 0)


def gklo_data(dat: CartanDatum, lam, mu, R=None, orientation=None) -> GKLOData:
    lam = coweight(lam)
    if R is None:
        R = tuple((ZERO,) * lam.pairing(i) for i in dat.nodes)
    return GKLOData(dat, lam, mu, R, orientation)


class GKLORep:
    """The homomorphism Phi^lambda_mu(R) into a chosen factor of an OpSpace."""

    def __init__(self, data: GKLOData, space: OpSpace | None = None, factor: int = 0, corrupt_e_sign: bool = False):
        self.data = data
        self.dat = data.dat
        if space is None:
            space = OpSpace(data.dat, [data.m])
        if tuple(space.ms[factor]) != tuple(data.m):
            raise ValueError("space layout does not match the coroot decomposition")
        self.space = space
        self.factor = factor
        # regression fixture: a deliberately wrong sign in every E image
        self.e_sign = -1 if corrupt_e_sign else 1
        self._gen_cache: Dict[GenSym, DiffOp] = {}
        self._word_cache: Dict[Tuple[GenSym, ...], DiffOp] = {}
        self._hseries: Dict[int, TruncSeries] = {}

    # building blocks
    def w(self, i: int, r: int) -> MPoly:
        return self.space.w(self.factor, i, r)

    def W_at(self, j: int, arg: MPoly, skip: int | None = None) -> MPoly:
        """W_j(arg) (or W_{j,skip}(arg)) as a polynomial in the w's."""
        out = self.space.ring.one()
        for s in range(1, self.data.m[j] + 1):
            if s != skip:
                out = out * (arg - self.w(j, s))
        return out

    def W_factors(self, i: int, r: int) -> List[MPoly]:
        """Linear factors w_{i,r} - w_{i,s}, s != r, of W_{i,r}(w_{i,r})."""
        w = self.w(i, r)
        return [w - self.w(i, s) for s in range(1, self.data.m[i] + 1) if s != r]

    def p_at(self, i: int, arg: MPoly) -> MPoly:
        out = self.space.ring.one()
        for c in self.data.R[i]:
            out = out * (arg - c)
        return out

    def _zero(self) -> DiffOp:
        return DiffOp(self.space)

    def scalar(self, c) -> DiffOp:
        return DiffOp.scalar(self.space, c)

    def e_image(self, i: int, q: int) -> DiffOp:
        dat, data = self.dat, self.data
        out = {}
        for r in range(1, data.m[i] + 1):
            w = self.w(i, r)
            num = w ** (q - 1) * self.p_at(i, w)
            for j in data.arrows_into(i):
                for s in range(1, -dat.a[j][i] + 1):
                    shift = Rat(dat.d[i] * dat.a[i][j], 2) + s * dat.d[j]
                    num = num * self.W_at(j, w - shift)
            num = num * self.space.sqrt_d(i, -1) * (-self.e_sign)
            coeff = RatFn.from_factors(num, self.W_factors(i, r))
            k = [0] * self.space.nvars
            k[self.space.slot(self.factor, i, r)] = -1
            out[tuple(k)] = coeff
        return DiffOp(self.space, out)

    def f_image(self, i: int, q: int) -> DiffOp:
        dat, data = self.dat, self.data
        out = {}
        d_i = dat.d[i]
        for r in range(1, data.m[i] + 1):
            w = self.w(i, r)
            num = (w + d_i) ** (q - 1)
            for j in data.arrows_out_of(i):
                for s in range(1, -dat.a[j][i] + 1):
                    shift = Rat(dat.d[i] * dat.a[i][j], 2) - d_i + s * dat.d[j]
                    num = num * self.W_at(j, w - shift)
            num = num * self.space.sqrt_d(i, -1)
            coeff = RatFn.from_factors(num, self.W_factors(i, r))
            k = [0] * self.space.nvars
            k[self.space.slot(self.factor, i, r)] = 1
            out[tuple(k)] = coeff
        return DiffOp(self.space, out)

    def h_series(self, i: int, order: int) -> TruncSeries:
        """u^(-<mu, alpha_i>) Phi(H_i(u)) as a series in x = 1/u with polynomial coefficients."""
        cached = self._hseries.get(i)
        if cached is not None and cached.hi >= order:
            return cached
        dat, data, ring = self.dat, self.data, self.space.ring
        one = ring.one()

        def lin(a) -> TruncSeries:  # 1 - a x
            return TruncSeries({0: one, 1: -a}, 0, order)

        ser = TruncSeries({0: one}, 0, order)
        for c in data.R[i]:
            ser = ser * lin(ring.const(c))
        for j in dat.nodes:
            if j == i:
                continue
            for s in range(1, -dat.a[j][i] + 1):
                shift = Rat(dat.d[i] * dat.a[i][j], 2) + s * dat.d[j]
                for t in range(1, data.m[j] + 1):
                    ser = ser * lin(self.w(j, t) + shift)
        for t in range(1, data.m[i] + 1):
            w = self.w(i, t)
            ser = ser * lin(w).invert() * lin(w + dat.d[i]).invert()
        self._hseries[i] = ser
        return ser

    def h_image_series(self, i: int, p: int) -> DiffOp:
        base = -self.data.mu.pairing(i)
        if p < base:
            return self._zero()
        return DiffOp.scalar(self.space, self.h_series(i, p - base)[p - base])

    def h_image(self, i: int, p: int) -> DiffOp:
        """H_i^(p): 0 below the base, 1 at the base, [E^(1), F^(p)] when p >= 1,
        and the series formula for the remaining superscripts of dominant shifts."""
        base = -self.data.mu.pairing(i)
        if p < base:
            return self._zero()
        if p == base:
            return self.scalar(ONE)
        if p >= 1:
            return commutator(self.gen(GenSym("E", i, 1)), self.gen(GenSym("F", i, p))).reduce()
        return self.h_image_series(i, p)

    def gen(self, g: GenSym) -> DiffOp:
        cached = self._gen_cache.get(g)
        if cached is None:
            if g.kind == "E":
                cached = self.e_image(g.node, g.r)
            elif g.kind == "F":
                cached = self.f_image(g.node, g.r)
            else:
                cached = self.h_image(g.node, g.r)
            self._gen_cache[g] = cached
        return cached

    def word(self, w: Tuple[GenSym, ...]) -> DiffOp:
        if not w:
            return self.scalar(ONE)
        cached = self._word_cache.get(w)
        if cached is None:
            cached = self.word(w[:-1]) * self.gen(w[-1])
            self._word_cache[w] = cached
        return cached

    def apply(self, x: NCElem) -> DiffOp:
        out = self._zero()
        for w, c in x.terms.items():
            term = self.word(w)
            if isinstance(c, KScalar):
                term = DiffOp.scalar(self.space, c) * term
            else:
                term = term * c
            out = out + term
        return out

    def a_coefficients(self, order: int) -> Dict[Tuple[int, int], DiffOp]:
        """Phi(A_i^(r)) for r <= order via the H-series recursion."""
        data = self.data
        return a_series(
            data.dat,
            data.lam,
            data.mu,
            data.R,
            order,
            lambda i, p: self.h_image(i, p),
            self.scalar(ONE),
        )

    def a_expected(self, i: int, r: int) -> DiffOp:
        """Coefficient of u^-r in u^-m_i W_i(u): (-1)^r e_r(w_{i,*})."""
        ws = [self.w(i, s) for s in range(1, self.data.m[i] + 1)]
        return self.scalar(_elementary(ws, r, self.space.ring) * (-1) ** r)


def _elementary(xs: Sequence[MPoly], r: int, ring: PolyRing) -> MPoly:
    e = [ring.one()] + [ring.zero()] * r
    for x in xs:
        for k in range(r, 0, -1):
            e[k] = e[k] + e[k - 1] * x
    return e[r] if r <= len(xs) else ring.zero()


def phi_gen(data: GKLOData, g: GenSym, rep: GKLORep | None = None) -> DiffOp:
    return (rep or GKLORep(data)).gen(g)


# Checks


@dataclass
class InstanceResult:
    check_id: str
    passed: bool
    witness: str = ""


def check_denominators(op: DiffOp) -> bool:
    """Every denominator factor is w_{i,r} - w_{i,s} + k d_i (same factor and node)."""
    space = op.space
    for c in op.terms.values():
        for f, _ in c.factors():
            used = sorted(f.variables())
            if len(used) != 2:
                return False
            (fa, ia, _), (fb, ib, _) = space.slots[used[0]], space.slots[used[1]]
            if fa != fb or ia != ib:
                return False
            for exps, coef in f.items():
                if sum(exps) == 1:
                    if not coef.is_rational() or abs(coef.to_rat()) != 1:
                        return False
                elif sum(exps) == 0:
                    if not coef.is_rational():
                        return False
                    k = coef.to_rat() / space.slot_d[used[0]]
                    if k.denominator != 1:
                        return False
                else:
                    return False
    return True


def verify_relations(data: GKLOData, cap: int, rep: GKLORep | None = None, include_serre: bool = True) -> List[InstanceResult]:
    """Map every relation instance with superscripts <= cap through Phi."""
    rep = rep or GKLORep(data)
    ctx = YangianCtx(data.dat, data.mu, cap=max(cap, 2 + max(0, max(-x for x in data.mu))) * 2, length_cap=8)
    results = []
    for rel, idx, sups in relation_instances(ctx, cap):
        if not include_serre and rel.startswith("Serre"):
            continue
        defect = relation_defect(ctx, rel, idx, sups)
        image = rep.apply(defect)
        cid = f"{rel}[{','.join(str(i + 1) for i in idx)}]({','.join(map(str, sups))})"
        results.append(InstanceResult(cid, image.is_zero(), "" if image.is_zero() else str(image)[:400]))
    # the commutator route for H against the series formula
    for i in data.dat.nodes:
        base = -data.mu.pairing(i)
        for p in range(max(base, 1), cap + 1):
            diff = rep.h_image(i, p) - rep.h_image_series(i, p)
            results.append(InstanceResult(f"Hseries[{i + 1}]({p})", diff.is_zero(), "" if diff.is_zero() else str(diff)[:400]))
    return results


def truncation_kernel_check(data: GKLOData, i: int, r: int, rep: GKLORep | None = None) -> bool:
    """True when Phi(A_i^(r)) = 0; requires r > m_i."""
    if r <= data.m[i]:
        raise ValueError(f"truncation check needs r > m_{i + 1} = {data.m[i]}")
    rep = rep or GKLORep(data)
    coeffs = rep.a_coefficients(r)
    return coeffs[(i, r)].is_zero()


def truncation_report(data: GKLOData, extra: int = 3, rep: GKLORep | None = None) -> List[InstanceResult]:
    """A_i^(r) = (-1)^r e_r for r <= m_i and A_i^(r) = 0 for m_i < r <= m_i + extra."""
    rep = rep or GKLORep(data)
    order = max(data.m) + extra
    coeffs = rep.a_coefficients(order)
    out = []
    for i in data.dat.nodes:
        for r in range(1, data.m[i] + extra + 1):
            value = coeffs[(i, r)]
            expected = rep.a_expected(i, r)
            ok = (value - expected).is_zero()
            out.append(InstanceResult(f"A[{i + 1}]({r})", ok, "" if ok else str(value)[:400]))
    return out
