"""Symbolic elements of the Cartan-doubled and shifted Yangians.

Elements are finite sums of words in the generators E_i^(q), F_i^(q),
H_i^(p).  Rank-one elements have a complete normal form (``nf_a1``) in the
block order E < F < H; higher rank zero tests go through the GKLO oracle.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Callable, Dict, Iterable, List, NamedTuple, Sequence, Tuple

from .cartan import CartanDatum, Coweight, coroot_decomposition, coweight
from .rational import HALF, ONE, Rat, ZERO, is_rat, rat, rat_str


class CapOverflow(ArithmeticError):
    """A computation needed a superscript or word length above the context cap."""


KIND_ORDER = {"E": 0, "F": 1, "H": 2}


class GenSym(NamedTuple):
    kind: str
    node: int
    r: int

    def pbw_key(self):
        return (KIND_ORDER[self.kind], self.node, self.r)

    def __str__(self):
        return f"{self.kind}{self.node + 1}^({self.r})"


Word = Tuple[GenSym, ...]


class NCElem:
    """Linear combination of generator words; coefficients are Rat or KScalar."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Word, object] | None = None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def one(cls) -> "NCElem":
        return cls({(): ONE})

    @classmethod
    def zero(cls) -> "NCElem":
        return cls()

    @classmethod
    def gen(cls, kind: str, node: int, r: int) -> "NCElem":
        if kind not in KIND_ORDER:
            raise ValueError(f"unknown generator kind {kind!r}")
        if kind in "EF" and r < 1:
            raise ValueError(f"{kind} superscripts start at 1")
        return cls({(GenSym(kind, node, r),): ONE})

    @classmethod
    def scalar(cls, c) -> "NCElem":
        return cls({(): rat(c) if is_rat(c) else c})

    def _lift(self, other) -> "NCElem":
        if isinstance(other, NCElem):
            return other
        return NCElem.scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return NCElem(out)

    __radd__ = __add__

    def __neg__(self):
        return NCElem({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, NCElem):
            return NCElem({w: c * other for w, c in self.terms.items()})
        out: Dict[Word, object] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                p = c1 * c2
                out[w] = out[w] + p if w in out else p
        return NCElem(out)

    def __rmul__(self, other):
        return NCElem({w: other * c for w, c in self.terms.items()})

    def __pow__(self, n: int):
        out = NCElem.one()
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, NCElem):
            other = self._lift(other)
        return not (self - other).terms

    __hash__ = None

    def generators(self) -> Iterable[GenSym]:
        for w in self.terms:
            yield from w

    def max_superscript(self) -> int:
        return max((g.r for g in self.generators()), default=0)

    def sorted_terms(self) -> List[Tuple[Word, object]]:
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), [g.pbw_key() for g in t[0]]))

    def __repr__(self):
        return f"NCElem({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mono = " ".join(str(g) for g in w)
            cs = rat_str(c) if is_rat(c) else f"({c})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs} {mono}")
        return " + ".join(parts).replace("+ -", "- ")


def E(i: int, r: int) -> NCElem:
    return NCElem.gen("E", i, r)


def F(i: int, r: int) -> NCElem:
    return NCElem.gen("F", i, r)


def H(i: int, r: int) -> NCElem:
    return NCElem.gen("H", i, r)


def commutator(a: NCElem, b: NCElem) -> NCElem:
    return a * b - b * a


def anticommutator(a: NCElem, b: NCElem) -> NCElem:
    return a * b + b * a


class YangianCtx:
    """Cartan datum, shift mu and the caps every operation enforces."""

    def __init__(self, dat: CartanDatum, mu=None, cap: int = 8, length_cap: int = 12):
        self.dat = dat
        self.mu = coweight(mu if mu is not None else (0,) * dat.rank)
        if len(self.mu) != dat.rank:
            raise ValueError("shift has the wrong rank")
        self.cap = cap
        self.length_cap = length_cap
        need = 2 + max(max(-self.mu.pairing(i) for i in dat.nodes), 0)
        if cap < need:
            raise CapOverflow(f"superscript cap {cap} below {need} needed for the Levendorskii generators")

    def base(self, i: int) -> int:
        """-<mu, alpha_i>: the superscript of the H_i that equals 1."""
        return -self.mu.pairing(i)

    def with_shift(self, mu) -> "YangianCtx":
        return YangianCtx(self.dat, mu, self.cap, self.length_cap)

    def check(self, x: NCElem):
        for w in x.terms:
            if len(w) > self.length_cap:
                raise CapOverflow(f"word length {len(w)} above cap {self.length_cap}")
            for g in w:
                if g.r > self.cap:
                    raise CapOverflow(f"{g} above superscript cap {self.cap}")

    def truncate(self, x: NCElem) -> NCElem:
        """Apply H_i^(p) = 0 below the base and H_i^(base) = 1."""
        out: Dict[Word, object] = {}
        for w, c in x.terms.items():
            keep = []
            dead = False
            for g in w:
                if g.kind == "H":
                    b = self.base(g.node)
                    if g.r < b:
                        dead = True
                        break
                    if g.r == b:
                        continue
                keep.append(g)
            if dead:
                continue
            k = tuple(keep)
            out[k] = out[k] + c if k in out else c
        return NCElem(out)


# Relations


RELATION_IDS = ("HH", "EF", "HE", "HF", "EE", "FF", "SerreE", "SerreF")


def relation_defect(ctx: YangianCtx, rel: str, indices: Sequence[int], sups: Sequence[int]) -> NCElem:
    """LHS - RHS of a defining relation instance, with the Y_mu conventions.

    ``indices`` is (i, j); ``sups`` is (p, q) for the two-generator relations
    and (p_1, ..., p_N, q) for the Serre relations.
    """
    dat = ctx.dat
    i, j = indices
    form = Rat(dat.form(i, j))
    if rel == "HH":
        p, q = sups
        out = commutator(H(i, p), H(j, q))
    elif rel == "EF":
        p, q = sups
        out = commutator(E(i, p), F(j, q))
        if i == j:
            out = out - H(i, p + q - 1)
    elif rel == "HE":
        p, q = sups
        out = commutator(H(i, p + 1), E(j, q)) - commutator(H(i, p), E(j, q + 1))
        out = out - anticommutator(H(i, p), E(j, q)) * (form / 2)
    elif rel == "HF":
        p, q = sups
        out = commutator(H(i, p + 1), F(j, q)) - commutator(H(i, p), F(j, q + 1))
        out = out + anticommutator(H(i, p), F(j, q)) * (form / 2)
    elif rel == "EE":
        p, q = sups
        out = commutator(E(i, p + 1), E(j, q)) - commutator(E(i, p), E(j, q + 1))
        out = out - anticommutator(E(i, p), E(j, q)) * (form / 2)
    elif rel == "FF":
        p, q = sups
        out = commutator(F(i, p + 1), F(j, q)) - commutator(F(i, p), F(j, q + 1))
        # the anticommutator mirrors the E-E relation: F_i^(p) F_j^(q) + F_j^(q) F_i^(p)
        out = out + anticommutator(F(i, p), F(j, q)) * (form / 2)
    elif rel in ("SerreE", "SerreF"):
        if i == j:
            raise ValueError("Serre relations need i != j")
        n = 1 - dat.a[i][j]
        *ps, q = sups
        if len(ps) != n:
            raise ValueError(f"Serre relation for ({i}, {j}) needs {n} superscripts p")
        gen = E if rel == "SerreE" else F
        out = NCElem()
        for perm in permutations(ps):
            inner = gen(j, q)
            for p in reversed(perm):
                inner = commutator(gen(i, p), inner)
            out = out + inner
    else:
        raise ValueError(f"unknown relation {rel!r}")
    ctx.check(out)
    return ctx.truncate(out)


def relation_instances(ctx: YangianCtx, cap: int) -> List[Tuple[str, Tuple[int, int], Tuple[int, ...]]]:
    """Every relation instance whose superscripts stay <= cap.

    H superscripts run from the base -<mu, alpha_i> (where H = 1) upward.
    """
    dat = ctx.dat
    out = []
    nodes = list(dat.nodes)
    for i in nodes:
        for j in nodes:
            bi = ctx.base(i)
            for p in range(bi + 1, cap + 1):
                for q in range(ctx.base(j) + 1, cap + 1):
                    if (i, p) < (j, q):
                        out.append(("HH", (i, j), (p, q)))
            for p in range(1, cap + 1):
                for q in range(1, cap + 1):
                    if i != j or p + q - 1 <= cap:
                        out.append(("EF", (i, j), (p, q)))
            for p in range(bi, cap):
                for q in range(1, cap):
                    out.append(("HE", (i, j), (p, q)))
                    out.append(("HF", (i, j), (p, q)))
            for p in range(1, cap):
                for q in range(1, cap):
                    out.append(("EE", (i, j), (p, q)))
                    out.append(("FF", (i, j), (p, q)))
            if i != j:
                n = 1 - dat.a[i][j]
                for combo in _tuples(range(1, cap + 1), n + 1):
                    ps = combo[:-1]
                    if list(ps) != sorted(ps):
                        continue  # sym makes the order of p's irrelevant
                    out.append(("SerreE", (i, j), combo))
                    out.append(("SerreF", (i, j), combo))
    return out


def _tuples(values, n):
    if n == 0:
        yield ()
        return
    for v in values:
        for rest in _tuples(values, n - 1):
            yield (v,) + rest


# Rank-one normal form


class _A1Rules:
    """Straightening rules for rank one, memoised per context."""

    def __init__(self, ctx: YangianCtx):
        if ctx.dat.rank != 1:
            raise ValueError("nf_a1 needs a rank-one context")
        self.ctx = ctx
        self.aa = Rat(ctx.dat.form(0, 0))
        self.base = ctx.base(0)
        self.word_cache: Dict[Word, Dict[Word, object]] = {}
        self.comm_cache: Dict[Tuple[GenSym, GenSym], Dict[Word, object]] = {}

    def gen(self, kind, r) -> GenSym:
        if r > self.ctx.cap:
            raise CapOverflow(f"{kind}^({r}) above superscript cap {self.ctx.cap}")
        return GenSym(kind, 0, r)

    # commutators of an out-of-order pair (a, b), a > b, returned in normal form
    def commutator(self, a: GenSym, b: GenSym) -> Dict[Word, object]:
        key = (a, b)
        if key in self.comm_cache:
            return self.comm_cache[key]
        if a.kind == "F" and b.kind == "E":
            # [F^q, E^p] = -H^(p+q-1)
            out = self.nf_word((self.gen("H", b.r + a.r - 1),))
            out = {w: -c for w, c in out.items()}
        elif a.kind == "H" and b.kind in "EF":
            out = self.h_comm(a.r, b.kind, b.r)
        elif a.kind == b.kind and a.kind in "EF":
            out = self.same_comm(a.kind, a.r, b.r)
        elif a.kind == "H" and b.kind == "H":
            out = {}
        else:
            raise AssertionError(f"unexpected pair {a}, {b}")
        self.comm_cache[key] = out
        return out

    def h_comm(self, p: int, kind: str, q: int) -> Dict[Word, object]:
        """[H^(p), X^(q)] for X in {E, F}."""
        if p <= self.base:
            return {}
        sign = 1 if kind == "E" else -1
        half = self.aa / 2 * sign
        # [H^(p), X^q] = [H^(p-1), X^(q+1)] + sign*aa/2 (H^(p-1) X^q + X^q H^(p-1))
        out = _scale(self.h_comm(p - 1, kind, q + 1), ONE)
        hx = self.nf_word((self.gen("H", p - 1), self.gen(kind, q)))
        xh = self.nf_word((self.gen(kind, q), self.gen("H", p - 1)))
        _accumulate(out, hx, half)
        _accumulate(out, xh, half)
        return out

    def same_comm(self, kind: str, a: int, b: int) -> Dict[Word, object]:
        """[X^(a), X^(b)] for a > b."""
        sign = 1 if kind == "E" else -1
        half = self.aa / 2 * sign
        if a == b + 1:
            # [X^(b+1), X^b] = [X^b, X^(b+1)] + c 2 X^b X^b  =>  = c (X^b)^2
            return {(self.gen(kind, b), self.gen(kind, b)): half}
        # [X^a, X^b] = [X^(a-1), X^(b+1)] + c (X^(a-1) X^b + X^b X^(a-1))
        out: Dict[Word, object] = {}
        if a - 1 != b + 1:
            _accumulate(out, self.commutator(self.gen(kind, a - 1), self.gen(kind, b + 1)), ONE)
        _accumulate(out, self.nf_word((self.gen(kind, a - 1), self.gen(kind, b))), half)
        _accumulate(out, {(self.gen(kind, b), self.gen(kind, a - 1)): ONE}, half)
        return out

    def nf_word(self, word: Word) -> Dict[Word, object]:
        cached = self.word_cache.get(word)
        if cached is not None:
            return cached
        # apply the Y_mu truncation first
        stripped = []
        for g in word:
            if g.kind == "H":
                if g.r < self.base:
                    self.word_cache[word] = {}
                    return {}
                if g.r == self.base:
                    continue
            if g.r > self.ctx.cap:
                raise CapOverflow(f"{g} above superscript cap {self.ctx.cap}")
            stripped.append(g)
        w = tuple(stripped)
        pos = next((k for k in range(len(w) - 1) if w[k].pbw_key() > w[k + 1].pbw_key()), None)
        if pos is None:
            out = {w: ONE}
        else:
            a, b = w[pos], w[pos + 1]
            prefix, suffix = w[:pos], w[pos + 2:]
            out = dict(self.nf_word(prefix + (b, a) + suffix))
            for mid, c in self.commutator(a, b).items():
                _accumulate(out, self.nf_word(prefix + mid + suffix), c)
        self.word_cache[word] = out
        return out


def _accumulate(target: Dict[Word, object], source: Dict[Word, object], scale):
    for w, c in source.items():
        v = target[w] + c * scale if w in target else c * scale
        if v:
            target[w] = v
        else:
            del target[w]


def _scale(source: Dict[Word, object], scale) -> Dict[Word, object]:
    return {w: c * scale for w, c in source.items()}


_RULES: Dict[Tuple, _A1Rules] = {}


def _rules(ctx: YangianCtx) -> _A1Rules:
    key = (ctx.dat, ctx.mu, ctx.cap)
    rules = _RULES.get(key)
    if rules is None:
        rules = _RULES[key] = _A1Rules(ctx)
    return rules


def nf_a1(ctx: YangianCtx, x: NCElem) -> NCElem:
    """PBW normal form in rank one: ordered E...E F...F H...H monomials."""
    rules = _rules(ctx)
    out: Dict[Word, object] = {}
    for w, c in x.terms.items():
        _accumulate(out, rules.nf_word(w), c)
    return NCElem(out)


def is_ordered(word: Word) -> bool:
    return all(word[k].pbw_key() <= word[k + 1].pbw_key() for k in range(len(word) - 1))


def is_zero(ctx: YangianCtx, x: NCElem, oracle=None) -> bool:
    """Exact in rank one; for higher rank ``oracle(x)`` must return True
    when every configured GKLO image of ``x`` vanishes."""
    if ctx.dat.rank == 1:
        return nf_a1(ctx, x).is_zero()
    if oracle is None:
        raise ValueError("rank >= 2 zero tests need a GKLO oracle")
    return oracle(ctx.truncate(x))


# Shift morphisms, Levendorskii elements, degrees, grading


def shift_morphism(ctx: YangianCtx, mu1, mu2, x: NCElem) -> Tuple[YangianCtx, NCElem]:
    """Image of x under the shift map Y_mu -> Y_(mu + mu1 + mu2)."""
    mu1, mu2 = coweight(mu1), coweight(mu2)
    if any(c > 0 for c in mu1) or any(c > 0 for c in mu2):
        raise ValueError("shift morphisms need antidominant mu1, mu2")
    target = ctx.with_shift(ctx.mu + mu1 + mu2)
    out: Dict[Word, object] = {}
    for w, c in ctx.truncate(x).terms.items():
        new = []
        for g in w:
            i = g.node
            if g.kind == "H":
                r = g.r - (mu1.pairing(i) + mu2.pairing(i))
            elif g.kind == "E":
                r = g.r - mu1.pairing(i)
            else:
                r = g.r - mu2.pairing(i)
            if r > target.cap:
                raise CapOverflow(f"{g} maps above superscript cap {target.cap}")
            new.append(GenSym(g.kind, i, r))
        k = tuple(new)
        out[k] = out[k] + c if k in out else c
    return target, NCElem(out)


def levendorskii_S(ctx: YangianCtx, i: int, k: int) -> NCElem:
    """S_i^(base+1) = H_i^(base+1) and S_i^(base+2) = H^(base+2) - (H^(base+1))^2 / 2."""
    b = ctx.base(i)
    if b + k > ctx.cap:
        raise CapOverflow(f"S_{i + 1}^({b + k}) above cap {ctx.cap}")
    if k == 1:
        return H(i, b + 1)
    if k == 2:
        return H(i, b + 2) - H(i, b + 1) * H(i, b + 1) * HALF
    raise ValueError("Levendorskii elements are defined for k in {1, 2}")


def filtration_degree(x: NCElem, nu1, nu2, mu=None) -> int | None:
    """Word-wise filtration degree; ``mu`` defaults to nu1 + nu2.  None for 0."""
    nu1, nu2 = coweight(nu1), coweight(nu2)
    mu = coweight(mu) if mu is not None else nu1 + nu2
    best = None
    for w in x.terms:
        deg = 0
        for g in w:
            if g.kind == "E":
                deg += nu1.pairing(g.node) + g.r
            elif g.kind == "F":
                deg += nu2.pairing(g.node) + g.r
            else:
                deg += mu.pairing(g.node) + g.r
        best = deg if best is None else max(best, deg)
    return best


MIXED = "mixed"


def word_grade(w: Word, rank: int) -> Tuple[int, ...]:
    grade = [0] * rank
    for g in w:
        if g.kind == "E":
            grade[g.node] += 1
        elif g.kind == "F":
            grade[g.node] -= 1
    return tuple(grade)


def root_grading(x: NCElem, rank: int):
    """Common root-lattice degree of all words, MIXED, or None for zero."""
    grades = {word_grade(w, rank) for w in x.terms}
    if not grades:
        return None
    if len(grades) > 1:
        return MIXED
    return grades.pop()


# A-series recursion


def _binom(n: int, k: int) -> int:
    from math import comb

    return comb(n, k)


def _series_mul(a: List, b: List, order: int) -> List:
    out = [None] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x is None:
            continue
        for j in range(0, order + 1 - i):
            y = b[j] if j < len(b) else None
            if y is None:
                continue
            p = x * y
            out[i + j] = p if out[i + j] is None else out[i + j] + p
    return out


def _rational_series(linear_factors: Iterable[Tuple[Rat, int]], order: int) -> List[Rat]:
    """Expansion of prod (1 - c x)^e in x (e may be negative)."""
    coeffs = [ZERO] * (order + 1)
    coeffs[0] = ONE
    for c, e in linear_factors:
        if e == 0 or c == 0:
            continue
        factor = [ZERO] * (order + 1)
        for k in range(order + 1):
            # (1 - c x)^e = sum_k binom(e, k) (-c)^k x^k, generalised binomial
            num = ONE
            for t in range(k):
                num *= Rat(e - t)
            from math import factorial

            factor[k] = num / factorial(k) * (-c) ** k
        coeffs = [sum((coeffs[i] * factor[k - i] for i in range(k + 1)), ZERO) for k in range(order + 1)]
    return coeffs


def _shifted_a(a_coeffs: List, c: Rat, order: int) -> List:
    """Coefficients in x = 1/u of A(u - c) = 1 + sum_r A^(r) x^r (1 - c x)^(-r)."""
    out: List = [None] * (order + 1)
    out[0] = a_coeffs[0]
    for r in range(1, order + 1):
        ar = a_coeffs[r] if r < len(a_coeffs) else None
        if ar is None:
            continue
        for k in range(0, order + 1 - r):
            coef = Rat(_binom(r + k - 1, k)) * c ** k
            if coef == 0:
                continue
            term = ar * coef
            out[r + k] = term if out[r + k] is None else out[r + k] + term
    return out


def a_series_prefactor(dat: CartanDatum, lam, mu, R, i: int, order: int) -> List[Rat]:
    """u^(-<mu, alpha_i>) p_i(u) prod (u - c)^(m_j) / (u^m_i (u - d_i)^m_i) in x = 1/u."""
    m = coroot_decomposition(dat, lam, mu)
    factors = [(rat(c), 1) for c in R[i]]
    for j in dat.nodes:
        if j == i:
            continue
        for s in range(1, -dat.a[j][i] + 1):
            shift = Rat(dat.d[i] * dat.a[i][j], 2) + s * dat.d[j]
            factors.append((shift, m[j]))
    factors.append((Rat(dat.d[i]), -m[i]))
    return _rational_series(factors, order)


def a_series(
    dat: CartanDatum,
    lam,
    mu,
    R,
    order: int,
    h_value: Callable[[int, int], object],
    one,
) -> Dict[Tuple[int, int], object]:
    """Solve for A_i^(r), r <= order, from the H-series identity order by order.

    ``h_value(i, p)`` returns the host-ring value of H_i^(p) for p above the
    base -<mu, alpha_i>; ``one`` is the host unit.  The host ring must be
    commutative and accept multiplication by rationals.
    """
    lam, mu = coweight(lam), coweight(mu)
    coroot_decomposition(dat, lam, mu)  # validates the pair
    n = dat.rank
    for i in dat.nodes:
        if len(R[i]) != lam.pairing(i):
            raise ValueError(f"|R_{i + 1}| must equal lambda_{i + 1}")
    # inverse of the transposed Cartan matrix: sum_j a_ji A_j^(r) = rhs_i
    from .cartan import _solve

    inv_t = []
    for k in range(n):
        e = [1 if t == k else 0 for t in range(n)]
        inv_t.append(_solve([[dat.a[j][i] for j in range(n)] for i in range(n)], e))
    # inv_t[k] is the solution for rhs = e_k, i.e. column k of (a^T)^-1
    prefactor = {i: a_series_prefactor(dat, lam, mu, R, i, order) for i in dat.nodes}
    hser = {}
    for i in dat.nodes:
        b = -mu.pairing(i)
        hser[i] = [one] + [h_value(i, b + r) for r in range(1, order + 1)]
    A: Dict[int, List] = {i: [one] for i in dat.nodes}
    for r in range(1, order + 1):
        known = []
        for i in dat.nodes:
            cur = {j: A[j] + [None] for j in dat.nodes}  # A^(r) unknown, set to zero
            lhs = _series_mul(hser[i], _series_mul(cur[i], _shifted_a(cur[i], Rat(dat.d[i]), r), r), r)
            rhs = [one * c if c else None for c in prefactor[i][: r + 1]]
            for j in dat.nodes:
                if j == i:
                    continue
                for s in range(1, -dat.a[j][i] + 1):
                    shift = Rat(dat.d[i] * dat.a[i][j], 2) + s * dat.d[j]
                    rhs = _series_mul(rhs, _shifted_a(cur[j], shift, r), r)
            diff = None
            if rhs[r] is not None:
                diff = rhs[r]
            if lhs[r] is not None:
                diff = -lhs[r] if diff is None else diff - lhs[r]
            known.append(diff)
        for j in dat.nodes:
            val = None
            for i in dat.nodes:
                coef = inv_t[i][j]
                if coef == 0 or known[i] is None:
                    continue
                term = known[i] * coef
                val = term if val is None else val + term
            A[j].append(val if val is not None else one * ZERO)
    return {(i, r): A[i][r] for i in dat.nodes for r in range(order + 1)}
