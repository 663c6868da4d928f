"""Coproducts of shifted Yangians evaluated in tensor products of GKLO factors.

Symbolic tensors (``TensorNC``) hold pairs of generator words.  A
``CoprodCtx`` fixes the split mu = mu1 + mu2, the two factor
representations (acting on disjoint variables of one ``OpSpace``) and the
antidominant shifts (eta1, eta2) of the square

    (iota_{mu1,eta1,0} x iota_{mu2,0,eta2}) o Delta_{mu1,mu2}
        = Delta_{mu1+eta1,mu2+eta2} o iota_{mu,eta1,eta2}.

The antidominant coproduct is written down on the shifted side and pulled
back letter by letter: E and H letters of the left factor lose k1 = -<eta1,.>
from their superscripts, F and H letters of the right factor lose k2.  The
leading terms E^(r) x 1 and 1 x F^(r) are carried separately, because on the
shifted side they may sit at superscripts with no preimage; their raising
commutators are expanded with the defining relations instead.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from .cartan import (
    CartanDatum,
    Coweight,
    _nested_words,
    coroot_decomposition,
    coweight,
    is_antidominant,
    positive_roots,
    root_vector_normalisation,
)
from .gklo import DiffOp, GKLOData, GKLORep, InstanceResult, OpSpace, commutator as op_commutator, gklo_data
from .rational import HALF, ONE, Rat, ZERO, is_rat, rat_str
from .yangian import (
    GenSym,
    NCElem,
    Word,
    YangianCtx,
    commutator,
    levendorskii_S,
    relation_defect,
    relation_instances,
    shift_morphism,
    word_grade,
)


class DirectRangeError(ValueError):
    """The generator is outside the range covered by the direct formulas."""


class ShiftReachError(ValueError):
    """The requested image needs a letter that has no preimage under the shift maps."""


# Symbolic tensors


Pair = Tuple[Word, Word]


class TensorNC:
    """Finite sum of c * (left word) x (right word); like pairs merged."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Pair, object] | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def tensor(cls, left: NCElem, right: NCElem) -> "TensorNC":
        out: Dict[Pair, object] = {}
        for wl, cl in left.terms.items():
            for wr, cr in right.terms.items():
                k = (wl, wr)
                p = cl * cr
                out[k] = out[k] + p if k in out else p
        return cls(out)

    @classmethod
    def one(cls) -> "TensorNC":
        return cls({((), ()): ONE})

    def __add__(self, other: "TensorNC") -> "TensorNC":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return TensorNC(out)

    def __neg__(self) -> "TensorNC":
        return TensorNC({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorNC") -> "TensorNC":
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TensorNC):
            return TensorNC({k: c * other for k, c in self.terms.items()})
        out: Dict[Pair, object] = {}
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                k = (l1 + l2, r1 + r2)
                p = c1 * c2
                out[k] = out[k] + p if k in out else p
        return TensorNC(out)

    def __rmul__(self, other):
        return TensorNC({k: other * c for k, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def map_words(self, left: Callable[[Word], Word | None], right: Callable[[Word], Word | None]) -> "TensorNC":
        """Apply word maps to each side; a map returning None kills the pair."""
        out: Dict[Pair, object] = {}
        for (wl, wr), c in self.terms.items():
            nl, nr = left(wl), right(wr)
            if nl is None or nr is None:
                continue
            k = (nl, nr)
            out[k] = out[k] + c if k in out else c
        return TensorNC(out)

    def left_grades(self, rank: int) -> set:
        return {word_grade(wl, rank) for (wl, _) in self.terms}

    def grades(self, rank: int) -> set:
        out = set()
        for wl, wr in self.terms:
            gl, gr = word_grade(wl, rank), word_grade(wr, rank)
            out.add(tuple(a + b for a, b in zip(gl, gr)))
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (wl, wr), c in sorted(self.terms.items(), key=lambda t: (len(t[0][0]) + len(t[0][1]), str(t[0]))):
            left = " ".join(map(str, wl)) or "1"
            right = " ".join(map(str, wr)) or "1"
            parts.append(f"{rat_str(c) if is_rat(c) else c}*({left} x {right})")
        return " + ".join(parts)

    __repr__ = __str__


def tcommutator(a: TensorNC, b: TensorNC) -> TensorNC:
    return a * b - b * a


# Root vectors


def _nested_elem(seq: Sequence[int], kind: str) -> NCElem:
    return NCElem({tuple(GenSym(kind, j, 1) for j in w): c for w, c in _nested_words(seq).items()})


@lru_cache(maxsize=None)
def _root_data(dat: CartanDatum) -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...], Rat], ...]:
    """(gamma, node sequence, F normalisation) for every positive root."""
    out = []
    for gamma in positive_roots(dat):
        seq, c = root_vector_normalisation(dat, gamma)
        out.append((gamma, seq, c))
    return tuple(out)


def root_vector_E(dat: CartanDatum, gamma: Sequence[int]) -> NCElem:
    seq, _ = root_vector_normalisation(dat, tuple(gamma))
    return _nested_elem(seq, "E")


def root_vector_F(dat: CartanDatum, gamma: Sequence[int]) -> NCElem:
    seq, c = root_vector_normalisation(dat, tuple(gamma))
    return _nested_elem(seq, "F") * c


def _nested_bracket(seq: Sequence[int], kind: str, base: Callable[[int], NCElem]) -> NCElem:
    """[nested(seq), G] by the Jacobi identity, where base(a) = [x_a^(1), G]."""
    if len(seq) == 1:
        return base(seq[0])
    head = NCElem.gen(kind, seq[0], 1)
    tail = _nested_elem(seq[1:], kind)
    return commutator(head, _nested_bracket(seq[1:], kind, base)) - commutator(tail, base(seq[0]))


def _simple(dat: CartanDatum, i: int) -> Tuple[int, ...]:
    return tuple(1 if k == i else 0 for k in dat.nodes)


# Representations of shifted factors


class ShiftedRep:
    """rho o iota: a representation of Y_mu obtained from one of Y_(mu+eta1+eta2)."""

    def __init__(self, base, eta1, eta2):
        self.base = base
        self.space = base.space
        eta1, eta2 = coweight(eta1), coweight(eta2)
        if not (is_antidominant(eta1) and is_antidominant(eta2)):
            raise ValueError("shift embeddings need antidominant eta")
        n = len(eta1)
        self.kE = tuple(-eta1.pairing(i) for i in range(n))
        self.kF = tuple(-eta2.pairing(i) for i in range(n))
        self._cache: Dict[Word, DiffOp] = {}

    def gen(self, g: GenSym) -> DiffOp:
        i = g.node
        if g.kind == "E":
            return self.base.gen(GenSym("E", i, g.r + self.kE[i]))
        if g.kind == "F":
            return self.base.gen(GenSym("F", i, g.r + self.kF[i]))
        return self.base.gen(GenSym("H", i, g.r + self.kE[i] + self.kF[i]))

    def word(self, w: Word) -> DiffOp:
        if not w:
            return DiffOp.scalar(self.space, ONE)
        cached = self._cache.get(w)
        if cached is None:
            cached = self.word(w[:-1]) * self.gen(w[-1])
            self._cache[w] = cached
        return cached

    def apply(self, x: NCElem) -> DiffOp:
        out = DiffOp(self.space)
        for w, c in x.terms.items():
            out = out + self.word(w) * c
        return out


# Context


def minimal_eta(mu) -> Coweight:
    """Smallest antidominant eta with mu + eta antidominant."""
    mu = coweight(mu)
    return coweight(tuple(-max(0, x) for x in mu))


class CoprodCtx:
    """Split mu = mu1 + mu2 with concrete factor representations."""

    def __init__(self, dat: CartanDatum, mu1, mu2, left, right, eta1=None, eta2=None, cap: int = 8):
        self.dat = dat
        self.mu1, self.mu2 = coweight(mu1), coweight(mu2)
        self.mu = self.mu1 + self.mu2
        self.eta1 = coweight(eta1) if eta1 is not None else minimal_eta(self.mu1)
        self.eta2 = coweight(eta2) if eta2 is not None else minimal_eta(self.mu2)
        if not (is_antidominant(self.eta1) and is_antidominant(self.eta2)):
            raise ValueError("eta1, eta2 must be antidominant")
        self.mu1s, self.mu2s = self.mu1 + self.eta1, self.mu2 + self.eta2
        if not (is_antidominant(self.mu1s) and is_antidominant(self.mu2s)):
            raise ValueError("mu1 + eta1 and mu2 + eta2 must be antidominant")
        if left.space is not right.space:
            raise ValueError("both factors must act on one operator space")
        self.left, self.right = left, right
        self.space = left.space
        self.cap = cap
        n = dat.rank
        self.k1 = tuple(-self.eta1.pairing(i) for i in range(n))
        self.k2 = tuple(-self.eta2.pairing(i) for i in range(n))
        # bases on the shifted (antidominant) side
        self.b1s = tuple(-self.mu1s.pairing(i) for i in range(n))
        self.b2s = tuple(-self.mu2s.pairing(i) for i in range(n))
        self.ctx = YangianCtx(dat, self.mu, cap=max(cap, 2 + max(0, max(-x for x in self.mu))))
        self._img: Dict[GenSym, DiffOp] = {}
        self._word_img: Dict[Word, DiffOp] = {}
        self._rest_img: Dict[Tuple[str, int, int], DiffOp] = {}
        self._rest_sym: Dict[Tuple[str, int, int], TensorNC] = {}

    @property
    def shifted(self) -> bool:
        return any(self.k1) or any(self.k2)

    @property
    def antidominant(self) -> bool:
        return is_antidominant(self.mu1) and is_antidominant(self.mu2)

    def describe(self) -> str:
        s = f"{self.dat.name} mu1={self.mu1.coords} mu2={self.mu2.coords}"
        if self.shifted:
            s += f" via shift embedding eta1={self.eta1.coords} eta2={self.eta2.coords}"
        return s

    # pieces on the shifted side, already pulled back

    def _base_left(self, i: int) -> int:
        return -self.mu1.pairing(i)

    def _base_right(self, i: int) -> int:
        return -self.mu2.pairing(i)

    def _pull_left(self, w: Word) -> Word | None:
        out = []
        for g in w:
            i = g.node
            if g.kind == "F":
                out.append(g)
                continue
            r = g.r - self.k1[i]
            if g.kind == "E":
                if r < 1:
                    raise ShiftReachError(f"left letter {g} has no preimage")
                out.append(GenSym("E", i, r))
            else:
                b = self._base_left(i)
                if r < b:
                    return None
                if r > b:
                    out.append(GenSym("H", i, r))
        return tuple(out)

    def _pull_right(self, w: Word) -> Word | None:
        out = []
        for g in w:
            i = g.node
            if g.kind == "E":
                out.append(g)
                continue
            r = g.r - self.k2[i]
            if g.kind == "F":
                if r < 1:
                    raise ShiftReachError(f"right letter {g} has no preimage")
                out.append(GenSym("F", i, r))
            else:
                b = self._base_right(i)
                if r < b:
                    return None
                if r > b:
                    out.append(GenSym("H", i, r))
        return tuple(out)

    def pull_back(self, t: TensorNC) -> TensorNC:
        return t.map_words(self._pull_left, self._pull_right)

    def _left_S(self, i: int, k: int) -> NCElem:
        b = self.b1s[i]
        if k == 1:
            return NCElem.gen("H", i, b + 1)
        return NCElem.gen("H", i, b + 2) - NCElem.gen("H", i, b + 1) * NCElem.gen("H", i, b + 1) * HALF

    def _right_S(self, i: int, k: int) -> NCElem:
        b = self.b2s[i]
        if k == 1:
            return NCElem.gen("H", i, b + 1)
        return NCElem.gen("H", i, b + 2) - NCElem.gen("H", i, b + 1) * NCElem.gen("H", i, b + 1) * HALF

    def _x_sum(self, i: int) -> TensorNC:
        """sum over gamma > 0 of (alpha_i . gamma) F_gamma x E_gamma."""
        out = TensorNC()
        for gamma, seq, c in _root_data(self.dat):
            w = self.dat.root_form(_simple(self.dat, i), gamma)
            if w:
                out = out + TensorNC.tensor(_nested_elem(seq, "F") * (c * w), _nested_elem(seq, "E"))
        return out

    def _delta_S_shifted(self, i: int, k: int) -> TensorNC:
        one = NCElem.one()
        t = TensorNC.tensor(self._left_S(i, k), one) + TensorNC.tensor(one, self._right_S(i, k))
        if k == 2:
            t = t - self._x_sum(i)
        return t

    def delta_S(self, i: int, k: int) -> TensorNC:
        """Delta(S_i^(base+k)) in Y_mu1 x Y_mu2, k in {1, 2}."""
        return self.pull_back(self._delta_S_shifted(i, k))

    def _rest_direct(self, kind: str, i: int, r: int) -> TensorNC:
        """Delta(X_i^(r)) minus its leading term, on the shifted side, r in the direct range."""
        one = NCElem.one()
        if kind == "E":
            b = self.b1s[i]
            if r <= b:
                return TensorNC()
            if r == b + 1:
                return TensorNC.tensor(one, NCElem.gen("E", i, 1))
            out = TensorNC.tensor(one, NCElem.gen("E", i, 2)) + TensorNC.tensor(NCElem.gen("H", i, b + 1), NCElem.gen("E", i, 1))
            ei = NCElem.gen("E", i, 1)
            for gamma, seq, c in _root_data(self.dat):
                br = commutator(ei, _nested_elem(seq, "E"))
                if br:
                    out = out - TensorNC.tensor(_nested_elem(seq, "F") * c, br)
            return out
        b = self.b2s[i]
        if r <= b:
            return TensorNC()
        if r == b + 1:
            return TensorNC.tensor(NCElem.gen("F", i, 1), one)
        out = TensorNC.tensor(NCElem.gen("F", i, 2), one) + TensorNC.tensor(NCElem.gen("F", i, 1), NCElem.gen("H", i, b + 1))
        fi = NCElem.gen("F", i, 1)
        for gamma, seq, c in _root_data(self.dat):
            br = commutator(fi, _nested_elem(seq, "F") * c)
            if br:
                out = out + TensorNC.tensor(br, _nested_elem(seq, "E"))
        return out

    def _lead_correction(self, kind: str, i: int, r: int) -> TensorNC:
        """The term produced by -X_i acting on the leading term during one raising step.

        E: -sum c_gamma [F_gamma, E_i^(r)] x E_gamma;  F: +sum c_gamma F_gamma x [E_gamma, F_i^(r)].
        The brackets are expanded with [F_a^(1), E_i^(r)] = -delta H_i^(r) and
        [E_a^(1), F_i^(r)] = delta H_i^(r), so no leading letter survives."""
        out = TensorNC()
        for gamma, seq, c in _root_data(self.dat):
            w = self.dat.root_form(_simple(self.dat, i), gamma)
            if not w:
                continue
            if kind == "E":
                br = _nested_bracket(seq, "F", lambda a: NCElem.gen("H", i, r) * (-1) if a == i else NCElem())
                if br:
                    out = out - TensorNC.tensor(br * (c * w), _nested_elem(seq, "E"))
            else:
                br = _nested_bracket(seq, "E", lambda a: NCElem.gen("H", i, r) if a == i else NCElem())
                if br:
                    out = out + TensorNC.tensor(_nested_elem(seq, "F") * (c * w), br)
        return out

    def _direct_top(self, kind: str, i: int) -> int:
        return (self.b1s if kind == "E" else self.b2s)[i] + 2

    # symbolic route

    def rest_symbolic(self, kind: str, i: int, r: int) -> TensorNC:
        """Delta(X_i^(r)) - leading term, pulled back; r is the shifted superscript."""
        key = (kind, i, r)
        cached = self._rest_sym.get(key)
        if cached is not None:
            return cached
        top = self._direct_top(kind, i)
        if r <= top:
            out = self.pull_back(self._rest_direct(kind, i, r))
        else:
            prev = self.rest_symbolic(kind, i, r - 1)
            lead = self.pull_back(self._lead_correction(kind, i, r - 1))
            s2 = self.delta_S(i, 2)
            aa = Rat(self.dat.form(i, i))
            if kind == "E":
                out = (lead + tcommutator(s2, prev)) * (ONE / aa)
            else:
                out = (lead - tcommutator(s2, prev)) * (ONE / aa)
        self._rest_sym[key] = out
        return out

    def delta_symbolic(self, g: GenSym) -> TensorNC:
        """Delta(g) as a symbolic element of Y_mu1 x Y_mu2."""
        one = NCElem.one()
        i = g.node
        if g.kind == "E":
            lead = TensorNC.tensor(NCElem.gen("E", i, g.r), one)
            return lead + self.rest_symbolic("E", i, g.r + self.k1[i])
        if g.kind == "F":
            lead = TensorNC.tensor(one, NCElem.gen("F", i, g.r))
            return lead + self.rest_symbolic("F", i, g.r + self.k2[i])
        b = self.ctx.base(i)
        if g.r < b:
            return TensorNC()
        if g.r == b:
            return TensorNC.tensor(one, one)
        if g.r == b + 1:
            return self.delta_S(i, 1)
        if g.r == b + 2:
            s1 = self.delta_S(i, 1)
            return self.delta_S(i, 2) + s1 * s1 * HALF
        raise ShiftReachError(f"symbolic Delta({g}) is only available up to H^(base+2)")

    # image route

    def image(self, t: TensorNC) -> DiffOp:
        out = DiffOp(self.space)
        for (wl, wr), c in t.terms.items():
            out = out + self.left.word(wl) * self.right.word(wr) * c
        return out

    def _rest_image(self, kind: str, i: int, r: int) -> DiffOp:
        key = (kind, i, r)
        cached = self._rest_img.get(key)
        if cached is not None:
            return cached
        top = self._direct_top(kind, i)
        if r <= top:
            out = self.image(self.pull_back(self._rest_direct(kind, i, r)))
        else:
            prev = self._rest_image(kind, i, r - 1)
            lead = self.image(self.pull_back(self._lead_correction(kind, i, r - 1)))
            s2 = self.image(self.delta_S(i, 2))
            inv = ONE / Rat(self.dat.form(i, i))
            if kind == "E":
                out = (lead + op_commutator(s2, prev)) * inv
            else:
                out = (lead - op_commutator(s2, prev)) * inv
        self._rest_img[key] = out
        return out

    def delta_image(self, g: GenSym) -> DiffOp:
        """(rho_left x rho_right)(Delta(g))."""
        cached = self._img.get(g)
        if cached is not None:
            return cached
        i = g.node
        if g.kind == "E":
            out = self.left.gen(g) + self._rest_image("E", i, g.r + self.k1[i])
        elif g.kind == "F":
            out = self.right.gen(g) + self._rest_image("F", i, g.r + self.k2[i])
        else:
            b = self.ctx.base(i)
            if g.r <= b + 2:
                out = self.image(self.delta_symbolic(g))
            elif g.r >= 1:
                out = op_commutator(self.delta_image(GenSym("E", i, 1)), self.delta_image(GenSym("F", i, g.r)))
            else:
                raise ShiftReachError(f"Delta({g}) needs H below superscript 1 beyond base+2")
        self._img[g] = out
        return out

    def delta_word(self, w: Word) -> DiffOp:
        if not w:
            return DiffOp.scalar(self.space, ONE)
        cached = self._word_img.get(w)
        if cached is None:
            cached = self.delta_word(w[:-1]) * self.delta_image(w[-1])
            self._word_img[w] = cached
        return cached

    def delta_apply(self, x: NCElem) -> DiffOp:
        out = DiffOp(self.space)
        for w, c in self.ctx.truncate(x).terms.items():
            out = out + self.delta_word(w) * c
        return out


def coprod_ctx(dat: CartanDatum, left_data: GKLOData, right_data: GKLOData, eta1=None, eta2=None, cap: int = 8) -> CoprodCtx:
    """Context whose factors are Phi(left_data) and Phi(right_data) on one space."""
    space = OpSpace(dat, [left_data.m, right_data.m], labels=["L", "R"])
    left = GKLORep(left_data, space, 0)
    right = GKLORep(right_data, space, 1)
    return CoprodCtx(dat, left_data.mu, right_data.mu, left, right, eta1, eta2, cap)


# The three public coproduct operations


def _direct_range(ctx: CoprodCtx, g: GenSym) -> bool:
    i = g.node
    if g.kind == "E":
        return g.r <= ctx.b1s[i] + 2
    if g.kind == "F":
        return g.r <= ctx.b2s[i] + 2
    return g.r <= ctx.ctx.base(i) + 2


def delta_gen(ctx: CoprodCtx, g: GenSym) -> DiffOp:
    """Directly displayed image of a generator (antidominant split, no shift)."""
    if ctx.shifted or not ctx.antidominant:
        raise DirectRangeError("direct formulas need antidominant mu1, mu2 (use delta_general)")
    if not _direct_range(ctx, g):
        raise DirectRangeError(f"{g} is above the direct range (use delta_raise)")
    return ctx.delta_image(g)


def delta_raise(ctx: CoprodCtx, g: GenSym, start: int | None = None) -> DiffOp:
    """Delta(X_j^(r)) by repeated commutators with Delta(S_j^(base+2)) in the factors.

    Starts from the direct image at superscript ``start`` (default: top of the
    direct range, or r itself when r is inside it)."""
    if g.kind not in "EF":
        raise ValueError("raising applies to E and F")
    if ctx.shifted or not ctx.antidominant:
        raise DirectRangeError("raising from direct images needs an unshifted antidominant split")
    i = g.node
    top = (ctx.b1s if g.kind == "E" else ctx.b2s)[i] + 2
    if start is None:
        start = min(g.r, top)
    if start > top or start < 1 or start > g.r:
        raise ValueError(f"start superscript {start} outside 1..{min(g.r, top)}")
    cur = ctx.delta_image(GenSym(g.kind, i, start))
    s2 = ctx.image(ctx.delta_S(i, 2))
    inv = ONE / Rat(ctx.dat.form(i, i))
    for _ in range(start, g.r):
        br = op_commutator(s2, cur)
        cur = br * inv if g.kind == "E" else br * (-inv)
    return cur


def delta_general(ctx: CoprodCtx, g: GenSym) -> DiffOp:
    """Image of Delta_{mu1,mu2}(g) defined through the shift square."""
    return ctx.delta_image(g)


# Checks


def _result(cid: str, op: DiffOp) -> InstanceResult:
    ok = op.is_zero()
    return InstanceResult(cid, ok, "" if ok else str(op)[:400])


def coproduct_relation_check(ctx: CoprodCtx, cap: int = 3, include_serre: bool = True) -> List[InstanceResult]:
    """Every relation defect of Y_mu with superscripts <= cap maps to zero under Delta."""
    out = []
    for rel, idx, sups in relation_instances(ctx.ctx, cap):
        if not include_serre and rel.startswith("Serre"):
            continue
        defect = relation_defect(ctx.ctx, rel, idx, sups)
        cid = f"Delta {rel}[{','.join(str(i + 1) for i in idx)}]({','.join(map(str, sups))})"
        out.append(_result(cid, ctx.delta_apply(defect)))
    return out


def raise_vs_direct_check(ctx: CoprodCtx, cap: int = 3) -> List[InstanceResult]:
    """Raising from superscript 1 agrees with the direct images and the lead-tracked route."""
    out = []
    for i in ctx.dat.nodes:
        for kind in "EF":
            for r in range(2, cap + 1):
                g = GenSym(kind, i, r)
                diff = delta_raise(ctx, g, start=1) - ctx.delta_image(g)
                out.append(_result(f"raise {g}", diff))
    return out


def grading_check(ctx: CoprodCtx, cap: int = 3) -> List[InstanceResult]:
    """Left grade + right grade equals the grade of the generator."""
    rank = ctx.dat.rank
    out = []
    for i in ctx.dat.nodes:
        for kind in "EFH":
            lo = ctx.ctx.base(i) + 1 if kind == "H" else 1
            hi = ctx.ctx.base(i) + 2 if kind == "H" else cap
            for r in range(lo, hi + 1):
                g = GenSym(kind, i, r)
                want = word_grade((g,), rank)
                sym = ctx.delta_symbolic(g).grades(rank)
                img = ctx.delta_image(g).grades()
                ok = sym <= {want} and img <= {want}
                out.append(InstanceResult(f"grade {g}", ok, "" if ok else f"symbolic {sorted(sym)} image {sorted(img)}"))
    return out


def shift_compatibility_check(
    dat: CartanDatum,
    left_data: GKLOData,
    right_data: GKLOData,
    eta1,
    eta2,
    cap: int = 3,
) -> List[InstanceResult]:
    """(iota x iota) o Delta_{mu1,mu2} = Delta_{mu1+eta1,mu2+eta2} o iota on generators.

    ``left_data`` and ``right_data`` are GKLO data of the shifted factors
    Y_{mu1+eta1} and Y_{mu2+eta2}; the unshifted factors act through them."""
    eta1, eta2 = coweight(eta1), coweight(eta2)
    space = OpSpace(dat, [left_data.m, right_data.m], labels=["L", "R"])
    big_left, big_right = GKLORep(left_data, space, 0), GKLORep(right_data, space, 1)
    mu1, mu2 = left_data.mu - eta1, right_data.mu - eta2
    zero = coweight((0,) * dat.rank)
    small = CoprodCtx(dat, mu1, mu2, ShiftedRep(big_left, eta1, zero), ShiftedRep(big_right, zero, eta2), zero, zero)
    big = CoprodCtx(dat, left_data.mu, right_data.mu, big_left, big_right, zero, zero)
    out = []
    for i in dat.nodes:
        gens = [GenSym(k, i, r) for k in "EF" for r in range(1, cap + 1)]
        b = small.ctx.base(i)
        gens += [GenSym("H", i, p) for p in (b + 1, b + 2)]
        for g in gens:
            _, shifted = shift_morphism(small.ctx, eta1, eta2, NCElem({(g,): ONE}))
            diff = small.delta_image(g) - big.delta_apply(shifted)
            out.append(_result(f"square {g}", diff))
    return out


def _prop_split(dat: CartanDatum, lam, mu, R, i: int) -> CoprodCtx:
    """mu1 = -alpha_i^vee with the lambda = 0 factor, mu2 = mu + alpha_i^vee with (lambda, R)."""
    lam, mu = coweight(lam), coweight(mu)
    coroot_decomposition(dat, lam, mu)
    mu1 = -dat.coroot(i)
    mu2 = mu + dat.coroot(i)
    coroot_decomposition(dat, lam, mu2)
    left = gklo_data(dat, (0,) * dat.rank, mu1)
    right = gklo_data(dat, lam, mu2, R)
    return coprod_ctx(dat, left, right)


def localized_e_check(dat: CartanDatum, lam, mu, R, i: int) -> List[InstanceResult]:
    """Delta(E_i^(1)) = E_i^(1) x 1 for the split -alpha_i^vee + (mu + alpha_i^vee)."""
    ctx = _prop_split(dat, lam, mu, R, i)
    g = GenSym("E", i, 1)
    sym = ctx.delta_symbolic(g) - TensorNC.tensor(NCElem.gen("E", i, 1), NCElem.one())
    img = ctx.delta_image(g) - ctx.left.gen(g)
    tag = " via shift embedding" if ctx.shifted else ""
    return [
        InstanceResult(f"Delta E{i + 1}^(1) = E x 1 symbolic{tag}", sym.is_zero(), str(sym)[:400]),
        _result(f"Delta E{i + 1}^(1) = E x 1 image{tag}", img),
    ]


def f_weight_shape_check(dat: CartanDatum, lam, mu, R, i: int, r: int = 1) -> List[InstanceResult]:
    """Delta(F_j^(r)) - 1 x F_j^(r) has strictly negative left root grade, every j.

    Grading-level consequence only; membership in the negative Borel part is not tested."""
    ctx = _prop_split(dat, lam, mu, R, i)
    out = []
    for j in dat.nodes:
        g = GenSym("F", j, r)
        rest = ctx.delta_symbolic(g) - TensorNC.tensor(NCElem.one(), NCElem.gen("F", j, r))
        grades = rest.left_grades(dat.rank)
        ok = all(any(x) and all(x_ <= 0 for x_ in x) for x in grades)
        out.append(InstanceResult(f"left grade of Delta F{j + 1}^({r}) - 1 x F", ok, f"left grades {sorted(grades)}"))
    return out


def explicit_comult_check(dat: CartanDatum, lam, mu, R, i: int, extra: int = 3) -> List[InstanceResult]:
    """Delta(A_i(u)) = A_i x A_i + d_i [A_i, F_i^(1)] x [E_i^(1), A_i] and
    Delta(A_j(u)) = 1 x A_j(u), coefficient-wise up to u^-(m_i + extra).

    The left factor is the lambda = 0 truncation at shift -alpha_i^vee."""
    from .yangian import a_series

    lam, mu = coweight(lam), coweight(mu)
    m = coroot_decomposition(dat, lam, mu)
    if R is None:
        R = tuple((ZERO,) * lam.pairing(k) for k in dat.nodes)
    ctx = _prop_split(dat, lam, mu, R, i)
    order = max(m) + extra
    one = DiffOp.scalar(ctx.space, ONE)
    lhs = a_series(dat, lam, mu, R, order, lambda j, p: ctx.delta_image(GenSym("H", j, p)), one)
    left_a = ctx.left.a_coefficients(order)
    right_a = ctx.right.a_coefficients(order)
    d_i = Rat(dat.d[i])
    f_left = ctx.left.gen(GenSym("F", i, 1))
    e_right = ctx.right.gen(GenSym("E", i, 1))
    tag = " via shift embedding" if ctx.shifted else ""
    out = []
    for r in range(1, order + 1):
        rhs = DiffOp(ctx.space)
        for s in range(r + 1):
            al, ar = left_a[(i, s)], right_a[(i, r - s)]
            rhs = rhs + al * ar
            rhs = rhs + op_commutator(al, f_left) * op_commutator(e_right, ar) * d_i
        out.append(_result(f"Delta A{i + 1}^({r}){tag}", lhs[(i, r)] - rhs))
        if r > m[i]:
            out.append(_result(f"Delta A{i + 1}^({r}) = 0 beyond m", lhs[(i, r)]))
        for j in dat.nodes:
            if j == i:
                continue
            out.append(_result(f"Delta A{j + 1}^({r}) = 1 x A{tag}", lhs[(j, r)] - right_a[(j, r)]))
            if r > m[j]:
                out.append(_result(f"Delta A{j + 1}^({r}) = 0 beyond m", lhs[(j, r)]))
    return out
