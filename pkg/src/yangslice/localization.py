"""Consequences of localizing at E_i^(1): ad-nilpotency identities and the
quantum Hamiltonian reduction of differential operators on C^x."""

from __future__ import annotations

from math import comb
from typing import Dict, List, Sequence, Tuple

from .cartan import CartanDatum, coweight, is_antidominant
from .gklo import GKLOData, GKLORep, InstanceResult, gklo_data
from .rational import HALF, ONE, Rat, ZERO, rat, rat_str
from .yangian import NCElem, YangianCtx, commutator, nf_a1


# Ad-nilpotency


class _Symbolic:
    """Builds identities as NCElem."""

    def gen(self, kind: str, i: int, r: int):
        return NCElem.gen(kind, i, r)

    def comm(self, a, b):
        return commutator(a, b)


class _Operator:
    """Builds the same identities directly as GKLO images."""

    def __init__(self, rep: GKLORep):
        self.rep = rep

    def gen(self, kind: str, i: int, r: int):
        from .yangian import GenSym

        return self.rep.gen(GenSym(kind, i, r))

    def comm(self, a, b):
        return a * b - b * a


def _ad(alg, x, y, times: int):
    for _ in range(times):
        y = alg.comm(x, y)
    return y


def _S(alg, ctx: YangianCtx, j: int, k: int):
    b = ctx.base(j)
    h1 = alg.gen("H", j, b + 1)
    if k == 1:
        return h1
    return alg.gen("H", j, b + 2) - h1 * h1 * HALF


def ad_nilpotency_identities(ctx: YangianCtx, i: int, alg=None) -> List[Tuple[str, object]]:
    """(label, element that must vanish) for node i of an antidominant shift.

    ``alg`` builds the elements: symbolic words by default, or operator
    images when given a GKLO representation backend."""
    alg = alg or _Symbolic()
    dat = ctx.dat
    mu = ctx.mu
    if not is_antidominant(mu):
        raise ValueError("ad-nilpotency identities need an antidominant shift")
    if mu.pairing(i) >= -1:
        raise ValueError(f"need <mu, alpha_{i + 1}> < -1, got {mu.pairing(i)}")
    e1, e2 = alg.gen("E", i, 1), alg.gen("E", i, 2)
    aa = Rat(dat.form(i, i))
    out = [
        (f"[E{i + 1}^(1), F{i + 1}^(1)] = 0", alg.comm(e1, alg.gen("F", i, 1))),
        (f"[E{i + 1}^(1), E{i + 1}^(2)] = -(a.a/2) E^2", alg.comm(e1, e2) + e1 * e1 * (aa * HALF)),
    ]
    for j in dat.nodes:
        s1, s2 = _S(alg, ctx, j, 1), _S(alg, ctx, j, 2)
        b = ctx.base(j)
        out.append((f"ad(E{i + 1}^(1))^2 S{j + 1}^({b + 1}) = 0", _ad(alg, e1, s1, 2)))
        out.append((f"[E{i + 1}^(1), S{j + 1}^({b + 2})] = -(a_j.a_i) E{i + 1}^(2)", alg.comm(e1, s2) + e2 * Rat(dat.form(j, i))))
        out.append((f"ad(E{i + 1}^(1))^3 S{j + 1}^({b + 2}) = 0", _ad(alg, e1, s2, 3)))
        if j != i:
            out.append((f"[E{i + 1}^(1), F{j + 1}^(1)] = 0", alg.comm(e1, alg.gen("F", j, 1))))
            out.append((f"ad(E{i + 1}^(1))^{1 - dat.a[i][j]} E{j + 1}^(1) = 0", _ad(alg, e1, alg.gen("E", j, 1), 1 - dat.a[i][j])))
    return out


def default_oracle_family(dat: CartanDatum, mu) -> List[GKLOData]:
    """Small GKLO data for an antidominant mu: lambda = 0 and lambda = (1,..,1) with two R choices."""
    mu = coweight(mu)
    out = []
    for lam in ((0,) * dat.rank, (1,) * dat.rank):
        try:
            out.append(gklo_data(dat, lam, mu))
        except ValueError:
            continue
        if any(lam):
            R = tuple((Rat(k + 1, 2),) for k in dat.nodes)
            out.append(gklo_data(dat, lam, mu, R))
    return out


def ad_nilpotency_check(ctx: YangianCtx, i: int, family: Sequence[GKLOData] | None = None) -> List[InstanceResult]:
    """Rank one: exact normal form.  Higher rank: every image in the oracle family
    vanishes, reported as oracle-relative."""
    if ctx.dat.rank == 1:
        out = []
        for label, x in ad_nilpotency_identities(ctx, i):
            nf = nf_a1(ctx, x)
            out.append(InstanceResult(label, nf.is_zero(), str(nf)[:300]))
        return out
    family = list(family) if family is not None else default_oracle_family(ctx.dat, ctx.mu)
    if not family:
        raise ValueError("no GKLO data available for the oracle")
    verdicts: Dict[str, bool] = {}
    for data in family:
        if data.mu != ctx.mu:
            raise ValueError("oracle data must share the shift")
        for label, op in ad_nilpotency_identities(ctx, i, _Operator(GKLORep(data))):
            verdicts[label] = verdicts.get(label, True) and op.is_zero()
    return [InstanceResult(f"{label} (oracle-relative, {len(family)} reps)", ok) for label, ok in verdicts.items()]


# Differential operators on C^x


class DOp:
    """sum c_{m,n} D^m z^n with D = d/dz written to the left of z; n may be negative."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[Tuple[int, int], Rat] | None = None):
        self.terms = {k: rat(c) for k, c in (terms or {}).items() if c != 0}
        if any(m < 0 for m, _ in self.terms):
            raise ValueError("derivative order must be >= 0")

    @classmethod
    def z(cls, n: int = 1) -> "DOp":
        return cls({(0, n): ONE})

    @classmethod
    def partial(cls, m: int = 1) -> "DOp":
        return cls({(m, 0): ONE})

    @classmethod
    def scalar(cls, c) -> "DOp":
        return cls({(0, 0): c})

    def __add__(self, other):
        other = other if isinstance(other, DOp) else DOp.scalar(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return DOp(out)

    __radd__ = __add__

    def __neg__(self):
        return DOp({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = other if isinstance(other, DOp) else DOp.scalar(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, DOp):
            return DOp({k: c * rat(other) for k, c in self.terms.items()})
        return dop_mul(self, other)

    def __rmul__(self, other):
        return DOp({k: rat(other) * c for k, c in self.terms.items()})

    def __eq__(self, other):
        other = other if isinstance(other, DOp) else DOp.scalar(other)
        return self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def quotient(self) -> Dict[int, Rat]:
        """Image in D / D(z - 1): z^n -> 1 from the right, leaving sum c_m D^m."""
        out: Dict[int, Rat] = {}
        for (m, _), c in self.terms.items():
            out[m] = out.get(m, ZERO) + c
        return {m: c for m, c in out.items() if c}

    def __repr__(self):
        return f"DOp({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (m, n), c in sorted(self.terms.items()):
            mono = "*".join(x for x in ((f"D^{m}" if m > 1 else "D") if m else "", (f"z^{n}" if n != 1 else "z") if n else "") if x)
            parts.append(rat_str(c) + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def _falling(b: int, k: int) -> int:
    out = 1
    for t in range(k):
        out *= b - t
    return out


def dop_mul(a: DOp, b: DOp) -> DOp:
    """(D^p z^q)(D^s z^t) = sum_k (-1)^k C(s,k) q(q-1)..(q-k+1) D^(p+s-k) z^(q+t-k)."""
    out: Dict[Tuple[int, int], Rat] = {}
    for (p, q), c1 in a.terms.items():
        for (s, t), c2 in b.terms.items():
            for k in range(s + 1):
                f = _falling(q, k)
                if f == 0:
                    break
                key = (p + s - k, q + t - k)
                out[key] = out.get(key, ZERO) + c1 * c2 * (-1) ** k * comb(s, k) * f
    return DOp(out)


def dop_commutator(a: DOp, b: DOp) -> DOp:
    return a * b - b * a


def dop_commutator_z_partials(m: int) -> DOp:
    """[z, D^m]."""
    return dop_commutator(DOp.z(), DOp.partial(m))


def _rank(rows: List[List[Rat]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def presentation_map(d: int) -> Dict[str, DOp]:
    """A^(1) -> -d z D, E^(1) -> z, F^(1) -> -d^-1 z^-1."""
    return {
        "A": DOp({(0, 1): ONE}) * DOp.partial(1) * (-d),
        "E": DOp.z(),
        "F": DOp.z(-1) * Rat(-1, d),
    }


def qhr_check(cap: int = 20, symmetrizers: Sequence[int] = (1, 2, 3)) -> List[InstanceResult]:
    """Reduction of D(C^x) by the moment map z at character 1."""
    out = []
    z = DOp.z()
    for m in range(1, cap + 1):
        got = dop_commutator_z_partials(m)
        want = DOp.partial(m - 1) * (-m)
        out.append(InstanceResult(f"[z, D^{m}] = -{m} D^{m - 1}", got == want, str(got)))
    # invariants of D/D(z-1) in degree <= cap: a = sum c_m D^m with (z - 1) a in D(z - 1)
    columns = []
    for m in range(cap + 1):
        image = ((z - 1) * DOp.partial(m)).quotient()
        columns.append([image.get(k, ZERO) for k in range(cap + 1)])
    rows = [[columns[m][k] for m in range(cap + 1)] for k in range(cap + 1)]
    dim = cap + 1 - _rank(rows)
    scalars_ok = all(x == 0 for x in columns[0])
    out.append(InstanceResult(f"invariant subspace of degree <= {cap} has dimension 1", dim == 1 and scalars_ok, f"dimension {dim}"))
    for m in range(1, cap + 1):
        out.append(InstanceResult(f"D^{m} is not invariant", any(columns[m]), ""))
    for d in symmetrizers:
        img = presentation_map(d)
        a, e, f = img["A"], img["E"], img["F"]
        checks = [
            ("[E, A] = d E", dop_commutator(e, a) == e * d),
            ("[F, A] = -d F", dop_commutator(f, a) == f * (-d)),
            ("E F = -1/d", e * f == DOp.scalar(Rat(-1, d))),
            ("F E = -1/d", f * e == DOp.scalar(Rat(-1, d))),
        ]
        for label, ok in checks:
            out.append(InstanceResult(f"D(C^x) presentation d={d}: {label}", ok, ""))
    # the literal F -> -d z^-1 satisfies E F = -1/d only when d = 1
    literal = DOp.z() * (DOp.z(-1) * -1)
    out.append(InstanceResult("literal F -> -d z^-1 at d=1: E F = -1", literal == DOp.scalar(-1), ""))
    return out
