"""Symmetrizable Cartan data, coweights, positive roots and root vectors.

Convention: ``a[i][j] = <alpha_i^vee, alpha_j>``.  The simple coroot
``alpha_j^vee`` therefore has fundamental-coweight coordinates equal to row
``j`` of ``a``, and ``<mu, alpha_i>`` is simply ``mu[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Dict, List, Sequence, Tuple

from .rational import ONE, Rat, ZERO


class CartanError(ValueError):
    pass


class DominanceError(ValueError):
    """lambda - mu is not a non-negative integral combination of simple coroots."""


NAMED = {
    "A1": ((( 2,),), (1,)),
    "A2": (((2, -1), (-1, 2)), (1, 1)),
    "B2": (((2, -1), (-2, 2)), (2, 1)),
    "A3": (((2, -1, 0), (-1, 2, -1), (0, -1, 2)), (1, 1, 1)),
}


def _coprime_symmetrizer(a: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """Smallest positive integers d with d_i a_ij = d_j a_ji (connected or not)."""
    n = len(a)
    d: List[Rat | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = ONE
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and (a[i][j] == 0) != (a[j][i] == 0):
                    raise CartanError("a_ij = 0 must match a_ji = 0")
                if i != j and a[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * a[i][j] / a[j][i]
                    stack.append(j)
    lcm = 1
    for x in d:
        lcm = lcm * x.denominator // gcd(lcm, int(x.denominator))
    ints = [int(x * lcm) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class CartanDatum:
    name: str
    a: Tuple[Tuple[int, ...], ...]
    d: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.a)
        if len(self.d) != n or any(len(row) != n for row in self.a):
            raise CartanError("matrix and symmetrizer sizes disagree")
        for i in range(n):
            if self.a[i][i] != 2:
                raise CartanError("diagonal entries must be 2")
            if self.d[i] <= 0:
                raise CartanError("symmetrizers must be positive")
            for j in range(n):
                if i == j:
                    continue
                if self.a[i][j] > 0:
                    raise CartanError("off-diagonal entries must be <= 0")
                if (self.a[i][j] == 0) != (self.a[j][i] == 0):
                    raise CartanError("a_ij = 0 must match a_ji = 0")
                if self.d[i] * self.a[i][j] != self.d[j] * self.a[j][i]:
                    raise CartanError(f"d_i a_ij != d_j a_ji at ({i}, {j})")
        g = 0
        for x in self.d:
            g = gcd(g, x)
        if g != 1:
            raise CartanError("symmetrizers must be coprime")

    @property
    def rank(self) -> int:
        return len(self.a)

    @property
    def nodes(self) -> range:
        return range(self.rank)

    def form(self, i: int, j: int) -> int:
        """alpha_i . alpha_j = d_i a_ij."""
        return bilinear_form(self, i, j)

    def root_form(self, beta: Sequence[int], gamma: Sequence[int]) -> int:
        """beta . gamma for root-lattice vectors in the simple-root basis."""
        return sum(b * c * self.d[i] * self.a[i][j] for i, b in enumerate(beta) for j, c in enumerate(gamma))

    def coroot(self, j: int) -> "Coweight":
        """alpha_j^vee in fundamental-coweight coordinates (row j of a)."""
        return Coweight(tuple(self.a[j]))

    def neighbours(self, i: int) -> List[int]:
        return [j for j in self.nodes if j != i and self.a[i][j] != 0]


def cartan(spec, convention: str = "row") -> CartanDatum:
    """Build a datum from a type name or an explicit ``(a, d)`` pair.

    ``convention="column"`` reads the given matrix as ``a_ij = <alpha_j^vee,
    alpha_i>`` and transposes it (recomputing the symmetrizers), so both
    readings can be run through the same downstream code.
    """
    if isinstance(spec, str):
        if spec not in NAMED:
            raise CartanError(f"unsupported type {spec!r}")
        a, d = NAMED[spec]
        name = spec
    else:
        a, d = spec
        name = "custom"
    a = tuple(tuple(int(x) for x in row) for row in a)
    if convention == "column":
        a = tuple(tuple(a[j][i] for j in range(len(a))) for i in range(len(a)))
        d = _coprime_symmetrizer(a)
    elif convention != "row":
        raise CartanError(f"unknown convention {convention!r}")
    if d is None:
        d = _coprime_symmetrizer(a)
    return CartanDatum(name, a, tuple(int(x) for x in d))


@dataclass(frozen=True)
class Coweight:
    coords: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))

    def pairing(self, j: int) -> int:
        """<mu, alpha_j>."""
        return self.coords[j]

    def __add__(self, other: "Coweight") -> "Coweight":
        return Coweight(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "Coweight") -> "Coweight":
        return Coweight(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "Coweight":
        return Coweight(tuple(-x for x in self.coords))

    def __mul__(self, k: int) -> "Coweight":
        return Coweight(tuple(k * x for x in self.coords))

    __rmul__ = __mul__

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, j):
        return self.coords[j]


def coweight(coords) -> Coweight:
    return coords if isinstance(coords, Coweight) else Coweight(tuple(coords))


def bilinear_form(dat: CartanDatum, i: int, j: int) -> int:
    if not (0 <= i < dat.rank and 0 <= j < dat.rank):
        raise IndexError(f"node index out of range for rank {dat.rank}")
    return dat.d[i] * dat.a[i][j]


def is_antidominant(mu) -> bool:
    return all(x <= 0 for x in coweight(mu))


def is_dominant(mu) -> bool:
    return all(x >= 0 for x in coweight(mu))


def _solve(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> List[Rat]:
    """Exact Gauss-Jordan solve of a square nonsingular system."""
    n = len(matrix)
    rows = [[Rat(x) for x in matrix[i]] + [Rat(rhs[i])] for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = ONE / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return [rows[i][n] for i in range(n)]


def coroot_decomposition(dat: CartanDatum, lam, mu) -> Tuple[int, ...]:
    """m with lambda - mu = sum_j m_j alpha_j^vee, all m_j non-negative integers."""
    lam, mu = coweight(lam), coweight(mu)
    diff = (lam - mu).coords
    # (lambda - mu)_i = sum_j m_j a_ji
    transpose = [[dat.a[j][i] for j in dat.nodes] for i in dat.nodes]
    m = _solve(transpose, diff)
    if any(x.denominator != 1 for x in m):
        raise DominanceError(f"lambda - mu = {diff} is not in the coroot lattice (m = {[str(x) for x in m]})")
    if any(x < 0 for x in m):
        raise DominanceError(f"mu is not <= lambda (m = {[int(x) for x in m]})")
    return tuple(int(x) for x in m)


def expand_coroots(dat: CartanDatum, m: Sequence[int]) -> Coweight:
    out = Coweight((0,) * dat.rank)
    for j, mj in enumerate(m):
        out = out + dat.coroot(j) * mj
    return out


# Root systems


RootVec = Tuple[int, ...]


def _simple(n: int, i: int) -> RootVec:
    return tuple(1 if k == i else 0 for k in range(n))


@lru_cache(maxsize=None)
def _positive_roots(a: Tuple[Tuple[int, ...], ...]) -> Tuple[RootVec, ...]:
    n = len(a)
    roots = [_simple(n, i) for i in range(n)]
    known = set(roots)
    frontier = list(roots)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                # alpha_i-string through beta: p - q = <beta, alpha_i^vee>
                p = 0
                probe = list(beta)
                while True:
                    probe[i] -= 1
                    if tuple(probe) in known:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * a[i][j] for j in range(n))
                q = p - pairing
                if q > 0:
                    gamma = tuple(beta[k] + (1 if k == i else 0) for k in range(n))
                    if gamma not in known:
                        known.add(gamma)
                        nxt.append(gamma)
            if len(known) > 64:
                raise CartanError("root closure did not terminate (not of finite type?)")
        frontier = nxt
    return tuple(sorted(known, key=lambda r: (sum(r), tuple(-x for x in r))))


def positive_roots(dat: CartanDatum) -> List[RootVec]:
    """Positive roots ordered by height, simple roots first."""
    if dat.rank > 3:
        raise CartanError("positive-root tables are certified only for rank <= 3")
    return list(_positive_roots(dat.a))


def root_height(beta: RootVec) -> int:
    return sum(beta)


def pbw_decomposition(dat: CartanDatum, beta: RootVec) -> Tuple[int, ...]:
    """Lexicographically first node sequence (i_1..i_l) summing to beta whose
    suffix sums are all roots, i.e. [e_i1, [e_i2, ... e_il]] is nonzero."""
    roots = set(positive_roots(dat))
    if tuple(beta) not in roots:
        raise CartanError(f"{beta} is not a positive root")
    n = dat.rank

    def search(rest: RootVec) -> Tuple[int, ...] | None:
        # choose i_1 first, so the remainder rest - alpha_i1 must itself be a root
        if sum(rest) == 1:
            return (rest.index(1),)
        for i in range(n):
            if rest[i] == 0:
                continue
            smaller = tuple(rest[k] - (1 if k == i else 0) for k in range(n))
            if smaller in roots:
                tail = search(smaller)
                if tail is not None:
                    return (i,) + tail
        return None

    seq = search(tuple(beta))
    assert seq is not None
    return seq


def _raise_lowering_word(dat: CartanDatum, i: int, vec: Dict[Tuple[int, ...], Rat]) -> Dict[Tuple[int, ...], Rat]:
    """e_i acting on f-words applied to a weight-zero highest-weight vector."""
    out: Dict[Tuple[int, ...], Rat] = {}
    for word, c in vec.items():
        for p, j in enumerate(word):
            if j != i:
                continue
            # h_i moved to the right past the remaining f's, then kills the vector
            shift = -sum(dat.a[i][k] for k in word[p + 1:])
            if shift == 0:
                continue
            key = word[:p] + word[p + 1:]
            out[key] = out.get(key, ZERO) + c * shift
    return {k: v for k, v in out.items() if v}


def _nested_words(seq: Sequence[int]) -> Dict[Tuple[int, ...], Rat]:
    """[x_s1, [x_s2, ... x_sl]] expanded into words."""
    vec = {(seq[-1],): ONE}
    for i in reversed(seq[:-1]):
        out: Dict[Tuple[int, ...], Rat] = {}
        for w, c in vec.items():
            out[(i,) + w] = out.get((i,) + w, ZERO) + c
            out[w + (i,)] = out.get(w + (i,), ZERO) - c
        vec = {k: v for k, v in out.items() if v}
    return vec


def root_vector_pairing(dat: CartanDatum, e_seq: Sequence[int], f_seq: Sequence[int]) -> Rat:
    """Invariant form (E, F) for nested commutators E of e's and F of f's,
    normalised by (e_i, f_j) = delta_ij / d_i."""
    if len(e_seq) != len(f_seq):
        return ZERO
    vec = _nested_words(f_seq)
    # ([e_i, X], G) = -(X, [e_i, G])
    sign = ONE
    for i in e_seq[:-1]:
        vec = _raise_lowering_word(dat, i, vec)
        sign = -sign
    last = e_seq[-1]
    return sign * vec.get((last,), ZERO) / dat.d[last]


def root_vector_normalisation(dat: CartanDatum, beta: RootVec) -> Tuple[Tuple[int, ...], Rat]:
    """(sequence, c) such that E_beta = nested(seq) over E_j^(1) and
    F_beta = c * nested(seq) over F_j^(1) are dual: (E_beta, F_beta) = 1.

    F_j^(1) pairs with E_j^(1) to 1, so it is d_j f_j in Chevalley terms; the
    nested f-word pairing picks up prod d_j over the sequence.
    """
    seq = pbw_decomposition(dat, beta)
    raw = root_vector_pairing(dat, seq, seq)
    for j in seq:
        raw *= dat.d[j]
    if raw == 0:
        raise CartanError(f"degenerate root vector pairing for {beta}")
    return seq, ONE / raw
