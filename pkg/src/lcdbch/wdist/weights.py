"""Weight enumerators and minimum distances: exhaustive enumeration in
minimal-change order, dual codes, and the MacWilliams transform."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .. import gf
from ..bch import code as bch
from ..cosets import BudgetExceeded

DEFAULT_BUDGET = 10 ** 7
LONG_BUDGET = 5 * 10 ** 7
_BLOCK_CELLS = 1 << 21  # entries of the precomputed codeword block


@dataclass(frozen=True)
class WeightEnumerator:
    n: int
    q: int
    counts: tuple  # A_0, ..., A_n as Python ints

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError("need n + 1 counts")
        if any(c < 0 for c in self.counts):
            raise ValueError("negative weight count")

    @property
    def size(self):
        return sum(self.counts)

    @property
    def dimension(self):
        k, s = 0, 1
        while s < self.size:
            s *= self.q
            k += 1
        if s != self.size:
            raise ValueError(f"{self.size} codewords is not a power of {self.q}")
        return k

    def min_distance(self):
        """Smallest positive weight, or None for the zero code."""
        return next((i for i, c in enumerate(self.counts) if i and c), None)


@dataclass(frozen=True)
class DistanceResult:
    value: int
    exact: bool
    method: str  # "exhaustive" | "macwilliams" | "bound-only"
    work: int = 0


# ---------------------------------------------------------------------------
# enumeration

def _adder(tables):
    """Vectorized field addition on arrays of element indices."""
    F = tables.field
    if F.p == 2:
        return np.bitwise_xor
    if F.s == 1:
        p = F.p
        return lambda a, b: (a + b) % p
    add = tables.add.astype(np.uint16 if F.q > 255 else np.uint8)
    return lambda a, b: add[a, b]


def _dtype(q):
    return np.uint8 if q <= 128 else np.uint16


def _span(rows, tables):
    """All q^r combinations of ``rows`` (r x n), as a (q^r, n) array."""
    q = tables.field.q
    add = _adder(tables)
    dt = _dtype(q)
    block = np.zeros((1, rows.shape[1]), dtype=dt)
    for row in rows:
        multiples = tables.mul[np.arange(q)[:, None], row[None, :]].astype(dt)
        block = add(block[None, :, :], multiples[:, None, :]).reshape(-1, rows.shape[1]).astype(dt)
    return block


def gray_steps(q, r):
    """Modular q-ary Gray code on r digits: yields (position, old, new) per step.

    Starting from the all-zero word, each step changes exactly one digit (by +1
    mod q) and every word in {0..q-1}^r is visited exactly once.
    """
    d = [0] * r
    g = [0] * r
    for _ in range(q ** r - 1):
        j = 0
        while d[j] == q - 1:
            d[j] = 0
            j += 1
        d[j] += 1
        old = g[j]
        g[j] = (old + 1) % q
        yield j, old, g[j]


def _split(q, k, n):
    k1 = 0
    while k1 < k and q ** (k1 + 1) * n <= _BLOCK_CELLS:
        k1 += 1
    return k1


def exhaustive_weight_enumerator(G, tables, budget=DEFAULT_BUDGET):
    """Exact weight distribution of the row space of G (k x n over GF(q)).

    The first k1 rows are expanded into a block of q^k1 codewords; the remaining
    rows are walked in Gray order, so each outer step adds one scalar multiple
    of one generator row to a running offset that is then added to the block.
    """
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    q = tables.field.q
    if q ** k > budget:
        raise BudgetExceeded(f"{q}^{k} codewords exceed the budget {budget}")
    counts = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        counts[0] = 1
        return WeightEnumerator(n, q, tuple(int(c) for c in counts))
    k1 = _split(q, k, n)
    block = _span(G[:k1], tables)
    outer = G[k1:]
    add = _adder(tables)
    sub = tables.sub
    offset = np.zeros(n, dtype=block.dtype)

    def tally():
        words = add(block, offset[None, :]) if offset.any() else block
        counts[:] += np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)

    tally()
    for j, old, new in gray_steps(q, k - k1):
        step = tables.mul[sub[new, old], outer[j]].astype(block.dtype)
        offset = add(offset, step).astype(block.dtype)
        tally()
    return WeightEnumerator(n, q, tuple(int(c) for c in counts))


def iter_codewords(G, tables):
    """Yield (message, codeword) in the same minimal-change order; small codes only."""
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    msg = [0] * k
    word = np.zeros(n, dtype=np.int64)
    yield tuple(msg), word.copy()
    sub = tables.sub
    for j, old, new in gray_steps(tables.field.q, k):
        word = tables.add[word, tables.mul[sub[new, old], G[j]]]
        msg[j] = new
        yield tuple(msg), word.copy()


# ---------------------------------------------------------------------------
# dual codes and MacWilliams

def reciprocal_monic(F, h):
    """x^deg(h) h(1/x), scaled to be monic."""
    h = gf.poly_trim(h)
    r = h[::-1]
    if not r or r[-1] == 0:
        raise ArithmeticError("h(0) = 0; x^n - 1 has no repeated root at 0")
    return gf.poly_scale(F, r, F.inv(r[-1]))


@dataclass(frozen=True, eq=False)
class DualCode:
    G: np.ndarray  # generator matrix of the code
    H: np.ndarray  # generator matrix of the dual
    h: list  # check polynomial (x^n - 1)/g
    dual_generator: list


def dual_code(params, designed, b, field=None, g=None, tables=None):
    """Generator matrices of C and its dual, with G H^T = 0 verified."""
    if g is None:
        g = bch.generator_polynomial(params, designed, b, field)
    if tables is None:
        tables = gf.make_field(params.p, params.s).tables()
    F, n = tables.field, params.n
    h = bch.check_polynomial(F, g, n)
    hr = reciprocal_monic(F, h)
    G = bch.generator_matrix(F, g, n)
    H = bch.generator_matrix(F, hr, n)
    if G.size and H.size and bch.matmul(tables, G, H.T).any():
        raise AssertionError("G H^T != 0: dual construction failed")
    return DualCode(G, H, h, hr)


def krawtchouk(n, q, j, i):
    """K_j(i) = sum_s (-1)^s (q-1)^(j-s) C(i, s) C(n-i, j-s)."""
    return sum((-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s)
               for s in range(min(i, j) + 1))


def macwilliams(dual_we, n, q, dual_dim):
    """Enumerator of C from that of its dual C^perp (of dimension dual_dim)."""
    B = dual_we.counts
    if len(B) != n + 1:
        raise ValueError("enumerator length does not match n")
    if sum(B) != q ** dual_dim:
        raise ValueError(f"dual enumerator has {sum(B)} words, expected {q}^{dual_dim}")
    scale = q ** dual_dim
    support = [i for i, c in enumerate(B) if c]
    out = []
    for j in range(n + 1):
        total = sum(B[i] * krawtchouk(n, q, j, i) for i in support)
        if total % scale or total < 0:
            raise ArithmeticError(f"coefficient A_{j} = {total}/{scale} is not a non-negative integer")
        out.append(total // scale)
    return WeightEnumerator(n, q, tuple(out))


# ---------------------------------------------------------------------------
# dispatcher

def min_distance(params, designed, b, budget=DEFAULT_BUDGET, field=None):
    """Exact distance when q^k or q^(n-k) fits the budget, else the BCH bound."""
    T = bch.defining_set(params, designed, b)
    n, q = params.n, params.q
    k = n - len(T)
    bound = bch.bch_bound(T)
    primal, dual = q ** k, q ** (n - k)
    if min(primal, dual) > budget or k == 0:
        return DistanceResult(bound, False, "bound-only", 0)
    tables = gf.make_field(params.p, params.s).tables()
    g = bch.generator_polynomial(params, designed, b, field)
    if primal <= dual:
        we = exhaustive_weight_enumerator(bch.generator_matrix(tables.field, g, n), tables, budget)
        return DistanceResult(we.min_distance(), True, "exhaustive", primal)
    dc = dual_code(params, designed, b, g=g, tables=tables)
    dual_we = exhaustive_weight_enumerator(dc.H, tables, budget)
    we = macwilliams(dual_we, n, q, n - k)
    return DistanceResult(we.min_distance(), True, "macwilliams", dual)
