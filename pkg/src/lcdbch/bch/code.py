"""BCH codes C(n, q, delta, b) of length n = (q^m+1)/lambda: defining sets,
dimensions, generator polynomials, the BCH bound and LCD checks."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import gf
from ..cosets import CosetParams, ord as mult_order, orbit


@dataclass(frozen=True)
class DefiningSet:
    params: CosetParams
    b: int
    designed: int
    elements: frozenset
    cosets: tuple  # sorted leaders of the cosets making up T

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def sorted(self):
        return sorted(self.elements)

    def inverse(self):
        n = self.params.n
        return frozenset((n - t) % n for t in self.elements)


def _check(params, designed, b):
    if b not in (0, 1):
        raise ValueError(f"b must be 0 or 1, got {b}")
    if not 2 <= designed <= params.n:
        raise ValueError(f"designed distance {designed} outside [2, {params.n}]")


def defining_set(params, designed, b):
    """T = union of the cyclotomic cosets of b, b+1, ..., b+designed-2 mod n."""
    _check(params, designed, b)
    n, q = params.n, params.q
    T = set()
    leaders = []
    for i in range(b, b + designed - 1):
        i %= n
        if i in T:
            continue
        orb = orbit(n, q, i)
        T.update(orb)
        leaders.append(min(orb))
    return DefiningSet(params, b, designed, frozenset(T), tuple(sorted(leaders)))


def dimension(params, designed, b):
    return params.n - len(defining_set(params, designed, b))


def bch_bound(T):
    """Longest cyclic run of consecutive exponents in T, plus one.

    Returns n + 1 when T is all of Z_n (the zero code).
    """
    n = T.params.n
    if len(T) == n:
        return n + 1
    mask = np.zeros(n, dtype=bool)
    mask[list(T.elements)] = True
    # rotate so the scan starts just after a gap; then no run wraps around
    gap = int(np.flatnonzero(~mask)[0])
    rolled = np.roll(mask, -(gap + 1))
    best = run = 0
    for v in rolled:
        run = run + 1 if v else 0
        best = max(best, run)
    return best + 1


# ---------------------------------------------------------------------------
# polynomials

@dataclass(frozen=True, eq=False)
class CodeField:
    """GF(q) with its extension GF(q^L) (L = ord_n(q)) and a primitive n-th root."""

    params: CosetParams
    tower: gf.Tower
    beta: int

    @property
    def base(self):
        return self.tower.base


def code_field(params, max_field_size=1 << 63):
    q, n = params.q, params.n
    L = mult_order(n, q)
    if q ** L > max_field_size:
        raise gf_budget_error(params, L)
    base = gf.make_field(params.p, params.s)
    tower = gf.make_tower(base, L)
    beta = gf.nth_root_of_unity(tower.big, n)
    return CodeField(params, tower, beta)


def gf_budget_error(params, L):
    return OverflowError(f"GF({params.q}^{L}) exceeds the field budget")


def generator_polynomial(params, designed, b, field=None):
    """g = product of the distinct minimal polynomials m_i, i in [b, b+designed-2]."""
    T = defining_set(params, designed, b)
    if field is None:
        field = code_field(params)
    F = field.base
    g = [1]
    for leader in T.cosets:
        g = gf.poly_mul(F, g, gf.minimal_polynomial(field.tower, field.beta, leader, params.n))
    return g


def check_polynomial(F, g, n):
    h, r = gf.poly_divmod(F, gf.x_n_minus_1(F, n), g)
    if r:
        raise ArithmeticError("generator polynomial does not divide x^n - 1")
    return h


def generator_matrix(F, g, n):
    """k x n matrix whose row i holds the coefficients of x^i g(x)."""
    k = n - (len(g) - 1)
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i:i + len(g)] = g
    return G


def encode(F, g, message, n):
    k = n - (len(g) - 1)
    if len(message) != k:
        raise ValueError(f"message length {len(message)} != k = {k}")
    c = gf.poly_mul(F, gf.poly_trim(message), g)
    return c + [0] * (n - len(c))


# ---------------------------------------------------------------------------
# linear algebra over GF(q)

def matmul(tables, A, B):
    """A @ B over the field described by ``tables``."""
    F = tables.field
    if F.s == 1:
        return (A @ B) % F.p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for j in range(A.shape[1]):
        out = tables.add[out, tables.mul[A[:, j:j + 1], B[j:j + 1, :]]]
    return out


def rank(tables, M):
    """Row rank by Gaussian elimination with exact field arithmetic."""
    M = np.array(M, dtype=np.int64, copy=True)
    if tables.field.s == 1:
        return _rank_prime(M, tables.field.p)
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = np.flatnonzero(M[r:, c])
        if len(piv) == 0:
            continue
        p = r + int(piv[0])
        M[[r, p]] = M[[p, r]]
        M[r] = tables.mul[tables.inv[M[r, c]], M[r]]
        below = r + 1 + np.flatnonzero(M[r + 1:, c])
        if len(below):
            factors = M[below, c][:, None]  # eliminate: row -= factor * pivot row
            M[below] = tables.add[M[below], tables.neg[tables.mul[factors, M[r][None, :]]]]
        r += 1
    return r


def _rank_prime(M, p):
    M %= p
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = np.flatnonzero(M[r:, c])
        if len(piv) == 0:
            continue
        i = r + int(piv[0])
        M[[r, i]] = M[[i, r]]
        M[r] = M[r] * pow(int(M[r, c]), -1, p) % p
        below = r + 1 + np.flatnonzero(M[r + 1:, c])
        if len(below):
            M[below] = (M[below] - M[below, c][:, None] * M[r][None, :]) % p
        r += 1
    return r


@dataclass(frozen=True)
class LcdCheck:
    lcd: bool
    hull_dim: int
    inverse_closed: bool


def hull_dimension(tables, G):
    """k - rank(G G^T) for a full-rank k x n generator matrix G."""
    G = np.asarray(G, dtype=np.int64)
    if G.shape[0] == 0:
        return 0
    return G.shape[0] - rank(tables, matmul(tables, G, G.T))


def hull_dimension_from_T(T):
    """|-T minus T|: the dual has defining set Z_n minus -T, so the hull has
    defining set T ∪ (Z_n minus -T)."""
    return len(T.inverse() - T.elements)


def check_lcd(params, designed, b, field=None, g=None, tables=None):
    """Combinatorial (T = -T) and linear-algebraic (k - rank G G^T) LCD checks."""
    T = defining_set(params, designed, b)
    inverse_closed = T.inverse() == T.elements
    if g is None:
        g = generator_polynomial(params, designed, b, field)
    if tables is None:
        tables = gf.make_field(params.p, params.s).tables()
    hull = hull_dimension(tables, generator_matrix(tables.field, g, params.n))
    if inverse_closed != (hull == 0) or hull != hull_dimension_from_T(T):
        raise AssertionError(
            f"LCD checks disagree for {params}, designed={designed}, b={b}: "
            f"T=-T is {inverse_closed}, hull dimension {hull}, "
            f"from T: {hull_dimension_from_T(T)}")
    return LcdCheck(hull == 0, hull, inverse_closed)


@dataclass(frozen=True)
class BchReport:
    params: CosetParams
    b: int
    designed: int
    k: int
    bch_bound: int
    distance: object  # wdist.DistanceResult
    lcd: bool
    hull_dim: int
    generator_poly: tuple | None = None
    k_closed_form: int | None = None
    warnings: tuple = ()

    def __post_init__(self):
        if self.lcd != (self.hull_dim == 0):
            raise ValueError("lcd flag inconsistent with hull dimension")
        d = self.distance
        if d is not None and d.exact and d.value < self.bch_bound:
            raise ValueError(f"exact distance {d.value} below the BCH bound {self.bch_bound}")
