"""q-cyclotomic cosets modulo n = (q^m + 1) / lambda and the brute-force
leader oracles everything else is checked against."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np
from sympy import factorint

DEFAULT_SIEVE_BUDGET = 10 ** 7


class BudgetExceeded(RuntimeError):
    pass


@lru_cache(maxsize=None)
def prime_power(q):
    """Return (p, s) with q = p^s, or raise ValueError."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"q must be a prime power >= 2, got {q!r}")
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"q = {q} is not a prime power")
    ((p, s),) = f.items()
    return int(p), int(s)


@dataclass(frozen=True)
class CosetParams:
    """Length n = (q^m + 1) / lam with lam a positive divisor of q + 1."""

    q: int
    m: int
    lam: int = 1

    def __post_init__(self):
        prime_power(self.q)
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.lam < 1 or (self.q + 1) % self.lam:
            raise ValueError(f"lambda = {self.lam} does not divide q + 1 = {self.q + 1}")
        if (self.q ** self.m + 1) % self.lam:
            raise ValueError(f"lambda = {self.lam} does not divide q^m + 1 for m = {self.m}")

    @property
    def n(self):
        return (self.q ** self.m + 1) // self.lam

    @property
    def p(self):
        return prime_power(self.q)[0]

    @property
    def s(self):
        return prime_power(self.q)[1]

    def __str__(self):
        return f"(q={self.q}, m={self.m}, lambda={self.lam}, n={self.n})"


@dataclass(frozen=True)
class Coset:
    n: int
    q: int
    elements: tuple

    @property
    def leader(self):
        return self.elements[0]

    @property
    def size(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements


def orbit(n, q, s):
    """Elements s, sq, sq^2, ... (mod n) in iteration order."""
    out = []
    seen = set()
    x = s % n
    while x not in seen:
        seen.add(x)
        out.append(x)
        x = x * q % n
    return out


def coset_mod(n, q, s):
    if not 0 <= s < n:
        raise ValueError(f"residue {s} outside [0, {n})")
    return Coset(n, q, tuple(sorted(orbit(n, q, s))))


def coset(params, s):
    return coset_mod(params.n, params.q, s)


def ord(n, q):
    """Multiplicative order of q modulo n, by iteration."""
    if gcd(n, q) != 1:
        raise ValueError(f"gcd({n}, {q}) != 1")
    if n == 1:
        return 1
    k, x = 1, q % n
    while x != 1:
        x = x * q % n
        k += 1
    return k


def is_leader_mod(n, q, a):
    if not 0 <= a < n:
        raise ValueError(f"residue {a} outside [0, {n})")
    x = a * q % n
    while x != a:
        if x < a:
            return False
        x = x * q % n
    return True


def is_leader(params, a):
    return is_leader_mod(params.n, params.q, a)


# ---------------------------------------------------------------------------
# sieve

@dataclass(frozen=True, eq=False)
class LeaderTable:
    """For every residue s mod n: CL(s) and |C_s|."""

    n: int
    q: int
    leader_of: np.ndarray
    size_of: np.ndarray

    def is_leader(self, a):
        return int(self.leader_of[a]) == a

    def leaders(self):
        return np.flatnonzero(self.leader_of == np.arange(self.n))

    def size(self, a):
        return int(self.size_of[a])


def sieve_mod(n, q, budget=DEFAULT_SIEVE_BUDGET, chunk=1 << 20):
    """Leader and coset size of every residue mod n.

    Each residue is compared against all of its q-power images, in chunks, so
    the result does not depend on the chunk size.
    """
    if n > budget:
        raise BudgetExceeded(f"n = {n} exceeds the sieve budget {budget}")
    if n >= 1 << 31:
        raise BudgetExceeded("n too large for 64-bit sieve products")
    L = ord(n, q)
    mults = [pow(q, k, n) for k in range(1, L)]
    leader_of = np.empty(n, dtype=np.int64)
    size_of = np.empty(n, dtype=np.int32)
    for start in range(0, n, chunk):
        s = np.arange(start, min(n, start + chunk), dtype=np.int64)
        best = s.copy()
        size = np.zeros(len(s), dtype=np.int32)
        for k, c in enumerate(mults, start=1):
            y = s * c % n
            np.minimum(best, y, out=best)
            size[(size == 0) & (y == s)] = k
        size[size == 0] = L
        leader_of[start:start + len(s)] = best
        size_of[start:start + len(s)] = size
    return LeaderTable(n, q, leader_of, size_of)


def sieve(params, budget=DEFAULT_SIEVE_BUDGET):
    return sieve_mod(params.n, params.q, budget)


def all_leaders(params, budget=DEFAULT_SIEVE_BUDGET):
    """Sorted [(leader, coset size)] over all cosets mod n."""
    table = sieve(params, budget)
    return [(int(a), table.size(int(a))) for a in table.leaders()]


def largest_leaders(params, count, budget=DEFAULT_SIEVE_BUDGET, table=None):
    """[(delta_1, size), ..., (delta_count, size)] in descending order."""
    if table is None:
        table = sieve(params, budget)
    leaders = table.leaders()
    if count > len(leaders):
        raise ValueError(f"only {len(leaders)} coset leaders mod {params.n}, asked for {count}")
    top = leaders[::-1][:count]
    return [(int(a), table.size(int(a))) for a in top]


def largest_odd_leaders(params, count, budget=DEFAULT_SIEVE_BUDGET, table=None):
    if table is None:
        table = sieve(params, budget)
    leaders = [int(a) for a in table.leaders()[::-1] if a % 2]
    if count > len(leaders):
        raise ValueError(f"only {len(leaders)} odd coset leaders mod {params.n}")
    return [(a, table.size(a)) for a in leaders[:count]]
