"""Closed-form coset leaders modulo (q^m + 1) / lambda and the arithmetic
leader criteria (direct digit-free characterization, lambda scaling)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import CosetParams, coset_mod, is_leader_mod, prime_power


class NotCovered(LookupError):
    """No closed form is known for the requested parameters."""


@dataclass(frozen=True)
class LeaderFormulaResult:
    value: int
    coset_size: int
    source: str
    applicability: str


def _div(a, b):
    if a % b:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return a // b


def _two_adic_shape(m):
    """Return (r, t) with m = 2^r t + 2^(r-1), r >= 2, t >= 1, or None."""
    v = (m & -m).bit_length() - 1  # 2-adic valuation
    r = v + 1
    odd = m >> v
    if r < 2 or odd < 3:
        return None
    return r, (odd - 1) // 2


def phi(x, q):
    """(q-1)/2 * prod_{j=0..x} (q^(2^j) - 1); odd q."""
    prod = 1
    for j in range(x + 1):
        prod *= q ** (2 ** j) - 1
    return _div((q - 1) * prod, 2)


def phi_prime(x, q):
    """q/2 * prod_{j=0..x} (q^(2^j) - 1); even q."""
    prod = 1
    for j in range(x + 1):
        prod *= q ** (2 ** j) - 1
    return _div(q * prod, 2)


# ---------------------------------------------------------------------------
# m = 2

@dataclass(frozen=True)
class M2Leaders:
    q: int
    intervals: tuple  # inclusive (lo, hi) pairs, coset size 4
    singletons: tuple  # leaders with coset size 1 (besides 0)

    def leaders(self):
        """Nonzero leaders, ascending, with coset sizes."""
        out = [(a, 4) for lo, hi in self.intervals for a in range(lo, hi + 1)]
        out += [(a, 1) for a in self.singletons]
        return sorted(out)


@lru_cache(maxsize=256)
def m2_leader_intervals(q):
    """All nonzero coset leaders modulo q^2 + 1."""
    if q < 2:
        raise ValueError("q must be >= 2")
    prime_power(q)
    if q % 2 == 0:
        top = q // 2 - 1
        singles = ()
    else:
        top = (q - 3) // 2
        singles = ((q * q + 1) // 2,)
    intervals = tuple((l * (q + 1) + 1, (l + 1) * (q - 1)) for l in range(top + 1))
    return M2Leaders(q, intervals, singles)


@lru_cache(maxsize=64)
def _m2_descending(q):
    return tuple(m2_leader_intervals(q).leaders()[::-1])


# ---------------------------------------------------------------------------
# largest leaders

@lru_cache(maxsize=4096)
def closed_delta(q, m, lam, i):
    """The i-th largest coset leader modulo (q^m+1)/lam, when a closed form exists."""
    params = CosetParams(q, m, lam)
    n = params.n
    if i < 1:
        raise ValueError("i is 1-based")
    Q = q ** m
    odd_q = q % 2 == 1

    def res(value, size, source):
        return LeaderFormulaResult(value, size, source, f"q={q}, m={m}, lambda={lam}, i={i}")

    if lam == 1:
        if m == 2:
            ls = _m2_descending(q)
            if i <= len(ls):
                src = "m=2 intervals, odd q" if odd_q else "m=2 intervals, even q"
                return res(ls[i - 1][0], ls[i - 1][1], src)
        elif odd_q and m % 2 == 1 and m >= 5 and i <= 4:
            d1 = _div(Q + 1, 2)
            d2 = _div((q - 1) * (Q + 1), 2 * (q + 1))
            d3 = _div((q - 1) * (Q - 2 * q ** (m - 2) - 1), 2 * (q + 1))
            d4 = d3 - (q - 1) ** 2
            values = [(d1, 1), (d2, 2), (d3, 2 * m), (d4, 2 * m)]
            return res(*values[i - 1], "odd q, odd m")
        elif odd_q and m % 4 == 2 and m >= 6 and i <= 4:
            if i == 1:
                return res(_div(Q + 1, 2), 1, "odd q, 2-adic m")
            if i == 2:
                return res(_div(n, q * q + 1) * phi(0, q), 4, "odd q, 2-adic m")
            d3 = _div((q - 1) ** 2 * (Q - 2 * q ** (m - 4) - 1), 2 * (q * q + 1))
            if i == 3:
                return res(d3, 2 * m, "odd q, m=2 mod 4")
            d4 = d3 - q * (q - 1) ** 2 if m == 6 else d3 - (q - 1) ** 2 * (q * q - 1)
            return res(d4, 2 * m, "odd q, m=2 mod 4")
        elif odd_q and i <= 2 and _two_adic_shape(m):
            r, _ = _two_adic_shape(m)
            if i == 1:
                return res(_div(Q + 1, 2), 1, "odd q, 2-adic m")
            return res(_div(n, q ** (2 ** (r - 1)) + 1) * phi(r - 2, q), 2 ** r, "odd q, 2-adic m")
        elif not odd_q and m % 4 == 2 and m >= 6 and i <= 3:
            d1 = _div(q * (q - 1) * (Q + 1), 2 * (q * q + 1))
            if i == 1:
                return res(d1, 4, "even q, m=2 mod 4")
            d2 = _div(q * (q - 1) * (Q - 2 * q ** (m - 4) - 1), 2 * (q * q + 1))
            if i == 2:
                return res(d2, 2 * m, "even q, m=2 mod 4")
            d3 = d2 - (q - 1) * q * q if m == 6 else d2 - q * (q - 1) * (q * q - 1)
            return res(d3, 2 * m, "even q, m=2 mod 4")
        elif not odd_q and i == 1 and _two_adic_shape(m):
            r, _ = _two_adic_shape(m)
            return res(_div(n, q ** (2 ** (r - 1)) + 1) * phi_prime(r - 2, q), 2 ** r, "even q, 2-adic m")
    elif lam == 2 and odd_q:
        if m % 4 == 2 and m >= 6 and i <= 2:
            if i == 1:
                return res(_div((q - 1) ** 2 * (Q + 1), 4 * (q * q + 1)), 4, "lambda=2, m=2 mod 4")
            return res(_div((q - 1) ** 2 * (Q - 2 * q ** (m - 4) - 1), 4 * (q * q + 1)), 2 * m, "lambda=2, m=2 mod 4")
        if m % 2 == 1 and m >= 3 and q % 4 == 3:
            d1 = _div(Q + 1, 4)
            d2 = _div(Q - 1 - 2 * q ** (m - 1), 4)
            if i == 1:
                return res(d1, 1, "lambda=2, q=3 mod 4, odd m")
            if i == 2:
                return res(d2, 2 * m, "lambda=2, q=3 mod 4, odd m")
            if i == 3 and m >= 5:
                return res(d2 - _div(q - 1, 2), 2 * m, "lambda=2, q=3 mod 4, odd m")
    elif q == 3 and lam == 4 and m % 2 == 1 and m >= 5 and i <= 2:
        d1 = _div(3 ** (m - 1) - 1, 8)
        return res(d1 if i == 1 else d1 - 2, 2 * m, "q=3, lambda=4, odd m")
    raise NotCovered(f"no closed form for delta_{i} with q={q}, m={m}, lambda={lam}")


def closed_odd_delta(q, m, i):
    """i-th largest odd coset leader modulo q^m + 1 (odd q, q^m = 1 mod 4, i <= 2)."""
    Q = q ** m
    if q % 2 == 0 or Q % 4 != 1 or m < 2 or i not in (1, 2):
        raise NotCovered(f"no closed odd leader for q={q}, m={m}, i={i}")
    where = f"q={q}, m={m}, lambda=1, i={i}"
    if i == 1:
        return LeaderFormulaResult(_div(Q + 1, 2), 1, "odd leaders, q^m=1 mod 4", where)
    return LeaderFormulaResult(_div(Q - 1, 2) - q ** (m - 1), 2 * m, "odd leaders, q^m=1 mod 4", where)


# ---------------------------------------------------------------------------
# criteria

def _leader_bound(q, m):
    if q % 2 == 0:
        return (q ** (m + 1) + q) // (2 * (q + 1))
    return (q ** m + 1) // 2


def _l_max(q, i):
    if q % 2 == 0:
        return (q ** i - 1) * q // (2 * (q + 1))
    return (q ** i - 1) // 2


def lemma1_is_leader(q, m, a):
    """Arithmetic leader test modulo q^m + 1.

    a is a leader iff a <= bound and a != l*q^(m-i) + h for every
    1 <= i < m, 1 <= l <= l_max(i) and h strictly between
    -l(q^(m-i)-1)/(q^i+1) and l(q^(m-i)+1)/(q^i-1).  Substituting
    h = a - l*q^(m-i), the h-window is equivalent to
    a(q^i-1) < l(q^m+1) < a(q^i+1), so each i needs one integer-window test.
    """
    prime_power(q)
    N = q ** m + 1
    if not 0 <= a <= q ** m:
        raise ValueError(f"a = {a} outside [0, q^m]")
    if a > _leader_bound(q, m):
        return False
    for i in range(1, m):
        lo = a * (q ** i - 1) // N + 1  # smallest l with l*N > a(q^i-1)
        hi = -(-a * (q ** i + 1) // N) - 1  # largest l with l*N < a(q^i+1)
        hi = min(hi, _l_max(q, i))
        if max(lo, 1) <= hi:
            return False
    return True


def lemma1_is_leader_literal(q, m, a):
    """The same criterion searched literally over (i, l, h); small inputs only."""
    if a > _leader_bound(q, m):
        return False
    for i in range(1, m):
        for l in range(1, _l_max(q, i) + 1):
            h = a - l * q ** (m - i)
            lo = Fraction(-l * (q ** (m - i) - 1), q ** i + 1)
            up = Fraction(l * (q ** (m - i) + 1), q ** i - 1)
            if lo < h < up:
                return False
    return True


@dataclass(frozen=True)
class ScalingCheck:
    leader_mod_n: bool
    leader_mod_full: bool
    size_mod_n: int
    size_mod_full: int

    @property
    def agree(self):
        return self.leader_mod_n == self.leader_mod_full and self.size_mod_n == self.size_mod_full


def lambda_scaling_check(q, m, lam, a):
    """Compare 'a is a leader mod (q^m+1)/lam' with 'lam*a is a leader mod q^m+1'."""
    if q % 2 == 0:
        raise ValueError("the scaling criterion needs odd q")
    params = CosetParams(q, m, lam)
    n, N = params.n, q ** m + 1
    if not 1 <= a <= n - 1:
        raise ValueError(f"a = {a} outside [1, {n - 1}]")
    return ScalingCheck(
        is_leader_mod(n, q, a),
        is_leader_mod(N, q, lam * a),
        coset_mod(n, q, a).size,
        coset_mod(N, q, lam * a).size,
    )


def corollary1_smallest_gap(q, m, lam):
    """Smallest i, not a multiple of q, that is not a leader mod (q^m+1)/lam."""
    if m % 2 == 0 or m < 5 or not 2 <= lam < q + 1 or (q + 1) % lam or q % 2 == 0:
        raise NotCovered(f"outside the domain: q={q}, m={m}, lambda={lam}")
    t = (m - 1) // 2
    if t % 2 == 0:
        return _div(q ** (t + 1) + 1, lam) - q // lam
    return _div(q ** (t + 1) - 1, lam) - (q - 2) // lam
