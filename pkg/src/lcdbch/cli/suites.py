"""Oracle sweeps: every closed form and range statement checked against the
brute-force coset sieve over a parameter grid."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np
from sympy import primerange

from ..bch import closed_dimension
from ..cosets import (CosetParams, FAMILIES, NotCovered, RangeClassifier, closed_delta,
                      closed_odd_delta, corollary1_smallest_gap, exception_set,
                      lemma1_is_leader, m2_leader_intervals, sieve, sieve_mod)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    mismatches: list = field(default_factory=list)  # (params..., detail) samples
    n_mismatches: int = 0
    seconds: float = 0.0
    instances: int = 0

    def miss(self, item, keep=20):
        self.n_mismatches += 1
        if len(self.mismatches) < keep:
            self.mismatches.append(item)

    @property
    def ok(self):
        return self.n_mismatches == 0


def prime_powers(limit):
    out = []
    for p in primerange(2, limit + 1):
        x = p
        while x <= limit:
            out.append(x)
            x *= p
    return sorted(out)


def grid(max_n, min_m=1):
    """All (q, m, lam) with lam | q+1, lam | q^m+1 and n = (q^m+1)/lam <= max_n."""
    for q in prime_powers(int(max_n ** 0.5) + 2):
        m = min_m
        while (q ** m + 1) // (q + 1) <= max_n:
            for lam in range(1, q + 2):
                if (q + 1) % lam == 0 and (q ** m + 1) % lam == 0 and (q ** m + 1) // lam <= max_n:
                    yield q, m, lam
            m += 1


class _Tables:
    """Sieve cache, so that suites sharing parameters sieve once."""

    def __init__(self):
        self._cache = {}

    def __call__(self, q, m, lam):
        key = (q, m, lam)
        if key not in self._cache:
            if len(self._cache) > 8:
                self._cache.clear()
            self._cache[key] = sieve(CosetParams(q, m, lam), budget=10 ** 7)
        return self._cache[key]


def _timed(fn):
    def run(*args, **kw):
        t = time.perf_counter()
        res = fn(*args, **kw)
        res.seconds = time.perf_counter() - t
        return res
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


@_timed
def closed_leader_suite(max_n=10 ** 6, extra=(), tables=None):
    """closed_delta (and the m = 2 intervals, and the odd-leader forms) vs the sieve."""
    tables = tables or _Tables()
    res = SuiteResult("closed-form leaders")
    cases = list(dict.fromkeys(list(grid(max_n, 2)) + list(extra)))
    for q, m, lam in cases:
        try:
            closed_delta(q, m, lam, 1)
        except NotCovered:
            covered = False
        else:
            covered = True
        odd_cover = lam == 1 and q % 2 and (q ** m) % 4 == 1
        if not covered and not odd_cover:
            continue
        table = tables(q, m, lam)
        leaders = table.leaders()[::-1]
        res.instances += 1
        i = 1
        while covered:
            try:
                r = closed_delta(q, m, lam, i)
            except NotCovered:
                break
            res.checks += 1
            want = int(leaders[i - 1]) if i <= len(leaders) else None
            if r.value != want or table.size(r.value) != r.coset_size:
                res.miss((q, m, lam, i, r.value, want))
            i += 1
        if lam == 1 and m == 2:
            got = m2_leader_intervals(q).leaders()
            want = [(int(a), table.size(int(a))) for a in table.leaders() if a]
            res.checks += 1
            if got != want:
                res.miss((q, m, lam, "m=2 leader list"))
        if odd_cover:
            odd = [int(a) for a in leaders if a % 2][:2]
            for i in (1, 2):
                r = closed_odd_delta(q, m, i)
                res.checks += 1
                if r.value != odd[i - 1] or table.size(r.value) != r.coset_size:
                    res.miss((q, m, lam, f"odd {i}", r.value, odd[i - 1]))
    return res


@_timed
def leader_criterion_suite(qs=(2, 3, 4, 5), ms=range(2, 7)):
    """Arithmetic leader criterion vs the sieve, every 0 <= a <= q^m."""
    res = SuiteResult("arithmetic leader criterion")
    for q in qs:
        for m in ms:
            N = q ** m + 1
            table = sieve_mod(N, q)
            res.instances += 1
            for a in range(N):
                res.checks += 1
                if lemma1_is_leader(q, m, a) != table.is_leader(a):
                    res.miss((q, m, a))
    return res


@_timed
def scaling_suite(qs=(3, 5, 7), ms=range(1, 6)):
    """a leader mod (q^m+1)/lam  <=>  lam*a leader mod q^m+1, with equal coset sizes."""
    res = SuiteResult("lambda scaling")
    for q in qs:
        for m in ms:
            N = q ** m + 1
            full = sieve_mod(N, q)
            for lam in range(1, q + 2):
                if (q + 1) % lam or N % lam:
                    continue
                n = N // lam
                part = sieve_mod(n, q)
                a = np.arange(1, n)
                lead_n = part.leader_of[a] == a
                lead_N = full.leader_of[lam * a] == lam * a
                same = (lead_n == lead_N) & (part.size_of[a] == full.size_of[lam * a])
                res.instances += 1
                res.checks += len(a)
                for bad in a[~same]:
                    res.miss((q, m, lam, int(bad)))
    return res


def _family_failures(ex, table, m):
    """Residues in the family window where the oracle contradicts the family."""
    idx = np.arange(ex.lo, ex.hi + 1, dtype=np.int64)
    if ex.coprime:
        idx = idx[idx % ex.q != 0]
    lead = table.leader_of[idx] == idx
    size = table.size_of[idx]
    expected = np.full(len(idx), 2 * m)
    if ex.sizes:
        keys = np.array(sorted(ex.sizes), dtype=np.int64)
        pos = np.searchsorted(idx, keys)
        hit = (pos < len(idx)) & (idx[np.minimum(pos, len(idx) - 1)] == keys)
        expected[pos[hit]] = [ex.sizes[int(k)] for k in keys[hit]]
    member = np.isin(idx, np.array(ex.members, dtype=np.int64))
    if ex.claim == "non-leader":
        member_ok = ~lead
    else:
        member_ok = ~(lead & (size == 2 * m))
    ok = np.where(member, member_ok, lead & (size == expected))
    return len(idx), idx[~ok]


@_timed
def exception_suite(max_n=10 ** 6, tables=None, printed=False):
    """Within each family window: exactly the listed members fail to be (full-size) leaders."""
    tables = tables or _Tables()
    res = SuiteResult("exceptional sets" + (" (printed sets)" if printed else ""))
    for q, m, lam in grid(max_n, 2):
        sets = []
        for fam in FAMILIES:
            try:
                sets.append(exception_set(q, m, lam, fam, printed=printed))
            except NotCovered:
                continue
        gap = None
        try:
            gap = corollary1_smallest_gap(q, m, lam)
        except NotCovered:
            pass
        if not sets and gap is None:
            continue
        table = tables(q, m, lam)
        res.instances += 1
        for ex in sets:
            count, bad = _family_failures(ex, table, m)
            res.checks += count
            for i in bad:
                res.miss((q, m, lam, ex.family, int(i)))
        if gap is not None:
            res.checks += 1
            first = next(i for i in range(1, table.n) if i % q and not table.is_leader(i))
            if first != gap:
                res.miss((q, m, lam, "smallest gap", gap, first))
    return res


@_timed
def classifier_suite(max_n=10 ** 5, tables=None):
    """Range classifier vs the sieve wherever it commits to an answer."""
    tables = tables or _Tables()
    res = SuiteResult("range classifier")
    for q, m, lam in grid(max_n, 2):
        clf = RangeClassifier(q, m, lam)
        if not clf.sets:
            continue
        table = tables(q, m, lam)
        res.instances += 1
        top = max(ex.hi for ex in clf.sets)
        for i in range(0, min(top + 1, table.n)):
            c = clf(i)
            if c.status == "outside-covered-range":
                continue
            res.checks += 1
            lead = table.is_leader(i)
            if (c.status == "leader") != lead or (lead and c.size != table.size(i)):
                res.miss((q, m, lam, i, c.status))
    return res


def _dimension_ranges(q, m, lam, n):
    if lam == 1 and m % 4 == 2:
        lo, hi = 2, n
        try:
            lo = closed_delta(q, m, lam, 4 if q % 2 else 3).value - 1
            hi = closed_delta(q, m, lam, 1).value + 2
        except NotCovered:
            pass
        return range(max(2, lo), min(n, hi) + 1)
    t = (m - 1) // 2 if m % 2 else m // 2
    return range(2, min(n, (2 * q ** (t + 1) + 2 * q) // lam + q + 4) + 1)


@_timed
def dimension_suite(max_n=10 ** 6, printed=False, tables=None):
    """closed_dimension vs coset counting, both b, every covered delta."""
    tables = tables or _Tables()
    res = SuiteResult("closed-form dimensions" + (" (printed windows)" if printed else ""))
    for q, m, lam in grid(max_n, 2):
        n = (q ** m + 1) // lam
        deltas = _dimension_ranges(q, m, lam, n)
        closed = {}
        for d in deltas:
            for b in (0, 1):
                c = closed_dimension(q, m, lam, d, b, printed=printed)
                if c is not None:
                    closed[d, b] = c
        if not closed:
            continue
        table = tables(q, m, lam)
        res.instances += 1
        lead = table.leader_of == np.arange(n)
        sizes = np.where(lead, table.size_of, 0).astype(np.int64)
        sizes[0] = 0
        cum = np.cumsum(sizes)  # cum[x]: points of nonzero cosets with leader <= x
        for (d, b), c in closed.items():
            # narrow-sense code: designed distance d; b = 0 code: designed d + 1
            k = n - int(cum[d - 1]) - (1 - b)
            res.checks += 1
            if k != c:
                res.miss((q, m, lam, d, b, c, k))
    return res
