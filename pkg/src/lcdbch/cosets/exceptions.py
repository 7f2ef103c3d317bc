"""Explicit non-leader sets inside the low leader ranges, and a classifier
that dispatches a residue to the range statement covering it."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .closed import NotCovered, m2_leader_intervals
from .core import CosetParams

FAMILIES = ("oddm-top", "oddm-gamma-alpha", "oddm-interval", "evenm-listed", "T", "T-interval",
            "A", "X-ends", "X", "Y", "single", "m2")


@dataclass(frozen=True)
class ExceptionSet:
    """Within [lo, hi] (restricted to i not divisible by q when ``coprime``),
    every i outside ``members`` is a leader of size 2m, or of ``sizes[i]``.

    With ``claim == "non-leader"`` the members are non-leaders.  With
    ``claim == "not-full-size"`` the statement only excludes them from being
    leaders of size 2m (for odd m = 3 the member q^2-q+1 is a leader whose
    coset has size 2).
    """

    family: str
    q: int
    m: int
    lam: int
    lo: int
    hi: int
    coprime: bool
    members: tuple
    parts: dict = field(default_factory=dict)
    sizes: dict = field(default_factory=dict)
    claim: str = "non-leader"

    def window(self):
        return [i for i in range(self.lo, self.hi + 1) if not (self.coprime and i % self.q == 0)]

    def __contains__(self, i):
        return i in self.members


def _div(a, b):
    if a % b:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return a // b


def _odd_t(m, lo):
    if m % 2 == 0 or m < lo:
        return None
    return (m - 1) // 2


@lru_cache(maxsize=1024)
def exception_set(q, m, lam, family, printed=False):
    """Instantiate one family of exceptional residues.

    ``printed=True`` uses the literal q = 3 description of Y1, which
    keeps only c in {-1, 0}; that drops a genuine non-leader when t is
    odd (e.g. i = 41 for q=3, m=7, lambda=4), so the default uses c in
    {-1, 0, 1} clipped to the window, which agrees with the literal set
    whenever t is even.
    """
    params = CosetParams(q, m, lam)
    n = params.n
    odd_q = q % 2 == 1

    def make(lo, hi, coprime, parts, sizes=None, claim="non-leader"):
        members = sorted({x for xs in parts.values() for x in xs if lo <= x <= hi
                          and not (coprime and x % q == 0)})
        parts = {k: tuple(sorted(set(v))) for k, v in parts.items()}
        return ExceptionSet(family, q, m, lam, lo, hi, coprime, tuple(members), parts,
                            sizes or {}, claim)

    def bad():
        return NotCovered(f"family {family!r} does not apply to q={q}, m={m}, lambda={lam}")

    if family == "m2":
        if lam != 1 or m != 2:
            raise bad()
        info = m2_leader_intervals(q)
        leaders = dict(info.leaders())
        non = [i for i in range(1, n) if i not in leaders]
        return make(1, n - 1, False, {"complement": non},
                    {a: s for a, s in leaders.items() if s != 4})

    if family == "oddm-top":
        if lam != 1 or m % 2 == 0 or m < 3:
            raise bad()
        top = q ** ((m + 1) // 2)
        return make(1, top, True, {"top": [top - c for c in range(1, q)]}, claim="not-full-size")

    if family in ("oddm-gamma-alpha", "oddm-interval"):
        t = _odd_t(m, 5)
        if lam != 1 or not odd_q or t is None:
            raise bad()
        Q1, Qt = q ** (t + 1), q ** t
        if family == "oddm-gamma-alpha":
            plus_minus = [Q1 + g for g in range(1, q)] + [Q1 - g for g in range(1, q)]
            alpha = [Q1 + a * Qt + e for a in range(1, q) for e in (1, -1)]
            return make(1, 2 * Q1 - 2 * q, True, {"gamma": plus_minus, "alpha": alpha})
        lo, hi = 2 * Q1 - 2 * q + 1, 2 * Q1 + 2 * q - 1
        return make(lo, hi, False, {"interval": range(lo, hi + 1)})

    if family == "evenm-listed":
        if lam != 1 or not odd_q or m % 2 or m < 4:
            raise bad()
        Qt = q ** (m // 2)
        return make(1, 2 * Qt + 2, True, {"listed": [Qt + 1, 2 * Qt - 1, 2 * Qt + 1, 2 * Qt + 2]})

    if family in ("T", "T-interval"):
        t = _odd_t(m, 5)
        if not odd_q or not 2 <= lam < q + 1 or t is None:
            raise bad()
        low_end = 2 * q ** (t + 1) - 2 * q + 1  # the range is i < low_end / lam
        if family == "T-interval":
            lo = -(-low_end // lam)
            hi = (2 * q ** (t + 1) + 2 * q - 1) // lam
            return make(lo, hi, False, {"interval": range(lo, hi + 1)})
        if t % 2 == 0:
            base, step = _div(q ** (t + 1) + 1, lam), _div(q ** t - 1, lam)
            c_lo, c_hi = -(q // lam), (q - 2) // lam
        else:
            base, step = _div(q ** (t + 1) - 1, lam), _div(q ** t + 1, lam)
            c_lo, c_hi = -((q - 2) // lam), q // lam

        # f for even t, g for odd t: base + a*step + b*q^t + c
        def fg(a, b, c):
            return base + a * step + b * q ** t + c

        parts = {
            "T1": [fg(0, 0, c) for c in range(c_lo, c_hi + 1)],
            "T2": [fg(0, b, 0) for b in range(1, (q - 1) // lam + 1)],
            "T3": [fg(2, b, 0) for b in range((q - 3) // lam + 1)],
        }
        return make(1, (low_end - 1) // lam, True, parts)

    if family == "A":
        if lam != 1 or m % 2 or m < 8:
            raise bad()
        t = m // 2
        Qt = q ** t
        parts = {
            "A1": [at * Qt + a0 for at in range(1, q) for a0 in range(1, at + 1)],
            "A2": [at * Qt - a0 for at in range(1, q) for a0 in range(1, at)],
            "A3": [a for a in range(q ** (t + 1) - q * q + 1, q ** (t + 1) + 1) if a % q],
        }
        return make(Qt, q ** (t + 1), True, parts)

    if family in ("X-ends", "X"):
        if lam != 2 or not odd_q or m % 2 or m < 4:
            raise bad()
        t = m // 2
        Qt = q ** t
        half = (Qt + 1) // 2
        if family == "X-ends":
            return make(half, Qt + 1, True, {"listed": [half, Qt + 1]})
        h = (q - 1) // 2
        parts = {
            "X1": [a * Qt + b for a in range(1, h + 1) for b in range(1, a + 1)],
            "X2": [a * Qt - b for a in range(1, h + 1) for b in range(1, a)],
            "X3": [x for a in range(1, h) for b in range(1, a + 1)
                   for x in (a * Qt + (Qt - 1) // 2 + b, a * Qt + (Qt + 1) // 2 - b)],
            "X4": [a * (Qt + 1) + half for a in range(h)],
            "X5": [i for i in range((q ** (t + 1) - q * q) // 2 + 1, (q ** (t + 1) - 1) // 2 + 1) if i % q],
        }
        return make(half, (q ** (t + 1) - 1) // 2, True, parts)

    if family == "Y":
        t = _odd_t(m, 5)
        if lam != q + 1 or not odd_q or t is None:
            raise bad()
        if t % 2:
            centre, y2 = 2 * _div(q ** (t + 1) - 1, q + 1), _div(q ** (t + 1) + 2 * q ** t + 1, q + 1)
        else:
            centre, y2 = 2 * _div(q ** (t + 1) + 1, q + 1), _div(q ** (t + 1) + 2 * q ** t - 1, q + 1)
        cs = (-1, 0) if q == 3 and printed else (-1, 0, 1)
        parts = {"Y1": [centre + c for c in cs], "Y2": [y2]}
        return make(q ** t + 1, (2 * q ** (t + 1) + 2 * q - 1) // (q + 1), True, parts)

    if family == "single":
        if lam != q + 1 or not odd_q or m % 2 == 0 or m < 3:
            raise bad()
        e = (m + 1) // 2
        a = _div(q ** e - (-1) ** e, q + 1)
        return make(1, q ** ((m - 1) // 2), True, {"single": [a]})

    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def applicable_families(q, m, lam):
    """Families whose hypotheses hold for (q, m, lam), in dispatch order."""
    return [ex.family for ex in _applicable_sets(q, m, lam)]


def _applicable_sets(q, m, lam):
    out = []
    for fam in FAMILIES:
        try:
            out.append(exception_set(q, m, lam, fam))
        except NotCovered:
            continue
    return out


# X is only claimed for m >= 8
_CLASSIFY_SKIP = {"X": lambda q, m, lam: m < 8}


@dataclass(frozen=True)
class Classification:
    status: str  # "leader" | "non-leader" | "outside-covered-range"
    size: int | None = None
    source: str | None = None


class RangeClassifier:
    """Classifies residues for fixed (q, m, lam); builds each family once."""

    def __init__(self, q, m, lam):
        self.params = CosetParams(q, m, lam)
        self.sets = [ex for ex in _applicable_sets(q, m, lam)
                     if not (ex.family in _CLASSIFY_SKIP and _CLASSIFY_SKIP[ex.family](q, m, lam))]
        self._members = [set(ex.members) for ex in self.sets]

    def __call__(self, i):
        q, m = self.params.q, self.params.m
        if not 0 <= i < self.params.n:
            return Classification("outside-covered-range")
        if i == 0:
            return Classification("leader", 1, "zero coset")
        for ex, members in zip(self.sets, self._members):
            if not ex.lo <= i <= ex.hi:
                continue
            if ex.coprime and i % q == 0:
                # i and i/q share a coset and i/q < i
                return Classification("non-leader", None, f"{ex.family}: multiple of q")
            if i in members:
                if ex.claim != "non-leader":
                    return Classification("outside-covered-range", None, ex.family)
                return Classification("non-leader", None, ex.family)
            return Classification("leader", ex.sizes.get(i, 2 * m), ex.family)
        return Classification("outside-covered-range")


def leader_range_classify(q, m, lam, i):
    """Classify residue i modulo (q^m+1)/lam using the range statements only."""
    return RangeClassifier(q, m, lam)(i)
