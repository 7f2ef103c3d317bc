"""The table of reference codes reproduced by ``verify-paper``."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources

D_KINDS = ("exact", "long", "bound", "lower")


@dataclass(frozen=True)
class GoldenCase:
    name: str
    q: int
    m: int
    lam: int
    b: int
    designed: int
    n: int
    k: int
    d: int | None
    d_kind: str  # exact | long (exact only with --long) | bound | lower
    provenance: str  # reported | derived
    source: str
    on_mismatch: str = "fail"  # fail | warn

    def __post_init__(self):
        if (self.q ** self.m + 1) % self.lam or (self.q ** self.m + 1) // self.lam != self.n:
            raise ValueError(f"{self.name}: n = {self.n} is not (q^m+1)/lambda")
        if self.d_kind not in D_KINDS:
            raise ValueError(f"{self.name}: unknown d_kind {self.d_kind!r}")
        if self.on_mismatch not in ("fail", "warn"):
            raise ValueError(f"{self.name}: on_mismatch must be fail or warn")


_INT = ("q", "m", "b", "designed", "n", "k")


def parse_golden(text):
    cases = []
    for row in csv.DictReader(io.StringIO(text)):
        kw = {k: int(row[k]) for k in _INT}
        kw["lam"] = int(row["lambda"])
        kw["d"] = int(row["d"]) if row["d"] else None
        for k in ("name", "d_kind", "provenance", "source", "on_mismatch"):
            kw[k] = row[k]
        cases.append(GoldenCase(**kw))
    return cases


def load_golden(path=None):
    if path is None:
        text = resources.files("lcdbch").joinpath("data/golden.csv").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_golden(text)
