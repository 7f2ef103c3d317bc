"""ReportRecord: a flat, JSON/CSV-serializable view of a BchReport."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field

from .. import gf
from ..bch import BchReport, bch_bound, check_lcd, check_polynomial, closed_dimension, defining_set
from ..bch import code_field, generator_polynomial, hull_dimension_from_T
from ..cosets import CosetParams
from ..wdist import DEFAULT_BUDGET, DistanceResult, min_distance

SCHEMA_KEYS = ("q", "p", "s", "m", "lambda", "n", "b", "designed", "k", "k_closed_form",
               "bch_bound", "distance", "lcd", "hull_dim", "generator_poly", "warnings")
EXTRA_KEYS = ("closed_form_mismatch", "seconds")
METHODS = ("exhaustive", "macwilliams", "bound-only")


@dataclass(frozen=True)
class ReportRecord:
    q: int
    p: int
    s: int
    m: int
    lam: int
    n: int
    b: int
    designed: int
    k: int
    k_closed_form: int | None
    bch_bound: int
    distance: DistanceResult
    lcd: bool
    hull_dim: int
    generator_poly: tuple | None = None
    warnings: tuple = ()
    closed_form_mismatch: bool = False
    seconds: float | None = field(default=None, compare=False)

    @classmethod
    def from_report(cls, r: BchReport, seconds=None):
        P = r.params
        mismatch = r.k_closed_form is not None and r.k_closed_form != r.k
        d = r.distance  # the work counter is not part of the record schema
        dist = DistanceResult(d.value, d.exact, d.method)
        return cls(P.q, P.p, P.s, P.m, P.lam, P.n, r.b, r.designed, r.k, r.k_closed_form,
                   r.bch_bound, dist, r.lcd, r.hull_dim,
                   None if r.generator_poly is None else tuple(r.generator_poly),
                   tuple(r.warnings), mismatch, seconds)

    @property
    def params(self):
        return CosetParams(self.q, self.m, self.lam)

    def label(self):
        d = self.distance
        ds = str(d.value) if d.exact else f">={d.value}"
        return f"[{self.n},{self.k},{ds}]"

    def to_dict(self, stable=False):
        d = self.distance
        out = {
            "q": self.q, "p": self.p, "s": self.s, "m": self.m, "lambda": self.lam,
            "n": self.n, "b": self.b, "designed": self.designed, "k": self.k,
            "k_closed_form": self.k_closed_form, "bch_bound": self.bch_bound,
            "distance": {"value": d.value, "exact": d.exact, "method": d.method},
            "lcd": self.lcd, "hull_dim": self.hull_dim,
            "generator_poly": None if self.generator_poly is None else list(self.generator_poly),
            "warnings": list(self.warnings),
            "closed_form_mismatch": self.closed_form_mismatch,
        }
        if not stable:
            out["seconds"] = self.seconds
        return out

    @classmethod
    def from_dict(cls, d):
        missing = [k for k in SCHEMA_KEYS if k not in d]
        if missing:
            raise ValueError(f"missing keys {missing}")
        dist = d["distance"]
        if dist["method"] not in METHODS:
            raise ValueError(f"unknown distance method {dist['method']!r}")
        gp = d["generator_poly"]
        return cls(d["q"], d["p"], d["s"], d["m"], d["lambda"], d["n"], d["b"], d["designed"],
                   d["k"], d["k_closed_form"], d["bch_bound"],
                   DistanceResult(dist["value"], dist["exact"], dist["method"]),
                   d["lcd"], d["hull_dim"], None if gp is None else tuple(gp),
                   tuple(d["warnings"]), d.get("closed_form_mismatch", False), d.get("seconds"))

    def to_json(self, stable=False):
        return json.dumps(self.to_dict(stable), sort_keys=False)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def text(self):
        d = self.distance
        lines = [
            f"{self.label()} code over GF({self.q}), m={self.m}, lambda={self.lam}, "
            f"b={self.b}, designed distance {self.designed}",
            f"  k = {self.k} (closed form: {self.k_closed_form if self.k_closed_form is not None else 'n/a'})",
            f"  BCH bound = {self.bch_bound}",
            f"  distance = {d.value} ({'exact' if d.exact else 'lower bound'}, {d.method})",
            f"  LCD = {str(self.lcd).lower()}, hull dimension = {self.hull_dim}",
        ]
        if self.generator_poly is not None:
            lines.append(f"  deg g = {len(self.generator_poly) - 1}")
        lines += [f"  warning: {w}" for w in self.warnings]
        return "\n".join(lines)


CSV_FIELDS = ("q", "p", "s", "m", "lambda", "n", "b", "designed", "k", "k_closed_form",
              "bch_bound", "distance_value", "distance_exact", "distance_method", "lcd",
              "hull_dim", "generator_poly", "warnings", "closed_form_mismatch", "seconds")


def _csv_row(rec, stable):
    d = rec.to_dict(stable)
    dist = d.pop("distance")
    d["distance_value"], d["distance_exact"], d["distance_method"] = (
        dist["value"], dist["exact"], dist["method"])
    gp = d["generator_poly"]
    d["generator_poly"] = "" if gp is None else " ".join(map(str, gp))
    d["warnings"] = "; ".join(d["warnings"])
    return d


def records_to_csv(records, stable=False):
    fields = [f for f in CSV_FIELDS if not (stable and f == "seconds")]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow(_csv_row(r, stable))
    return buf.getvalue()


def narrow_sense_delta(designed, b):
    """The closed forms are indexed by the narrow-sense delta: C(delta, 1) and C(delta+1, 0)."""
    delta = designed if b == 1 else designed - 1
    return delta if delta >= 2 else None


def build_report(params, designed, b, distance=False, budget=DEFAULT_BUDGET, poly=True,
                 printed=False):
    """Construct the code and cross-check every route; returns a ReportRecord.

    With ``distance`` False the distance is the BCH bound (method bound-only).
    """
    t0 = time.perf_counter()
    T = defining_set(params, designed, b)
    k = params.n - len(T)
    bound = bch_bound(T)
    warnings = []
    delta = narrow_sense_delta(designed, b)
    kc = None
    if delta is not None:
        kc = closed_dimension(params.q, params.m, params.lam, delta, b, printed=printed)
    if kc is not None and kc != k:
        warnings.append(f"closed-form dimension {kc} differs from coset count {k}")
    g = None
    if poly:
        field = code_field(params)
        g = generator_polynomial(params, designed, b, field)
        if len(g) - 1 != len(T):
            raise AssertionError(f"deg g = {len(g) - 1} but |T| = {len(T)}")
        tables = gf.make_field(params.p, params.s).tables()
        check_polynomial(tables.field, g, params.n)
        lcd = check_lcd(params, designed, b, g=g, tables=tables)
        lcd_flag, hull = lcd.lcd, lcd.hull_dim
    else:
        hull = hull_dimension_from_T(T)
        lcd_flag = hull == 0
    if distance:
        dist = min_distance(params, designed, b, budget=budget)
        if not dist.exact:
            warnings.append(f"distance not enumerated within budget {budget}; BCH bound reported")
    else:
        dist = DistanceResult(bound, False, "bound-only", 0)
    rep = BchReport(params, b, designed, k, bound, dist, lcd_flag, hull,
                    None if g is None else tuple(g), kc, tuple(warnings))
    return ReportRecord.from_report(rep, round(time.perf_counter() - t0, 3))
