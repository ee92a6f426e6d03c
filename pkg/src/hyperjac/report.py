"""Differential self-test and benchmark drivers behind ``hyperjac selftest|bench``.

Both walk g = 1..genus_max, draw one random curve per genus and a stream of
random divisor pairs from a single SplitMix64 seed, and run every pair through
the explicit law and Cantor's algorithm.  Reports are plain dicts that
serialize to the versioned JSON documents described by the schemas below.
"""

from __future__ import annotations

import math
import statistics
import time
from collections import Counter
from dataclasses import dataclass, field

from . import grouplaw
from .cantor import cantor_add
from .curve import random_curve
from .errors import DegenerateError
from .field import PrimeField
from .mumford import MumfordDivisor, random_divisor
from .rng import SplitMix64

SCHEMA_VERSION = 1

_COUNTS = {
    "type": "object",
    "required": ["ok", "degenerate", "oracle-mismatch"],
    "properties": {k: {"type": "integer", "minimum": 0}
                   for k in ("ok", "degenerate", "oracle-mismatch")},
}

SELFTEST_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "kind", "modulus", "seed", "genus_max", "trials",
                 "mismatches", "genera", "trial_log"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "kind": {"const": "selftest"},
        "modulus": {"type": "integer"},
        "seed": {"type": "integer"},
        "genus_max": {"type": "integer", "minimum": 1},
        "trials": {"type": "integer", "minimum": 1},
        "mismatches": {"type": "integer", "minimum": 0},
        "genera": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["genus", "f", "counts", "degenerate_by_error",
                             "degenerate_by_stage", "degeneracy_rate", "subgeneric"],
                "properties": {
                    "genus": {"type": "integer", "minimum": 1},
                    "f": {"type": "array", "items": {"type": "integer"}},
                    "counts": _COUNTS,
                    "degenerate_by_error": {"type": "object",
                                            "additionalProperties": {"type": "integer"}},
                    "degenerate_by_stage": {"type": "object",
                                            "additionalProperties": {"type": "integer"}},
                    "degeneracy_rate": {"type": "number", "minimum": 0, "maximum": 1},
                    "subgeneric": {"type": "integer", "minimum": 0},
                },
            },
        },
        "trial_log": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["genus", "trial", "seeds", "outcome", "explicit_ns", "cantor_ns"],
                "properties": {
                    "genus": {"type": "integer"},
                    "trial": {"type": "integer"},
                    "seeds": {"type": "array", "items": {"type": "integer"},
                              "minItems": 2, "maxItems": 2},
                    "outcome": {"type": "string",
                                "pattern": "^(ok|oracle-mismatch|degenerate:[A-Za-z]+)$"},
                    "explicit_ns": {"type": "integer", "minimum": 0},
                    "cantor_ns": {"type": "integer", "minimum": 0},
                },
            },
        },
    },
}

_TIMING = {"type": ["integer", "null"], "minimum": 0}

BENCH_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "kind", "modulus", "seed", "genus_max", "trials", "rows"],
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "kind": {"const": "bench"},
        "modulus": {"type": "integer"},
        "seed": {"type": "integer"},
        "genus_max": {"type": "integer", "minimum": 1},
        "trials": {"type": "integer", "minimum": 1},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["genus", "explicit_ok", "degenerate", "oracle-mismatch",
                             "explicit_median_ns", "explicit_p90_ns", "cantor_median_ns",
                             "cantor_p90_ns"],
                "properties": {
                    "genus": {"type": "integer", "minimum": 1},
                    "explicit_ok": {"type": "integer", "minimum": 0},
                    "degenerate": {"type": "integer", "minimum": 0},
                    "oracle-mismatch": {"type": "integer", "minimum": 0},
                    "explicit_median_ns": _TIMING,
                    "explicit_p90_ns": _TIMING,
                    "cantor_median_ns": _TIMING,
                    "cantor_p90_ns": _TIMING,
                },
            },
        },
    },
}


@dataclass
class Trial:
    genus: int
    trial: int
    seeds: tuple[int, int]
    outcome: str
    explicit_ns: int
    cantor_ns: int
    stage: str | None = None


@dataclass
class RunReport:
    modulus: int
    seed: int
    genus_max: int
    trials: int
    curves: dict[int, list[int]] = field(default_factory=dict)
    log: list[Trial] = field(default_factory=list)

    @property
    def mismatches(self) -> int:
        return sum(t.outcome == "oracle-mismatch" for t in self.log)

    def for_genus(self, g: int) -> list[Trial]:
        return [t for t in self.log if t.genus == g]

    def degeneracy_rate(self, g: int) -> float:
        trials = self.for_genus(g)
        return sum(t.outcome.startswith("degenerate") for t in trials) / len(trials)

    def to_json(self) -> dict:
        genera = []
        for g in range(1, self.genus_max + 1):
            trials = self.for_genus(g)
            degenerate = [t for t in trials if t.outcome.startswith("degenerate")]
            genera.append({
                "genus": g,
                "f": self.curves[g],
                "counts": {
                    "ok": sum(t.outcome == "ok" for t in trials),
                    "degenerate": len(degenerate),
                    "oracle-mismatch": sum(t.outcome == "oracle-mismatch" for t in trials),
                },
                "degenerate_by_error": dict(Counter(t.outcome.split(":", 1)[1] for t in degenerate)),
                "degenerate_by_stage": dict(Counter(t.stage for t in degenerate)),
                "degeneracy_rate": len(degenerate) / len(trials),
                "subgeneric": sum(t.stage == "subgeneric" for t in trials),
            })
        return {
            "schema": SCHEMA_VERSION,
            "kind": "selftest",
            "modulus": self.modulus,
            "seed": self.seed,
            "genus_max": self.genus_max,
            "trials": self.trials,
            "mismatches": self.mismatches,
            "genera": genera,
            "trial_log": [{"genus": t.genus, "trial": t.trial, "seeds": list(t.seeds),
                           "outcome": t.outcome, "explicit_ns": t.explicit_ns,
                           "cantor_ns": t.cantor_ns} for t in self.log],
        }

    def to_text(self) -> str:
        lines = [f"selftest  p={self.modulus}  seed={self.seed}  trials/genus={self.trials}",
                 f"{'g':>3} {'ok':>6} {'degen':>6} {'mismatch':>8} {'rate':>7}  by error"]
        for g in range(1, self.genus_max + 1):
            trials = self.for_genus(g)
            ok = sum(t.outcome == "ok" for t in trials)
            bad = sum(t.outcome == "oracle-mismatch" for t in trials)
            degen = Counter(t.outcome.split(":", 1)[1] for t in trials
                            if t.outcome.startswith("degenerate"))
            detail = ", ".join(f"{k}={v}" for k, v in sorted(degen.items())) or "-"
            lines.append(f"{g:>3} {ok:>6} {sum(degen.values()):>6} {bad:>8} "
                         f"{self.degeneracy_rate(g):>7.2%}  {detail}")
        lines.append(f"mismatches: {self.mismatches}")
        return "\n".join(lines)


def run_trial(D1: MumfordDivisor, D2: MumfordDivisor) -> tuple[str, str | None, int, int]:
    """(outcome, stage, explicit_ns, cantor_ns) for one pair."""
    t0 = time.perf_counter_ns()
    try:
        explicit = grouplaw.add(D1, D2)
        err = None
    except DegenerateError as exc:
        explicit = None
        err = exc
    t1 = time.perf_counter_ns()
    oracle = cantor_add(D1, D2)
    t2 = time.perf_counter_ns()
    if err is not None:
        stage = "subgeneric" if not isinstance(oracle, MumfordDivisor) else err.stage
        return f"degenerate:{err.tag}", stage, t1 - t0, t2 - t1
    if isinstance(oracle, MumfordDivisor) and oracle == explicit:
        return "ok", None, t1 - t0, t2 - t1
    return "oracle-mismatch", None, t1 - t0, t2 - t1


def _pairs(field_: PrimeField, genus_max: int, trials: int, seed: int):
    master = SplitMix64(seed)
    for g in range(1, genus_max + 1):
        curve = random_curve(field_, g, master.next_u64())
        yield g, curve, None, None, None
        for t in range(trials):
            s1, s2 = master.next_u64(), master.next_u64()
            yield g, curve, t, s1, s2


def selftest(genus_max: int = 8, trials: int = 200, seed: int = 0,
             modulus: int = 10007) -> RunReport:
    if not 1 <= genus_max <= 12:
        raise ValueError("genus_max must be in [1, 12]")
    if trials < 1:
        raise ValueError("trials must be positive")
    F = PrimeField(modulus)
    report = RunReport(modulus, seed, genus_max, trials)
    for g, curve, t, s1, s2 in _pairs(F, genus_max, trials, seed):
        if t is None:
            report.curves[g] = list(curve.f.coeffs)
            continue
        D1 = random_divisor(curve, s1)
        D2 = random_divisor(curve, s2)
        outcome, stage, ens, cns = run_trial(D1, D2)
        report.log.append(Trial(g, t, (s1, s2), outcome, ens, cns, stage))
    return report


def _p90(xs: list[int]) -> int:
    s = sorted(xs)
    return s[math.ceil(0.9 * len(s)) - 1]


def bench(genus_max: int = 8, trials: int = 100, seed: int = 0, modulus: int = 10007) -> dict:
    """Median and p90 wall time per addition, explicit vs Cantor."""
    if not 1 <= genus_max <= 12:
        raise ValueError("genus_max must be in [1, 12]")
    if trials < 1:
        raise ValueError("trials must be positive")
    F = PrimeField(modulus)
    explicit: dict[int, list[int]] = {}
    oracle: dict[int, list[int]] = {}
    degenerate: Counter[int] = Counter()
    mismatched: Counter[int] = Counter()
    for g, curve, t, s1, s2 in _pairs(F, genus_max, trials, seed):
        if t is None:
            explicit[g], oracle[g] = [], []
            continue
        D1 = random_divisor(curve, s1)
        D2 = random_divisor(curve, s2)
        outcome, _, ens, cns = run_trial(D1, D2)
        if outcome == "ok":
            explicit[g].append(ens)
        elif outcome == "oracle-mismatch":
            mismatched[g] += 1
        else:
            degenerate[g] += 1
        oracle[g].append(cns)
    rows = []
    for g in range(1, genus_max + 1):
        e, c = explicit[g], oracle[g]
        rows.append({
            "genus": g,
            "explicit_ok": len(e),
            "degenerate": degenerate[g],
            "oracle-mismatch": mismatched[g],
            "explicit_median_ns": int(statistics.median(e)) if e else None,
            "explicit_p90_ns": _p90(e) if e else None,
            "cantor_median_ns": int(statistics.median(c)) if c else None,
            "cantor_p90_ns": _p90(c) if c else None,
        })
    return {"schema": SCHEMA_VERSION, "kind": "bench", "modulus": modulus, "seed": seed,
            "genus_max": genus_max, "trials": trials, "rows": rows}


def bench_text(result: dict) -> str:
    def us(ns):
        return "-" if ns is None else f"{ns / 1000:.1f}"

    lines = [f"bench  p={result['modulus']}  trials/genus={result['trials']}  (microseconds)",
             f"{'g':>3} {'explicit med':>13} {'explicit p90':>13} {'cantor med':>11} {'cantor p90':>11}"]
    for row in result["rows"]:
        lines.append(f"{row['genus']:>3} {us(row['explicit_median_ns']):>13} "
                     f"{us(row['explicit_p90_ns']):>13} {us(row['cantor_median_ns']):>11} "
                     f"{us(row['cantor_p90_ns']):>11}")
    return "\n".join(lines)
