"""Canned reproducible experiment scenarios with CSV/JSON emission."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from .density import a_limit, density_profile, multiplicative_density
from .errors import BoundsExceedX
from .families import AFamily, NormIntervalFamily, PrimePowerFamily
from .fields import NumberField
from .zeta import dedekind_zeta

#: Default tolerances: natural densities converge ~ X^(-1/d), logarithmic
#: ratios only at 1/log x speed.
NATURAL_TOL = 1e-2
LOG_TOL = 5e-2


def _fmt(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, Fraction):
        value = float(value)
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


@dataclass
class ExperimentResult:
    """Result tables of one scenario; every row carries its tolerance."""

    name: str
    params: dict
    columns: tuple[str, ...]
    rows: list[tuple] = dataclass_field(default_factory=list)
    summary: dict = dataclass_field(default_factory=dict)
    verdict: bool = False

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(self.columns)
            for row in self.rows:
                writer.writerow([_fmt(v) for v in row])

    def summary_document(self, config: dict | None = None) -> dict:
        doc = {"scenario": self.name, "parameters": self.params,
               "summary": self.summary, "verdict": self.verdict}
        if config is not None:
            doc["config"] = config
        return doc

    def write_summary(self, path, config: dict | None = None) -> None:
        with open(path, "w") as fh:
            json.dump(self.summary_document(config), fh, indent=2,
                      sort_keys=True, default=_fmt)
            fh.write("\n")


def primepower_free_experiment(K: NumberField, l: int, X: int,
                               n_samples: int = 24) -> ExperimentResult:
    """Density of l-th-power-free ideals against the truncated zeta target."""
    if l < 2:
        raise ValueError("l must be >= 2")
    if X < 10**4:
        raise ValueError("X must be >= 10^4")
    family = PrimePowerFamily(field=K, l=l, truncation=X)
    m_report = density_profile(family, X=X, n_samples=n_samples)
    v_report = m_report.complement()
    zeta_value, zeta_tail = dedekind_zeta(K, float(l), X)
    target = 1.0 / zeta_value
    result = ExperimentResult(
        name="primepower-free",
        params={"field": K.label(), "l": l, "max_norm": X,
                "zeta_truncated": zeta_value, "zeta_tail_bound": zeta_tail,
                "natural_tol": NATURAL_TOL, "log_tol": LOG_TOL},
        columns=("x", "free_count", "total_count", "natural_ratio",
                 "log_ratio", "target", "deviation", "tolerance"))
    for i, x in enumerate(v_report.sample_points):
        nat = float(v_report.natural_ratios[i])
        result.rows.append((x, v_report.member_counts[i],
                            v_report.total_counts[i], nat,
                            v_report.log_ratios[i], target,
                            abs(nat - target), NATURAL_TOL))
    final_nat = float(v_report.natural_ratios[-1])
    final_log = v_report.log_ratios[-1]
    result.summary = {
        "measured_natural": final_nat, "measured_log": final_log,
        "target": target,
        "natural_deviation": abs(final_nat - target),
        "log_deviation": abs(final_log - target)}
    result.verdict = (abs(final_nat - target) <= NATURAL_TOL
                      and abs(final_log - target) <= LOG_TOL)
    return result


def main_theorem_experiment(A: AFamily, X: int = 10**6, k_max: int = 8,
                            r_max: int = 8,
                            n_samples: int = 24) -> ExperimentResult:
    """Compare the three quantities the limit theorem equates.

    Reports the finite-family sequence A_r, the multiplicative densities
    B_k, and the measured logarithmic ratio of M_A, with their pairwise
    deviations.
    """
    K = A.field
    a_seq = a_limit(A, r_max)
    b_states = [multiplicative_density(A, k) for k in range(1, k_max + 1)]
    report = density_profile(A, X=X, n_samples=n_samples)
    a_final = float(a_seq[-1])
    b_final = float(b_states[-1].b_k)
    log_final = report.log_ratios[-1]
    result = ExperimentResult(
        name="main-theorem",
        params={"field": K.label(), "family": A.kind, "max_norm": X,
                "k_max": k_max, "r_max": r_max,
                "natural_tol": NATURAL_TOL, "log_tol": LOG_TOL},
        columns=("index", "a_r", "b_k", "log_ratio_x", "log_ratio"))
    for i in range(max(len(a_seq), len(b_states), len(report.sample_points))):
        result.rows.append((
            i + 1,
            float(a_seq[i]) if i < len(a_seq) else "",
            float(b_states[i].b_k) if i < len(b_states) else "",
            report.sample_points[i] if i < len(report.sample_points) else "",
            report.log_ratios[i] if i < len(report.sample_points) else ""))
    result.summary = {
        "a_r_final": a_final, "b_k_final": b_final,
        "log_ratio_final": log_final,
        "a_vs_b": abs(a_final - b_final),
        "log_vs_a": abs(log_final - a_final)}
    result.verdict = (abs(a_final - b_final) <= NATURAL_TOL
                      and abs(log_final - a_final) <= LOG_TOL)
    return result


def besicovitch_intervals(T0: int, growth: int, depth: int,
                          X: int) -> list[tuple[int, int]]:
    """Rapidly growing norm intervals (T, 2T], T -> T^growth, clipped at X."""
    if T0 > X:
        raise BoundsExceedX(f"T0={T0} exceeds the enumeration bound {X}")
    intervals = []
    T = T0
    for _ in range(depth):
        if T > X:
            break
        intervals.append((T, 2 * T))
        T = T ** growth
    return intervals


def besicovitch_experiment(K: NumberField, T0: int = 10, growth: int = 3,
                           depth: int = 3, X: int = 10**6,
                           n_samples: int = 40) -> ExperimentResult:
    """Oscillating natural ratio versus stable logarithmic ratio.

    Uses a union of rapidly growing norm intervals; the natural ratio of
    M_A oscillates across the sample window while the logarithmic ratio
    varies much less.
    """
    if T0 < 4 or growth < 3 or depth < 1:
        raise ValueError("need T0 >= 4, growth >= 3, depth >= 1")
    intervals = besicovitch_intervals(T0, growth, depth, X)
    family = NormIntervalFamily(field=K, intervals=tuple(intervals),
                                truncation=X)
    report = density_profile(family, X=X, n_samples=n_samples)
    tail = report.tail_start
    nat_tail = [float(r) for r in report.natural_ratios[tail:]]
    log_tail = list(report.log_ratios[tail:])
    oscillation = max(nat_tail) - min(nat_tail)
    log_variation = max(log_tail) - min(log_tail)
    result = ExperimentResult(
        name="besicovitch",
        params={"field": K.label(), "T0": T0, "growth": growth,
                "depth": depth, "max_norm": X,
                "intervals": intervals, "oscillation_threshold": 0.01},
        columns=("x", "multiple_count", "total_count", "natural_ratio",
                 "log_ratio"))
    for i, x in enumerate(report.sample_points):
        result.rows.append((x, report.member_counts[i],
                            report.total_counts[i],
                            float(report.natural_ratios[i]),
                            report.log_ratios[i]))
    result.summary = {
        "natural_oscillation": oscillation,
        "log_variation": log_variation,
        "oscillation_flag": oscillation >= 0.01}
    result.verdict = oscillation >= 0.01 and log_variation < oscillation
    return result
