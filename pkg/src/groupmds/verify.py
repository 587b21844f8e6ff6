"""Cross-checks between the character-predicted spectrum and the dense
MDS pipeline, packaged so the CLI and the test suite run the same checks.

For a (group, metric) pair of manageable order this builds the full
distance matrix, centers and eigendecomposes it, and then verifies:

* the predicted (eigenvalue, multiplicity) multiset matches the dense
  spectrum after clustering;
* the exact trace identity sum(lambda * mult) = (1/(2|G|)) sum d^2;
* full-rank pseudo-Euclidean reconstruction of the squared distances;
* the isotypic projectors (idempotent, complete, and eigen-consistent
  with the centered kernel).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import numpy as np

from . import characters, dense, groups, metrics, spectral
from .errors import TooLargeError
from .exact import normalize_scalar, scalar_float
from .groups import GroupSpec

DEFAULT_VERIFY_CAP = 720


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    deviation: Optional[float]
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    group: GroupSpec
    metric_kind: str
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> List[str]:
        out = [f"verify {self.group.text} / {self.metric_kind}"]
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            dev = "" if c.deviation is None else f" deviation={c.deviation:.3e}"
            out.append(f"  {c.name}: {status}{dev} ({c.detail})")
        out.append("result: " + ("pass" if self.passed else "FAIL"))
        return out

    def to_json_dict(self) -> dict:
        return {
            "group": self.group.text,
            "metric": self.metric_kind,
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "deviation": c.deviation,
                    "detail": c.detail,
                }
                for c in self.checks
            ],
        }


def spectrum_match_deviation(summary, dec, rel_tol: float = 1e-8):
    """Compare predicted entries against clustered dense eigenvalues.

    Returns (max absolute deviation, ok) where ok also requires every
    multiplicity to match and the dense zero cluster to hold exactly one
    more direction (the centered-away trivial) than the predicted zeros.
    """
    clusters = spectral.cluster_eigenvalues(dec.eigenvalues, rel_tol=rel_tol)
    zero_thr = dec.zero_threshold
    dense_nonzero = [(v, c) for v, c in clusters if abs(v) > zero_thr]
    dense_zero = sum(c for v, c in clusters if abs(v) <= zero_thr)
    predicted = [
        (scalar_float(e.eigenvalue), e.multiplicity) for e in summary.nonzero_entries()
    ]
    predicted.sort(key=lambda t: -t[0])
    dense_nonzero.sort(key=lambda t: -t[0])
    if len(predicted) != len(dense_nonzero):
        return float("inf"), False
    max_dev = 0.0
    ok = True
    for (pv, pm), (dv, dm) in zip(predicted, dense_nonzero):
        max_dev = max(max_dev, abs(pv - dv))
        if pm != dm:
            ok = False
    if dense_zero != summary.zero_multiplicity + 1:
        ok = False
    scale = max((abs(v) for v, _ in predicted), default=1.0)
    if max_dev > rel_tol * max(scale, 1.0):
        ok = False
    return max_dev, ok


def exact_trace_identity(spec: GroupSpec, metric, summary) -> bool:
    """sum(lambda * mult) == (1/(2|G|)) sum_{g,h} d(g,h)^2, both exact."""
    dm = metrics.build_distance_matrix(spec, metric)
    total_sq = int(np.sum(dm.values.astype(np.int64) ** 2))
    rhs = Fraction(total_sq, 2 * spec.order)
    lhs = normalize_scalar(summary.trace())
    return lhs == rhs


def oracle_equivalence_report(
    spec: GroupSpec,
    metric,
    cap: int = DEFAULT_VERIFY_CAP,
    rel_tol: float = 1e-8,
    check_projectors: bool = True,
) -> VerificationReport:
    if spec.order > cap:
        raise TooLargeError(
            f"{spec.text} has order {spec.order}, above the verification cap {cap}", cap=cap
        )
    summary = spectral.spectrum_via_characters(spec, metric)
    dm = metrics.build_distance_matrix(spec, metric)
    kernel = dense.double_center(dm)
    dec = dense.eigendecompose(kernel)
    checks = []

    dev, ok = spectrum_match_deviation(summary, dec, rel_tol=rel_tol)
    checks.append(
        CheckResult(
            "spectrum-match",
            ok,
            dev,
            f"{len(summary.nonzero_entries())} distinct nonzero eigenvalues",
        )
    )

    trace_ok = exact_trace_identity(spec, metric, summary)
    checks.append(
        CheckResult("trace-identity", trace_ok, None, "exact rational equality")
    )

    if dec.nonzero_count():
        emb = dense.full_rank_pseudo_embedding(dec)
        recon = dense.pseudo_distance_sq_matrix(emb)
        target = dm.values.astype(float) ** 2
        rec_dev = float(np.max(np.abs(recon - target)))
    else:
        rec_dev = 0.0
    checks.append(
        CheckResult(
            "reconstruction",
            rec_dev <= 1e-8 * max(1.0, float(np.max(dm.values)) ** 2),
            rec_dev,
            "full-rank pseudo-distances vs squared input distances",
        )
    )

    if check_projectors:
        mu = spectral.mu_from_metric(spec, metric)
        decomp = characters.decompose_class_function(mu.function)
        labels = spectral.projector_labels(spec)
        # Projector assembly is O(|G|^2) per label; past 128 labels check a
        # deterministic sample and skip the completeness sum.
        full_family = len(labels) <= 128
        if not full_family:
            step = max(1, len(labels) // 16)
            labels = labels[::step]
        total = np.zeros((spec.order, spec.order))
        proj_dev = 0.0
        eig_dev = 0.0
        for label in labels:
            proj = spectral.isotypic_projector(spec, label)
            p = proj.matrix
            total += p
            proj_dev = max(proj_dev, float(np.max(np.abs(p @ p - p))))
            if spec.kind == groups.CYCLIC:
                sigma = decomp.coefficients[label % spec.size]
                lam = 0.0 if label == 0 else scalar_float(sigma) * spec.order
            else:
                sigma = decomp.coefficients[label]
                dim = characters.dimension(spec, label)
                lam = (
                    0.0
                    if label == characters.trivial_label(spec)
                    else scalar_float(sigma) * spec.order / dim
                )
            eig_dev = max(eig_dev, float(np.max(np.abs(p @ kernel.matrix - lam * p))))
        scale = max(1.0, float(np.max(np.abs(dec.eigenvalues))) if dec.size else 1.0)
        family = "all labels" if full_family else f"{len(labels)} sampled labels"
        checks.append(
            CheckResult(
                "projector-idempotence", proj_dev <= 1e-8, proj_dev, f"max |P^2 - P|, {family}"
            )
        )
        checks.append(
            CheckResult(
                "projector-eigenrelation",
                eig_dev <= 1e-8 * scale,
                eig_dev,
                f"max |P M - lambda P|, {family}",
            )
        )
        if full_family:
            complete_dev = float(np.max(np.abs(total - np.eye(spec.order))))
            checks.append(
                CheckResult(
                    "projector-completeness",
                    complete_dev <= 1e-8,
                    complete_dev,
                    "max |sum P - I|",
                )
            )

    return VerificationReport(group=spec, metric_kind=summary.metric_kind, checks=tuple(checks))


def report_to_json(report: VerificationReport) -> str:
    return json.dumps(report.to_json_dict(), indent=2) + "\n"
