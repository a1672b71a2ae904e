"""Cyclicity classification for polynomials without bidisk zeros.

The decision rule, for p with no zeros inside the bidisk:

* alpha <= 1: cyclic regardless of torus zeros;
* 1 < alpha <= 2: cyclic exactly when the torus zero set is empty or finite;
* alpha > 2: cyclic exactly when the torus zero set is empty.

A zero inside the open bidisk always defeats cyclicity.  The rule covers
products through ``product_rule`` (a product is cyclic exactly when every
factor is).  ``corroborate`` runs the full pipeline: zero search, torus
classification, prediction, a distance scan with a decay label, and the
evaluation lower bound when it applies; the report records whether the
empirical label is consistent with the prediction.

The one-variable case follows the same rule: a factor z - a with |a| = 1
has a line of torus zeros (not cyclic once alpha > 1), while |a| > 1 keeps
the torus clear and stays cyclic at every alpha.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional, Sequence

from .approximant import (
    DecayConfig,
    DecayVerdict,
    decay_diagnostic,
    distance_scan,
    evaluation_bound_certificate,
    ScanRow,
)
from .errors import DegenerateInputError
from .poly import Poly2, coeff_norm, poly2_to_json_dict
from .spaces import iso
from .zeroset import (
    BidiskZeroReport,
    GridConfig,
    TolConfig,
    TorusZeroClass,
    bidisk_zero_search,
    torus_zeros,
)

__all__ = [
    "Prediction",
    "predict",
    "product_rule",
    "ClassificationReport",
    "corroborate",
]

# heuristic minimum moduli below this multiple of the certification
# tolerance cannot exclude an interior zero
INCONCLUSIVE_FACTOR = 100.0


@dataclass(frozen=True)
class Prediction:
    verdict: Literal["cyclic", "not_cyclic", "not_applicable"]
    reason: str


def predict(p: Poly2, alpha: float, torus: TorusZeroClass, bidisk: BidiskZeroReport) -> Prediction:
    """Predicted cyclicity of p in the iso(alpha) space."""
    if bidisk.kind == "zero_found":
        return Prediction("not_cyclic", "zero found inside the bidisk")
    floor = max(INCONCLUSIVE_FACTOR * bidisk.grid.resid_tol, 1e-6) * coeff_norm(p)
    if bidisk.min_modulus <= floor:
        return Prediction(
            "not_applicable",
            "bidisk search inconclusive: smallest modulus "
            f"{bidisk.min_modulus:.3e} is within the noise floor {floor:.3e}",
        )
    if alpha <= 1.0:
        return Prediction("cyclic", "no bidisk zero and alpha <= 1")
    if alpha <= 2.0:
        if torus.kind in ("empty", "finite"):
            return Prediction("cyclic", "alpha <= 2 and at most finitely many torus zeros")
        return Prediction("not_cyclic", "infinitely many torus zeros and alpha > 1")
    if torus.kind == "empty":
        return Prediction("cyclic", "alpha > 2 and no torus zeros")
    return Prediction("not_cyclic", "torus zeros defeat cyclicity for alpha > 2")


def product_rule(factors: Sequence[Prediction]) -> Prediction:
    """Combine factor predictions: a product is cyclic iff every factor is."""
    if not factors:
        raise DegenerateInputError("product rule needs at least one factor")
    for f in factors:
        if f.verdict == "not_cyclic":
            return Prediction("not_cyclic", "some factor is not cyclic")
    for f in factors:
        if f.verdict == "not_applicable":
            return Prediction("not_applicable", "some factor could not be classified")
    return Prediction("cyclic", "every factor is cyclic")


@dataclass(frozen=True)
class ClassificationReport:
    p: Poly2
    alpha: float
    bidisk: BidiskZeroReport
    torus: TorusZeroClass
    predicted: Prediction
    empirical: Optional[DecayVerdict]
    certificate: Optional[float]
    consistent: Optional[bool]
    scan: tuple[ScanRow, ...] = ()

    def to_json_dict(self) -> dict:
        emp = None
        if self.empirical is not None:
            emp = {
                "label": self.empirical.label,
                "limit_estimate": self.empirical.limit_estimate,
                "fit_model": self.empirical.fit_model,
                "fit_params": list(self.empirical.fit_params),
                "fit_residual": self.empirical.fit_residual,
            }
        return {
            "polynomial": poly2_to_json_dict(self.p),
            "alpha": self.alpha,
            "bidisk": self.bidisk.to_json_dict(),
            "torus": self.torus.to_json_dict(),
            "predicted": self.predicted.verdict,
            "reason": self.predicted.reason,
            "empirical": emp,
            "certificate": self.certificate,
            "consistent": self.consistent,
            "scan": [
                {
                    "n": r.n,
                    "basis_size": r.basis_size,
                    "distance_sq": r.distance_squared,
                    "distance": r.distance,
                }
                for r in self.scan
            ],
        }


def corroborate(
    p: Poly2,
    alpha: float,
    n_max: int = 40,
    family: Literal["total", "diagonal"] = "total",
    tol: TolConfig = TolConfig(),
    grid: GridConfig = GridConfig(),
    decay: DecayConfig = DecayConfig(),
) -> ClassificationReport:
    """Predict cyclicity and cross-check against the distance sequence.

    The empirical label never overrides the prediction; "consistent" only
    reports whether the two point the same way.  A cyclic prediction is
    contradicted by a plateau, a non-cyclic one by a decaying sequence;
    an inconclusive label is consistent with either.
    """
    bidisk = bidisk_zero_search(p, grid)
    torus = torus_zeros(p, tol)
    prediction = predict(p, alpha, torus, bidisk)

    scan = tuple(distance_scan(p, iso(alpha), n_max, family=family))
    empirical: Optional[DecayVerdict] = None
    if len(scan) >= 8:
        empirical = decay_diagnostic([r.distance_squared for r in scan], decay)

    certificate = None
    if alpha > 2.0 and torus.kind != "empty":
        certificate = evaluation_bound_certificate(alpha)

    consistent: Optional[bool] = None
    if empirical is not None and prediction.verdict != "not_applicable":
        if prediction.verdict == "cyclic":
            consistent = empirical.label != "plateau"
        else:
            consistent = empirical.label != "decaying"

    return ClassificationReport(
        p=p,
        alpha=alpha,
        bidisk=bidisk,
        torus=torus,
        predicted=prediction,
        empirical=empirical,
        certificate=certificate,
        consistent=consistent,
        scan=scan,
    )
