"""
Sample-based verification of projections: idempotency, self-adjointness,
the fullness witness and continuity across non-separated points.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, Field

from src.config import ALGEBRA_TOL, CONTINUITY_TOL, DEFAULT_APPROACH_STEPS, DEFAULT_EPS0
from src.errors import ParameterError
from src.conv.element import AlgebraElement
from src.spaces.base import SpaceModel
from src.spaces.operations import approach_sequences
from src.spaces.types import ApproachSequence, BasePoint

logger = logging.getLogger(__name__)

FLAT_TOL = 1e-14


class ContinuityDefect(BaseModel):
    branch_class: str
    direction: str
    defect: float = Field(ge=0.0)


class VerificationReport(BaseModel):
    max_idempotency_defect: float = Field(ge=0.0)
    max_selfadjoint_defect: float = Field(ge=0.0)
    fullness_floor: float = Field(ge=0.0)
    continuity_defects: List[ContinuityDefect] = []
    samples_used: int = Field(gt=0)
    tol: float
    continuity_tol: float = CONTINUITY_TOL
    passed: bool
    failures: List[str] = []

    def to_text(self) -> str:
        lines = [
            f"samples used:            {self.samples_used}",
            f"max idempotency defect:  {self.max_idempotency_defect!r}",
            f"max self-adjoint defect: {self.max_selfadjoint_defect!r}",
            f"fullness floor:          {self.fullness_floor!r}",
        ]
        for c in self.continuity_defects:
            lines.append(f"continuity {c.branch_class} [{c.direction}]: {c.defect!r}")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'} (tol {self.tol!r}, continuity tol {self.continuity_tol!r})")
        lines.extend(f"  - {failure}" for failure in self.failures)
        return "\n".join(lines)


def _measure(p: AlgebraElement, chunk: Sequence[BasePoint]) -> Tuple[float, float, float]:
    idem, sa, floor = 0.0, 0.0, float("inf")
    for x in chunk:
        P = p.evaluate(x)
        idem = max(idem, P.idempotency_defect())
        sa = max(sa, P.selfadjoint_defect())
        floor = min(floor, P.max_abs_entry())
    return idem, sa, floor


def _chunks(samples: Sequence[BasePoint], parts: int) -> List[Sequence[BasePoint]]:
    size = -(-len(samples) // parts)
    return [samples[i:i + size] for i in range(0, len(samples), size)]


def _scan(p: AlgebraElement, samples: Sequence[BasePoint], workers: int) -> Tuple[float, float, float]:
    if not samples:
        raise ParameterError("Verification needs at least one sample.")
    if workers < 1:
        raise ParameterError(f"workers must be >= 1, got {workers}.")
    if workers == 1:
        return _measure(p, samples)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda chunk: _measure(p, chunk), _chunks(samples, workers)))
    return max(r[0] for r in parts), max(r[1] for r in parts), min(r[2] for r in parts)


def extrapolate(values: Sequence[complex]) -> complex:
    """Limit of a geometrically converging sequence, one Aitken step on the last three terms."""
    if len(values) < 3:
        return complex(values[-1])

    def real_limit(a: float, b: float, c: float) -> float:
        d1, d2 = a - b, b - c
        if (abs(d1) <= FLAT_TOL and abs(d2) <= FLAT_TOL) or d2 == 0.0:
            return c
        ratio = d1 / d2
        if ratio <= 1.0:
            return c
        return c - d2 / (ratio - 1.0)

    a, b, c = (complex(v) for v in values[-3:])
    return complex(real_limit(a.real, b.real, c.real), real_limit(a.imag, b.imag, c.imag))


def _sequence_defect(f: AlgebraElement, seq: ApproachSequence) -> float:
    matrices = [f.evaluate(s.base).entries for s in seq.samples]
    limits = seq.samples[-1].limits
    n = len(limits)
    worst = 0.0
    for j in range(n):
        for k in range(n):
            lj, lk = limits[j], limits[k]
            target = 0.0
            if lj is not None and lk is not None:
                bj, bk = f.model.base_of(lj), f.model.base_of(lk)
                if bj == bk:
                    target = f.evaluate(bj).entry(lj, lk)
            limit = extrapolate([m[j, k] for m in matrices])
            worst = max(worst, abs(limit - target))
    return worst


def check_branch_continuity(f: AlgebraElement, seqs: Sequence[ApproachSequence],
                            tol: float = CONTINUITY_TOL) -> List[ContinuityDefect]:
    """One defect per sequence: the largest gap between the extrapolated entries and f at the limit points."""
    defects = []
    for seq in seqs:
        defect = _sequence_defect(f, seq)
        if defect > tol:
            logger.info("continuity defect %.3e into '%s' along %s", defect, seq.target, seq.direction)
        defects.append(ContinuityDefect(branch_class=seq.target, direction=seq.direction, defect=defect))
    return defects


def branch_sequences(model: SpaceModel, n: int = DEFAULT_APPROACH_STEPS,
                     eps0: float = DEFAULT_EPS0) -> List[ApproachSequence]:
    """Approach sequences into every branch class of the model."""
    eps0 = min(eps0, model.max_approach_distance())
    seqs = []
    for branch in model.branch_classes:
        seqs.extend(approach_sequences(model, branch, n, eps0))
    return seqs


def verify_fullness_witness(p: AlgebraElement, samples: Sequence[BasePoint], workers: int = 1) -> float:
    return _scan(p, samples, workers)[2]


def verify_projection(
    p: AlgebraElement,
    samples: Sequence[BasePoint],
    tol: float = ALGEBRA_TOL,
    workers: int = 1,
    sequences: Optional[Sequence[ApproachSequence]] = None,
    continuity_tol: float = CONTINUITY_TOL,
) -> VerificationReport:
    samples = list(samples)
    idem, sa, floor = _scan(p, samples, workers)
    continuity = check_branch_continuity(p, sequences, continuity_tol) if sequences else []

    failures = []
    if idem > tol:
        failures.append(f"p*p != p: idempotency defect {idem:.3e} exceeds {tol:g}")
    if sa > tol:
        failures.append(f"p* != p: self-adjoint defect {sa:.3e} exceeds {tol:g}")
    for c in continuity:
        if c.defect > continuity_tol:
            failures.append(f"discontinuous at '{c.branch_class}' along {c.direction}: {c.defect:.3e}")

    report = VerificationReport(
        max_idempotency_defect=idem,
        max_selfadjoint_defect=sa,
        fullness_floor=floor,
        continuity_defects=continuity,
        samples_used=len(samples),
        tol=tol,
        continuity_tol=continuity_tol,
        passed=not failures,
        failures=failures,
    )
    logger.info("verified %s over %d samples: %s", p.model.kind, len(samples), "pass" if report.passed else "fail")
    return report
