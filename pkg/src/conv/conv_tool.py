"""
Public API facade for the convolution-algebra package.
It re-exports elements and verifiers and wraps file-level verification in a
status dictionary.
"""
import logging
from typing import Optional

from src.errors import FellLabError, IncompatibilityError
from src.spaces.subspace import SubspaceModel
from src.spaces.types import BasePoint
from .element import AlgebraElement, indicator_projection, same_model
from .element_file import VerifyJob, load_job, parse_job
from .fiber import FiberMatrix
from .region import Region
from .sampling import stratified_samples
from .verify import (
    ContinuityDefect,
    VerificationReport,
    branch_sequences,
    check_branch_continuity,
    extrapolate,
    verify_fullness_witness,
    verify_projection,
)

logger = logging.getLogger(__name__)


def evaluate(f: AlgebraElement, x: BasePoint) -> FiberMatrix:
    return f.evaluate(x)


def convolve(f: AlgebraElement, g: AlgebraElement, x: BasePoint) -> FiberMatrix:
    """(f*g) over the orbit of x, which is the product of the two fiber matrices."""
    if not same_model(f.model, g.model):
        raise IncompatibilityError(f"Cannot convolve elements over '{f.model.kind}' and '{g.model.kind}'.")
    return f.evaluate(x) @ g.evaluate(x)


def adjoint(f: AlgebraElement) -> AlgebraElement:
    return f.adjoint()


def restrict(f: AlgebraElement, sub: SubspaceModel) -> AlgebraElement:
    return f.restrict(sub)


def run_job(job: VerifyJob, workers: int = 1) -> VerificationReport:
    sequences = branch_sequences(job.element.model) if job.continuity else None
    return verify_projection(
        job.element,
        job.samples,
        tol=job.tol,
        workers=workers,
        sequences=sequences,
        continuity_tol=job.continuity_tol,
    )


def _status(report: VerificationReport) -> dict:
    return {
        "status": "success" if report.passed else "failure",
        "message": "projection verified" if report.passed else "; ".join(report.failures),
        "report": report.model_dump(),
    }


def verify_file(path: str, samples: Optional[int] = None, tol: Optional[float] = None, workers: int = 1) -> dict:
    """Loads an element description and verifies it. status: success | failure | error."""
    try:
        return _status(run_job(load_job(path, samples, tol), workers))
    except FellLabError as e:
        return {"status": "error", "message": str(e)}
    except (ValueError, TypeError) as e:
        logger.warning("malformed input: %s", e)
        return {"status": "error", "message": f"Malformed input: {e}"}


def verify_data(data: dict, samples: Optional[int] = None, tol: Optional[float] = None, workers: int = 1) -> dict:
    """Same as verify_file for already decoded JSON."""
    try:
        return _status(run_job(parse_job(data, samples, tol), workers))
    except FellLabError as e:
        return {"status": "error", "message": str(e)}
    except (ValueError, TypeError) as e:
        logger.warning("malformed input: %s", e)
        return {"status": "error", "message": f"Malformed input: {e}"}


__all__ = [
    'AlgebraElement',
    'ContinuityDefect',
    'FiberMatrix',
    'Region',
    'VerificationReport',
    'VerifyJob',
    'adjoint',
    'branch_sequences',
    'check_branch_continuity',
    'convolve',
    'evaluate',
    'extrapolate',
    'indicator_projection',
    'load_job',
    'parse_job',
    'restrict',
    'run_job',
    'stratified_samples',
    'verify_data',
    'verify_file',
    'verify_fullness_witness',
    'verify_projection',
]
