"""
Public API facade for the scenario runners: a registry of the named examples and
`run_scenario`, plus a status-dictionary wrapper for the CLI and the server.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Mapping, Optional, Type

from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError

from src.errors import FellLabError, ScenarioError
from .examples import (
    AabAbParams,
    BrokenHeartParams,
    PinchParams,
    TwistedSphereParams,
    WedgeParams,
    run_aab_ab,
    run_broken_heart,
    run_broken_heart_wedge,
    run_pinch,
    run_twisted_sphere,
)
from .report import Check, ScenarioReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Scenario:
    name: str
    params: Type[BaseModel]
    run: Callable[[BaseModel], ScenarioReport]
    summary: str


SCENARIOS: Dict[str, Scenario] = {
    s.name: s for s in (
        Scenario("aab-ab", AabAbParams, run_aab_ab,
                 "aab/ab solenoid: boundary map, K-theory, K-homology, outer-circle projection"),
        Scenario("broken-heart", BrokenHeartParams, run_broken_heart,
                 "broken heart: boundary isomorphism and vanishing K-theory"),
        Scenario("broken-heart-wedge", WedgeParams, run_broken_heart_wedge,
                 "solenoid wedge broken heart: a projection that is not full"),
        Scenario("twisted-sphere", TwistedSphereParams, run_twisted_sphere,
                 "twisted sphere: verification of the full projection"),
        Scenario("pinch", PinchParams, run_pinch,
                 "pinch spaces: K-theory formula against the split extension"),
    )
}


def parse_params(name: str, params: Optional[Mapping[str, object]] = None) -> BaseModel:
    """Raises ScenarioError for an unknown name or out-of-range parameters."""
    try:
        scenario = SCENARIOS[name]
    except KeyError:
        raise ScenarioError(f"Unknown scenario '{name}'; known: {sorted(SCENARIOS)}.") from None
    try:
        return scenario.params.model_validate(dict(params or {}))
    except PydanticValidationError as e:
        raise ScenarioError(f"Invalid parameters for '{name}': {e}") from e


def run_scenario(name: str, params: Optional[Mapping[str, object]] = None) -> ScenarioReport:
    spec = parse_params(name, params)
    logger.info("running scenario %s with %s", name, spec.model_dump())
    report = SCENARIOS[name].run(spec)
    logger.info("scenario %s: %s", name, "pass" if report.passed else "fail")
    return report


def run_example(name: str, params: Optional[Mapping[str, object]] = None) -> dict:
    """status: success | failure | error."""
    try:
        report = run_scenario(name, params)
    except FellLabError as e:
        return {"status": "error", "message": str(e)}
    except (ValueError, TypeError) as e:
        logger.warning("malformed input: %s", e)
        return {"status": "error", "message": f"Malformed input: {e}"}
    failed = [c.name for c in report.checks if not c.passed]
    return {
        "status": "success" if report.passed else "failure",
        "message": f"{name}: all {len(report.checks)} checks passed" if report.passed
        else f"{name}: failed checks {failed}",
        "report": report.to_dict(),
    }


__all__ = [
    'Check',
    'SCENARIOS',
    'Scenario',
    'ScenarioReport',
    'parse_params',
    'run_example',
    'run_scenario',
]
