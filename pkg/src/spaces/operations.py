"""
Operations over space models: orbit resolution, the cover and wedge constructors,
approach sequences into branch classes, and sub-models.
"""
import logging
from dataclasses import replace
from typing import List, Sequence, Union

from src.config import DEFAULT_APPROACH_STEPS, DEFAULT_EPS0
from src.errors import DomainError, ParameterError
from src.spaces.base import SpaceModel
from src.spaces.cover import CoverChart, CoverModel
from src.spaces.subspace import SubspaceModel
from src.spaces.types import (
    ApproachSample,
    ApproachSequence,
    BasePoint,
    BranchClass,
    Orbit,
    PointRef,
    reduce_periodic,
)
from src.spaces.wedge import WedgeModel

logger = logging.getLogger(__name__)


def orbit_over(model: SpaceModel, x: BasePoint) -> Orbit:
    return Orbit.canonical(model.fiber(x), x)


def resolve_orbit(model: SpaceModel, y: PointRef) -> Orbit:
    """The ψ-fiber through y in canonical order."""
    x = model.base_of(y)
    orbit = orbit_over(model, x)
    period = model.chart(y.chart).period
    if period and y.coord:
        y = replace(y, coord=(reduce_periodic(y.coord[0], period),) + y.coord[1:])
    try:
        orbit.index_of(y, period=period)
    except KeyError:
        raise DomainError(f"{y} maps to {x} but is not a point of its fiber.") from None
    return orbit


def build_cover_groupoid(base: SpaceModel, charts: Sequence[CoverChart], coverage_samples: int = 512,
                         seed: int = 0) -> CoverModel:
    return CoverModel(base, charts, coverage_samples=coverage_samples, seed=seed)


def wedge(left: SpaceModel, right: SpaceModel, y_left: PointRef, y_right: PointRef) -> WedgeModel:
    return WedgeModel(left, right, y_left, y_right)


def approach_sequences(
    model: SpaceModel,
    branch_class: Union[str, BranchClass, Sequence[str]],
    n: int = DEFAULT_APPROACH_STEPS,
    eps0: float = DEFAULT_EPS0,
) -> List[ApproachSequence]:
    """One sequence per approach direction, with samples at distances eps0·2^-i, i = 0 … n−1."""
    if n < 2:
        raise ParameterError(f"An approach sequence needs at least 2 samples, got n = {n}.")
    limit = model.max_approach_distance()
    if not 0 < eps0 <= limit:
        raise ParameterError(f"eps0 = {eps0} must lie in (0, {limit}] for the {model.kind} model.")
    branch = model.find_branch_class(branch_class)

    sequences = []
    for direction in model.approach_directions(branch, branch.anchor):
        samples = []
        for i in range(n):
            d = eps0 * 2.0 ** (-i)
            base = direction.base_at(d)
            orbit = orbit_over(model, base)
            limits = tuple(direction.limit_of(base, y) for y in orbit.members)
            samples.append(ApproachSample(d, base, limits))
        sequences.append(ApproachSequence(branch.name, direction.name, tuple(samples)))
    logger.debug("%d approach sequences into '%s' on %s", len(sequences), branch.name, model.kind)
    return sequences


def subspace(model: SpaceModel, chart_ids, name: str = "") -> SubspaceModel:
    return SubspaceModel(model, chart_ids, name=name)


def factor(model: SpaceModel, side: str) -> SubspaceModel:
    """The closed invariant sub-model over one factor of a wedge."""
    return SubspaceModel(
        model,
        model.factor_charts(side),
        branch_classes=model.factor_branch_classes(side),
        name=side,
    )
