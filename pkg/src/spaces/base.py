"""
Abstract space model: a combinatorial description of a local homeomorphism ψ: Y → X.
Concrete models live in the sibling modules; operations over models live in operations.py.
"""
import logging
from abc import ABC, abstractmethod
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.stats import qmc

from src.errors import BranchLookupError, DomainError, ParameterError
from src.spaces.types import (
    ApproachDirection,
    BasePoint,
    BranchClass,
    Chart,
    ChartId,
    PointRef,
    StratumEnd,
    reduce_periodic,
)

logger = logging.getLogger(__name__)


def quasi_uniform(n: int, dim: int, seed: int) -> np.ndarray:
    """Returns an (n, dim) array of scrambled Halton points in [0, 1)^dim."""
    if n <= 0:
        return np.zeros((0, dim))
    sampler = qmc.Halton(d=dim, scramble=True, seed=seed)
    return sampler.random(n)


def open_unit(values: np.ndarray, margin: float = 1e-6) -> np.ndarray:
    """Pushes samples off the endpoints of [0, 1] so they stay inside open strata."""
    return np.clip(values, margin, 1.0 - margin)


class SpaceModel(ABC):
    """Immutable after construction; every method is a pure function of its arguments."""

    kind: str = "abstract"

    def __init__(self, charts: Sequence[Chart], branch_classes: Sequence[BranchClass] = ()):
        ids = [c.id for c in charts]
        if len(set(ids)) != len(ids):
            raise ValueError(f"Chart ids must be unique, got {ids}.")
        self._charts: Tuple[Chart, ...] = tuple(charts)
        self._by_id: Dict[ChartId, Chart] = {c.id: c for c in charts}
        self._branch_classes: Tuple[BranchClass, ...] = tuple(branch_classes)

    # --- descriptors ---
    @property
    def charts(self) -> Tuple[Chart, ...]:
        return self._charts

    @property
    def branch_classes(self) -> Tuple[BranchClass, ...]:
        return self._branch_classes

    def chart(self, chart_id: ChartId) -> Chart:
        try:
            return self._by_id[chart_id]
        except KeyError:
            raise DomainError(f"Chart {chart_id} is not part of the {self.kind} model.") from None

    def describe(self) -> dict:
        return {
            "kind": self.kind,
            "charts": [{"id": c.id, "name": c.name, "type": c.type} for c in self.charts],
            "branch_classes": [sorted(b.labels) for b in self.branch_classes],
        }

    # --- the map ψ ---
    @abstractmethod
    def base_of(self, y: PointRef) -> BasePoint:
        """ψ(y). Raises DomainError if y is not a point of a chart."""

    @abstractmethod
    def fiber(self, x: BasePoint) -> List[PointRef]:
        """ψ⁻¹(x) in any order. Raises DomainError if x is not a point of X."""

    # --- sampling ---
    @abstractmethod
    def sample_bases(self, n: int, seed: int = 0) -> List[BasePoint]:
        """n quasi-uniform generic base points (off every distinguished stratum)."""

    def strata(self) -> List[BasePoint]:
        """Distinguished base points that every sample set must contain."""
        return []

    # --- stratification and branch data ---
    def stratum_ends(self) -> List[StratumEnd]:
        return []

    def point_labels(self) -> frozenset:
        """Labels of zero-dimensional strata."""
        return frozenset()

    def approach_directions(self, branch: BranchClass, anchor: Optional[float] = None) -> List[ApproachDirection]:
        return []

    def max_approach_distance(self) -> float:
        return 0.25

    def find_branch_class(self, key: Union[str, BranchClass, Iterable[str]]) -> BranchClass:
        if isinstance(key, BranchClass):
            key = key.name
        for branch in self.branch_classes:
            if isinstance(key, str):
                if branch.name == key:
                    return branch
            elif branch.labels == frozenset(key):
                return branch
        raise BranchLookupError(f"No branch class {key!r} in the {self.kind} model.")

    def factor_charts(self, side: str) -> frozenset:
        raise ParameterError(f"The {self.kind} model is not a wedge; it has no '{side}' factor.")

    def factor_branch_classes(self, side: str) -> List[BranchClass]:
        raise ParameterError(f"The {self.kind} model is not a wedge; it has no '{side}' factor.")

    # --- helpers shared by the concrete models ---
    def _require_chart(self, y: PointRef, expected_type: Optional[str] = None) -> Chart:
        chart = self.chart(y.chart)
        if expected_type is not None and chart.type != expected_type:
            raise DomainError(f"Point {y} does not belong to a {expected_type} chart.")
        return chart

    def _periodic(self, chart: Chart, value: float) -> float:
        return reduce_periodic(value, chart.period) if chart.period else value
