"""
Cover groupoids: Y = ⊔ⱼ Uⱼ for a finite cover of X by Hausdorff open sets, ψ = id on each Uⱼ.
A point of Uⱼ is PointRef(j, tag=<base label>, coord=<base coordinates>).
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple

from src.errors import CoverageError, DomainError, ValidationError
from src.spaces.arc_graph import ArcGraphModel
from src.spaces.base import SpaceModel
from src.spaces.types import ApproachDirection, BasePoint, BranchClass, Chart, PointRef, StratumEnd

logger = logging.getLogger(__name__)

COVERAGE_SAMPLES = 512


@dataclass(frozen=True)
class CoverChart:
    """
    An open set of X: whole point strata, plus open coordinate intervals of
    one-dimensional strata. An interval (lo, hi) with lo > hi wraps through the
    stratum's period. A None end is open towards that end of the stratum,
    so (None, None) is the whole stratum.
    """
    name: str
    points: FrozenSet[str] = frozenset()
    intervals: Tuple[Tuple[str, Optional[float], Optional[float]], ...] = ()

    def contains(self, x: BasePoint) -> bool:
        if x.label in self.points:
            return True
        if not x.coord:
            return False
        for label, lo, hi in self.intervals:
            if label != x.label:
                continue
            if lo is None and hi is None:
                return True
            c = x.coord[0]
            if lo is None:
                if c < hi:
                    return True
            elif hi is None:
                if c > lo:
                    return True
            elif lo <= hi:
                if lo < c < hi:
                    return True
            elif c > lo or c < hi:
                return True
        return False


class CoverModel(SpaceModel):

    kind = "cover"

    def __init__(self, base: SpaceModel, charts: Sequence[CoverChart], coverage_samples: int = COVERAGE_SAMPLES,
                 seed: int = 0):
        super().__init__(
            charts=[Chart(j, c.name, "interval") for j, c in enumerate(charts)],
            branch_classes=base.branch_classes,
        )
        self.base = base
        self.cover_charts: Tuple[CoverChart, ...] = tuple(charts)
        for chart in self.cover_charts:
            self._check_hausdorff(chart)
        for x in base.sample_bases(coverage_samples, seed) + base.strata():
            if not self._containing(x):
                raise CoverageError(f"Base point {x} is not contained in any chart of the cover.")
        logger.debug("Cover of %s by %d charts", base.kind, len(self.cover_charts))

    def _check_hausdorff(self, chart: CoverChart) -> None:
        for branch in self.base.branch_classes:
            inside = chart.points & branch.labels
            if len(inside) > 1:
                raise ValidationError(
                    f"Chart '{chart.name}' contains the non-separated points {sorted(inside)}; charts must be Hausdorff."
                )

    def _containing(self, x: BasePoint) -> List[int]:
        return [j for j, chart in enumerate(self.cover_charts) if chart.contains(x)]

    def describe(self) -> dict:
        info = super().describe()
        info["base"] = self.base.describe()
        return info

    # --- the map ψ ---
    def base_of(self, y: PointRef) -> BasePoint:
        self.chart(y.chart)
        x = BasePoint(y.tag, y.coord)
        if not self.cover_charts[y.chart].contains(x):
            raise DomainError(f"{x} is outside chart '{self.cover_charts[y.chart].name}'.")
        return x

    def fiber(self, x: BasePoint) -> List[PointRef]:
        charts = self._containing(x)
        if not charts:
            raise DomainError(f"{x} is not covered by any chart.")
        return [PointRef(j, x.label, x.coord) for j in charts]

    # --- everything about X comes from the base ---
    def sample_bases(self, n: int, seed: int = 0) -> List[BasePoint]:
        return self.base.sample_bases(n, seed)

    def strata(self) -> List[BasePoint]:
        return self.base.strata()

    def stratum_ends(self) -> List[StratumEnd]:
        return self.base.stratum_ends()

    def point_labels(self) -> frozenset:
        return self.base.point_labels()

    def max_approach_distance(self) -> float:
        return self.base.max_approach_distance()

    def approach_directions(self, branch: BranchClass, anchor: Optional[float] = None) -> List[ApproachDirection]:
        directions = []
        for direction in self.base.approach_directions(branch, anchor):

            def limit_of(base: BasePoint, y: PointRef, direction=direction) -> Optional[PointRef]:
                chart = self.cover_charts[y.chart]
                for end in direction.end_bases:
                    if chart.contains(end):
                        return PointRef(y.chart, end.label, end.coord)
                return None

            directions.append(ApproachDirection(
                name=direction.name,
                branch_class=direction.branch_class,
                end_bases=direction.end_bases,
                base_at=direction.base_at,
                limit_of=limit_of,
            ))
        return directions


def whole_stratum(label: str) -> Tuple[str, None, None]:
    return (label, None, None)


def near_end(label: str, length: float, end: str, width: float) -> Tuple[str, float, float]:
    """The open piece of a stratum within `width` of one of its ends."""
    if end == "start":
        return (label, 0.0, width)
    return (label, length - width, length)


def star_cover(model: ArcGraphModel, width: float = 0.25) -> List[CoverChart]:
    """One star-shaped neighborhood per vertex (the vertex plus every arc end running into it), then one chart per arc."""
    charts = []
    for vertex in model.vertices:
        pieces = tuple(
            near_end(end.stratum, model.arcs[end.stratum].length, end.end, width)
            for end in model.stratum_ends()
            if vertex in end.points
        )
        charts.append(CoverChart(f"star:{vertex}", frozenset({vertex}), pieces))
    for label in model.arcs:
        charts.append(CoverChart(f"arc:{label}", intervals=(whole_stratum(label),)))
    return charts
