"""
Derived models over an existing one: closed invariant sub-models (a union of
charts no orbit leaves), and the augmentation Y ⊔ K used when ψ⁻¹(K) is not a
section over a region K.
"""
import logging
from typing import FrozenSet, Iterable, List, Optional, Sequence

from src.errors import DomainError, InvarianceError, ParameterError
from src.spaces.base import SpaceModel
from src.spaces.types import ApproachDirection, BasePoint, BranchClass, Chart, PointRef, StratumEnd

logger = logging.getLogger(__name__)

INVARIANCE_SAMPLES = 256
SECTION = "section"


class SubspaceModel(SpaceModel):
    """The restriction of a model to the charts in `chart_ids`."""

    kind = "subspace"

    def __init__(self, parent: SpaceModel, chart_ids: Iterable[int],
                 branch_classes: Optional[Sequence[BranchClass]] = None, name: str = ""):
        ids = frozenset(chart_ids)
        for chart_id in ids:
            parent.chart(chart_id)
        super().__init__(
            charts=[c for c in parent.charts if c.id in ids],
            branch_classes=parent.branch_classes if branch_classes is None else branch_classes,
        )
        self.parent = parent
        self.chart_ids: FrozenSet[int] = ids
        self.name = name
        self._check_invariant()

    def _check_invariant(self) -> None:
        for x in self.parent.sample_bases(INVARIANCE_SAMPLES) + self.parent.strata():
            members = self.parent.fiber(x)
            inside = sum(1 for y in members if y.chart in self.chart_ids)
            if 0 < inside < len(members):
                raise InvarianceError(
                    f"The orbit over {x} leaves the sub-model {sorted(self.chart_ids)}; it is not invariant."
                )

    def _inside(self, x: BasePoint) -> bool:
        try:
            return self.fiber(x) is not None
        except DomainError:
            return False

    def describe(self) -> dict:
        info = super().describe()
        info.update({"parent": self.parent.kind, "name": self.name})
        return info

    def base_of(self, y: PointRef) -> BasePoint:
        if y.chart not in self.chart_ids:
            raise DomainError(f"Chart {y.chart} is not part of the sub-model.")
        return self.parent.base_of(y)

    def fiber(self, x: BasePoint) -> List[PointRef]:
        members = self.parent.fiber(x)
        inside = [y for y in members if y.chart in self.chart_ids]
        if not inside:
            raise DomainError(f"{x} is not a point of the sub-model.")
        if len(inside) != len(members):
            raise InvarianceError(f"The orbit over {x} leaves the sub-model.")
        return inside

    def sample_bases(self, n: int, seed: int = 0) -> List[BasePoint]:
        """Parent samples that fall into the sub-model, drawing more until n are found."""
        if n <= 0:
            return []
        draw = 2 * n
        for _ in range(7):
            found = [x for x in self.parent.sample_bases(draw, seed) if self._inside(x)]
            if len(found) >= n:
                return found[:n]
            draw *= 2
        if not found:
            raise ParameterError(f"The sub-model {sorted(self.chart_ids)} received no parent samples.")
        return found

    def strata(self) -> List[BasePoint]:
        return [x for x in self.parent.strata() if self._inside(x)]

    def stratum_ends(self) -> List[StratumEnd]:
        return self.parent.stratum_ends()

    def point_labels(self) -> frozenset:
        return self.parent.point_labels()

    def max_approach_distance(self) -> float:
        return self.parent.max_approach_distance()

    def approach_directions(self, branch: BranchClass, anchor: Optional[float] = None) -> List[ApproachDirection]:
        return self.parent.approach_directions(branch, anchor)


class AugmentedModel(SpaceModel):
    """Y ⊔ K with ψ the identity on K; K is a set of whole strata of X given by base label."""

    def __init__(self, base: SpaceModel, region_labels: Iterable[str]):
        self.base = base
        self.region_labels: FrozenSet[str] = frozenset(region_labels)
        self.section = max(c.id for c in base.charts) + 1
        super().__init__(
            charts=list(base.charts) + [Chart(self.section, SECTION, SECTION)],
            branch_classes=base.branch_classes,
        )
        self.kind = f"{base.kind}+section"

    def describe(self) -> dict:
        info = super().describe()
        info.update({"base": self.base.describe(), "section_over": sorted(self.region_labels)})
        return info

    def section_point(self, x: BasePoint) -> PointRef:
        return PointRef(self.section, x.label, x.coord)

    def base_of(self, y: PointRef) -> BasePoint:
        if y.chart != self.section:
            return self.base.base_of(y)
        if y.tag not in self.region_labels:
            raise DomainError(f"{y} is not a point of the section over {sorted(self.region_labels)}.")
        return BasePoint(y.tag, y.coord)

    def fiber(self, x: BasePoint) -> List[PointRef]:
        members = self.base.fiber(x)
        if x.label in self.region_labels:
            members = members + [self.section_point(x)]
        return members

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
            in_region = [x for x in direction.end_bases if x.label in self.region_labels]

            def limit_of(base, y, direction=direction, in_region=in_region):
                if y.chart != self.section:
                    return direction.limit_of(base, y)
                return self.section_point(in_region[0]) if in_region else None

            directions.append(ApproachDirection(
                name=direction.name,
                branch_class=direction.branch_class,
                end_bases=direction.end_bases,
                base_at=direction.base_at,
                limit_of=limit_of,
            ))
        return directions

    def factor_charts(self, side: str) -> frozenset:
        charts = self.base.factor_charts(side)
        over_region = [x for x in self.base.sample_bases(INVARIANCE_SAMPLES) + self.base.strata()
                       if x.label in self.region_labels]
        if over_region and all(y.chart in charts for y in self.base.fiber(over_region[0])):
            charts = charts | {self.section}
        return charts

    def factor_branch_classes(self, side: str) -> List[BranchClass]:
        return self.base.factor_branch_classes(side)
