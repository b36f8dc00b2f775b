"""
Wedge of two models at a pair of points with singleton, non-branching orbits.

Chart ids of the right factor are shifted past the left ones, and the glued point
lives on its own one-point chart. Base labels carry an "L/" or "R/" prefix; the
wedge point is BasePoint("wedge").
"""
import logging
from typing import List, Optional

from src.errors import DomainError, InvalidWedgeError, ParameterError
from src.spaces.base import SpaceModel
from src.spaces.types import ApproachDirection, BasePoint, BranchClass, Chart, PointRef, StratumEnd

logger = logging.getLogger(__name__)

WEDGE = "wedge"
LEFT, RIGHT = "left", "right"
PREFIX = {LEFT: "L/", RIGHT: "R/"}


class WedgeModel(SpaceModel):

    kind = "wedge"

    def __init__(self, left: SpaceModel, right: SpaceModel, y_left: PointRef, y_right: PointRef):
        self.left, self.right = left, right
        self.left_base = self._check_wedge_point(left, y_left, LEFT)
        self.right_base = self._check_wedge_point(right, y_right, RIGHT)

        self.offset = max(c.id for c in left.charts) + 1
        self.glue = self.offset + max(c.id for c in right.charts) + 1
        charts = list(left.charts)
        charts += [Chart(c.id + self.offset, c.name, c.type, c.domain, c.period) for c in right.charts]
        charts.append(Chart(self.glue, WEDGE, "point"))

        branch_classes = [self._prefixed_class(LEFT, b) for b in left.branch_classes]
        branch_classes += [self._prefixed_class(RIGHT, b) for b in right.branch_classes]
        super().__init__(charts, branch_classes)
        self.glued_point = PointRef(self.glue, WEDGE)
        self._wedge_members = {LEFT: left.fiber(self.left_base)[0], RIGHT: right.fiber(self.right_base)[0]}
        logger.debug("Wedge of %s at %s and %s at %s", left.kind, self.left_base, right.kind, self.right_base)

    @staticmethod
    def _check_wedge_point(model: SpaceModel, y: PointRef, side: str) -> BasePoint:
        x = model.base_of(y)
        members = model.fiber(x)
        if len(members) != 1:
            raise InvalidWedgeError(
                f"The {side} wedge point {y} has an orbit of size {len(members)}; it must be a singleton."
            )
        for branch in model.branch_classes:
            if x.label in branch.labels:
                raise InvalidWedgeError(f"The {side} wedge point {y} lies on the branch class '{branch.name}'.")
        return x

    def describe(self) -> dict:
        info = super().describe()
        info.update({
            "left": self.left.describe(),
            "right": self.right.describe(),
            "wedge_point": {LEFT: str(self.left_base), RIGHT: str(self.right_base)},
        })
        return info

    # --- label and chart bookkeeping ---
    def _side_of_chart(self, chart_id: int) -> str:
        if chart_id == self.glue:
            return WEDGE
        if chart_id < self.offset:
            return LEFT
        return RIGHT

    def _model(self, side: str) -> SpaceModel:
        return self.left if side == LEFT else self.right

    def _wedge_base(self, side: str) -> BasePoint:
        return self.left_base if side == LEFT else self.right_base

    def _shift(self, side: str) -> int:
        return 0 if side == LEFT else self.offset

    def _to_factor(self, y: PointRef) -> PointRef:
        side = self._side_of_chart(y.chart)
        return PointRef(y.chart - self._shift(side), y.tag, y.coord)

    def _from_factor(self, side: str, y: PointRef) -> PointRef:
        if y == self._wedge_members[side]:
            return self.glued_point
        return PointRef(y.chart + self._shift(side), y.tag, y.coord)

    def _label(self, side: str, label: str) -> str:
        base = self._wedge_base(side)
        if label == base.label and not base.coord:
            return WEDGE
        return PREFIX[side] + label

    def _prefixed(self, side: str, x: BasePoint) -> BasePoint:
        if x == self._wedge_base(side):
            return BasePoint(WEDGE)
        return BasePoint(PREFIX[side] + x.label, x.coord)

    def _split(self, x: BasePoint):
        for side, prefix in PREFIX.items():
            if x.label.startswith(prefix):
                return side, BasePoint(x.label[len(prefix):], x.coord)
        return None, x

    def _prefixed_class(self, side: str, branch: BranchClass) -> BranchClass:
        return BranchClass(
            PREFIX[side] + branch.name,
            frozenset(PREFIX[side] + label for label in branch.labels),
            branch.parametric,
            branch.anchor,
        )

    # --- the map ψ ---
    def base_of(self, y: PointRef) -> BasePoint:
        self.chart(y.chart)
        side = self._side_of_chart(y.chart)
        if side == WEDGE:
            return BasePoint(WEDGE)
        return self._prefixed(side, self._model(side).base_of(self._to_factor(y)))

    def fiber(self, x: BasePoint) -> List[PointRef]:
        if x.label == WEDGE:
            return [self.glued_point]
        side, inner = self._split(x)
        if side is None:
            raise DomainError(f"Base label '{x.label}' has no L/ or R/ prefix.")
        return [self._from_factor(side, y) for y in self._model(side).fiber(inner)]

    # --- sampling ---
    def sample_bases(self, n: int, seed: int = 0) -> List[BasePoint]:
        n_left = n // 2
        samples = [self._prefixed(LEFT, x) for x in self.left.sample_bases(n_left, seed)]
        samples += [self._prefixed(RIGHT, x) for x in self.right.sample_bases(n - n_left, seed)]
        return samples

    def strata(self) -> List[BasePoint]:
        points = [BasePoint(WEDGE)]
        for side in (LEFT, RIGHT):
            points += [self._prefixed(side, x) for x in self._model(side).strata() if x != self._wedge_base(side)]
        return points

    def point_labels(self) -> frozenset:
        labels = {WEDGE}
        for side in (LEFT, RIGHT):
            labels |= {self._label(side, label) for label in self._model(side).point_labels()}
        return frozenset(labels)

    def stratum_ends(self) -> List[StratumEnd]:
        ends = []
        for side in (LEFT, RIGHT):
            for end in self._model(side).stratum_ends():
                ends.append(StratumEnd(
                    PREFIX[side] + end.stratum,
                    end.end,
                    frozenset(self._label(side, p) for p in end.points),
                ))
            base = self._wedge_base(side)
            if base.coord:
                # a wedge point inside a one-dimensional stratum cuts it in two
                for end in ("->wedge+", "->wedge-"):
                    ends.append(StratumEnd(PREFIX[side] + base.label, end, frozenset({WEDGE})))
        return ends

    def max_approach_distance(self) -> float:
        return min(self.left.max_approach_distance(), self.right.max_approach_distance())

    def approach_directions(self, branch: BranchClass, anchor: Optional[float] = None) -> List[ApproachDirection]:
        side, inner_name = self._split(BasePoint(branch.name))
        if side is None:
            return []
        model = self._model(side)
        inner = model.find_branch_class(inner_name.label)
        directions = []
        for direction in model.approach_directions(inner, anchor):

            def base_at(d, direction=direction, side=side):
                return self._prefixed(side, direction.base_at(d))

            def limit_of(base, y, direction=direction, side=side):
                _, inner_base = self._split(base)
                limit = direction.limit_of(inner_base, self._to_factor(y))
                return None if limit is None else self._from_factor(side, limit)

            directions.append(ApproachDirection(
                name=direction.name,
                branch_class=branch.name,
                end_bases=tuple(self._prefixed(side, x) for x in direction.end_bases),
                base_at=base_at,
                limit_of=limit_of,
            ))
        return directions

    def factor_charts(self, side: str) -> frozenset:
        if side not in PREFIX:
            raise ParameterError(f"A wedge has a 'left' and a 'right' factor, not '{side}'.")
        model = self._model(side)
        return frozenset(c.id + self._shift(side) for c in model.charts) | {self.glue}

    def factor_branch_classes(self, side: str) -> List[BranchClass]:
        return [b for b in self.branch_classes if b.name.startswith(PREFIX[side])]
