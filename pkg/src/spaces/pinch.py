"""
Pinch spaces: M = ℝ/ℤ with every point a of a finite set A split into k points.

W → M is a k-fold covering, either k disjoint circles (`trivial`) or the connected
self-cover w ↦ k·w (`connected`). Two points of W are related when they lie over the
same point of M \\ A; over A every sheet is its own orbit.

Base points of X:
    ("M", (x,))          x ∉ A
    ("split:i", (a,))    the i-th copy of a ∈ A, i = 0 … k−1
"""
import logging
from typing import List, Optional, Sequence

from src.config import ANGLE_TOL
from src.errors import DomainError, ParameterError
from src.spaces.base import SpaceModel, open_unit, quasi_uniform
from src.spaces.types import (
    ApproachDirection,
    BasePoint,
    BranchClass,
    Chart,
    PointRef,
    StratumEnd,
    quantize,
    reduce_periodic,
)

logger = logging.getLogger(__name__)

MANIFOLD = "M"
COVERINGS = ("trivial", "connected")


def split_label(sheet: int) -> str:
    return f"split:{sheet}"


class PinchModel(SpaceModel):

    kind = "pinch"

    def __init__(self, A: Sequence[float], k: int, covering: str = "trivial", M_kind: str = "circle"):
        if M_kind != "circle":
            raise ParameterError(f"Pinch models are built over the circle only, got M = '{M_kind}'.")
        if isinstance(k, bool) or not isinstance(k, int) or k < 2:
            raise ParameterError(f"The number of sheets k must be an integer ≥ 2, got {k!r}.")
        if covering not in COVERINGS:
            raise ParameterError(f"Unknown covering '{covering}'; expected one of {COVERINGS}.")
        points = sorted(quantize(reduce_periodic(float(a), 1.0)) for a in A)
        for a, b in zip(points, points[1:]):
            if b - a < ANGLE_TOL:
                raise ParameterError(f"A contains the point {a} twice.")
        if len(points) > 1 and 1.0 - points[-1] + points[0] < ANGLE_TOL:
            raise ParameterError(f"A contains the point {points[0]} twice.")

        if covering == "trivial":
            charts = [Chart(i, f"sheet-{i}", "circle", domain=((0.0, 1.0),), period=1.0) for i in range(k)]
        else:
            charts = [Chart(0, "W", "circle", domain=((0.0, 1.0),), period=1.0)]
        branch_classes = [
            BranchClass(f"A[{j}]", frozenset(split_label(i) for i in range(k)), anchor=a)
            for j, a in enumerate(points)
        ]
        super().__init__(charts, branch_classes)
        self.M_kind = M_kind
        self.A = tuple(points)
        self.k = k
        self.covering = covering
        logger.debug("Pinch model: |A| = %d, k = %d, %s covering", len(points), k, covering)

    def describe(self) -> dict:
        info = super().describe()
        info.update({"M_kind": self.M_kind, "A": list(self.A), "k": self.k, "covering": self.covering})
        return info

    # --- the covering W → M ---
    def _project(self, y: PointRef):
        """(x, sheet) for a point of W."""
        self._require_chart(y, "circle")
        if y.tag or len(y.coord) != 1:
            raise DomainError(f"Points of W take one coordinate, got {y}.")
        w = reduce_periodic(y.coord[0], 1.0)
        if self.covering == "trivial":
            return quantize(w), y.chart
        x = reduce_periodic(self.k * w, 1.0)
        sheet = int(round(self.k * w - x)) % self.k
        return quantize(x), sheet

    def _lift(self, x: float, sheet: int) -> PointRef:
        if self.covering == "trivial":
            return PointRef(sheet, coord=(x,))
        return PointRef(0, coord=(quantize(reduce_periodic((x + sheet) / self.k, 1.0)),))

    def _split_point(self, x: float) -> Optional[float]:
        for a in self.A:
            gap = abs(x - a)
            if min(gap, 1.0 - gap) < ANGLE_TOL:
                return a
        return None

    def base_of(self, y: PointRef) -> BasePoint:
        x, sheet = self._project(y)
        a = self._split_point(x)
        if a is not None:
            return BasePoint(split_label(sheet), (a,))
        return BasePoint.of(MANIFOLD, x)

    def fiber(self, x: BasePoint) -> List[PointRef]:
        if len(x.coord) != 1:
            raise DomainError(f"Pinch base points take one coordinate, got {x}.")
        c = quantize(reduce_periodic(x.coord[0], 1.0))
        if x.label == MANIFOLD:
            if self._split_point(c) is not None:
                raise DomainError(f"{c} lies in A; use one of its split copies.")
            return [self._lift(c, i) for i in range(self.k)]
        if x.label.startswith("split:"):
            try:
                sheet = int(x.label.split(":", 1)[1])
            except ValueError:
                raise DomainError(f"Bad split label '{x.label}'.") from None
            a = self._split_point(c)
            if a is None or not 0 <= sheet < self.k:
                raise DomainError(f"{x} is not a split point of A.")
            return [self._lift(a, sheet)]
        raise DomainError(f"'{x.label}' is not a stratum of the pinch space.")

    # --- sampling ---
    def sample_bases(self, n: int, seed: int = 0) -> List[BasePoint]:
        samples = []
        for t in open_unit(quasi_uniform(n, 1, seed)[:, 0]):
            if self._split_point(t) is not None or any(abs(t - a) < 1e-6 for a in self.A):
                t = reduce_periodic(t + 2e-6, 1.0)
            samples.append(BasePoint.of(MANIFOLD, t))
        return samples

    def strata(self) -> List[BasePoint]:
        return [BasePoint(split_label(i), (a,)) for a in self.A for i in range(self.k)]

    def point_labels(self) -> frozenset:
        return frozenset(split_label(i) for i in range(self.k)) if self.A else frozenset()

    def stratum_ends(self) -> List[StratumEnd]:
        if not self.A:
            return []
        splits = frozenset(split_label(i) for i in range(self.k))
        return [StratumEnd(MANIFOLD, "x->a+", splits), StratumEnd(MANIFOLD, "x->a-", splits)]

    def max_approach_distance(self) -> float:
        if len(self.A) < 2:
            return 0.25
        gaps = [b - a for a, b in zip(self.A, self.A[1:])] + [1.0 - self.A[-1] + self.A[0]]
        return min(0.25, min(gaps) / 4)

    def approach_directions(self, branch: BranchClass, anchor: Optional[float] = None) -> List[ApproachDirection]:
        a = branch.anchor if anchor is None else anchor
        if a is None or self._split_point(a) is None:
            return []
        a = self._split_point(a)
        end_bases = tuple(BasePoint(split_label(i), (a,)) for i in range(self.k))

        def limit_of(base: BasePoint, y: PointRef) -> Optional[PointRef]:
            if self.covering == "trivial":
                return self._lift(a, y.chart)
            w = reduce_periodic(y.coord[0], 1.0)
            lifts = [self._lift(a, i) for i in range(self.k)]
            return min(lifts, key=lambda p: min(abs(p.coord[0] - w), 1.0 - abs(p.coord[0] - w)))

        return [
            ApproachDirection(
                name=name,
                branch_class=branch.name,
                end_bases=end_bases,
                base_at=lambda d, sign=sign: BasePoint.of(MANIFOLD, reduce_periodic(a + sign * d, 1.0)),
                limit_of=limit_of,
            )
            for name, sign in (("x->a+", 1.0), ("x->a-", -1.0))
        ]
