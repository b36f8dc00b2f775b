"""The circle ℝ/ℤ with ψ = id: a Hausdorff base for covers and the manifold M of pinch spaces."""
from typing import List

from src.errors import DomainError
from src.spaces.base import SpaceModel, open_unit, quasi_uniform
from src.spaces.types import BasePoint, Chart, PointRef, StratumEnd, quantize, reduce_periodic

CIRCLE = "circle"


class Circle(SpaceModel):

    kind = "circle"

    def __init__(self, strata_points: int = 4):
        super().__init__(charts=[Chart(0, CIRCLE, "circle", domain=((0.0, 1.0),), period=1.0)])
        self.strata_points = strata_points

    def base_of(self, y: PointRef) -> BasePoint:
        self._require_chart(y, "circle")
        if y.tag or len(y.coord) != 1:
            raise DomainError(f"Circle points take one coordinate, got {y}.")
        return BasePoint.of(CIRCLE, reduce_periodic(y.coord[0], 1.0))

    def fiber(self, x: BasePoint) -> List[PointRef]:
        if x.label != CIRCLE or len(x.coord) != 1:
            raise DomainError(f"{x} is not a point of the circle.")
        return [PointRef(0, coord=(quantize(reduce_periodic(x.coord[0], 1.0)),))]

    def sample_bases(self, n: int, seed: int = 0) -> List[BasePoint]:
        return [BasePoint.of(CIRCLE, t) for t in open_unit(quasi_uniform(n, 1, seed)[:, 0])]

    def strata(self) -> List[BasePoint]:
        return [BasePoint.of(CIRCLE, i / self.strata_points) for i in range(self.strata_points)]

    def stratum_ends(self) -> List[StratumEnd]:
        # a single closed stratum
        return []
