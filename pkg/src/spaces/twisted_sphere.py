"""
The twisted sphere: S² with (θ, z) ~ (θ + π, z) off the equator, covered by
Y = U ⊔ V₁ ⊔ V₂ where U is the sphere without poles (ψ = the quotient map) and
V₁, V₂ are copies of the sphere without equator (ψ = quotient after θ ↦ θ/2).

Base points of X:
    ("sphere", (φ, z))   φ ∈ [0, π), z ≠ 0
    ("equator", (θ,))    θ ∈ [0, 2π), the long equator
    ("north",), ("south",)
"""
import logging
import math
from typing import List, Optional

from src.config import ANGLE_TOL
from src.errors import DomainError
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

TWO_PI = 2 * math.pi

U, V1, V2 = 0, 1, 2
SPHERE, EQUATOR, NORTH, SOUTH = "sphere", "equator", "north", "south"
POLES = (NORTH, SOUTH)

DEFAULT_EQUATOR_ANCHOR = 0.3


class TwistedSphere(SpaceModel):

    kind = "twisted_sphere"

    def __init__(self, equator_strata: int = 8):
        super().__init__(
            charts=[
                Chart(U, "U", "sphere-patch", domain=((0.0, TWO_PI), (-1.0, 1.0)), period=TWO_PI),
                Chart(V1, "V1", "sphere-patch", domain=((0.0, TWO_PI), (-1.0, 1.0)), period=TWO_PI),
                Chart(V2, "V2", "sphere-patch", domain=((0.0, TWO_PI), (-1.0, 1.0)), period=TWO_PI),
            ],
            branch_classes=[
                BranchClass("equator", frozenset({EQUATOR}), parametric=True, anchor=DEFAULT_EQUATOR_ANCHOR),
            ],
        )
        self.equator_strata = equator_strata

    # --- the map ψ ---
    def base_of(self, y: PointRef) -> BasePoint:
        self.chart(y.chart)
        if y.tag:
            if y.chart == U or y.tag not in POLES or y.coord:
                raise DomainError(f"{y} is not a point of chart {y.chart}; only V1 and V2 carry the poles.")
            return BasePoint(y.tag)
        if len(y.coord) != 2:
            raise DomainError(f"Sphere points take (theta, z), got {y}.")
        theta, z = reduce_periodic(y.coord[0], TWO_PI), y.coord[1]
        if y.chart == U:
            if not -1.0 < z < 1.0:
                raise DomainError(f"z = {z} is outside (-1, 1); U excludes the poles.")
            if abs(z) < ANGLE_TOL:
                return BasePoint.of(EQUATOR, theta)
            return BasePoint.of(SPHERE, reduce_periodic(theta, math.pi), z)
        if not -1.0 <= z <= 1.0 or abs(z) < ANGLE_TOL:
            raise DomainError(f"z = {z} is outside [-1, 1] minus the equator.")
        if abs(abs(z) - 1.0) < ANGLE_TOL:
            raise DomainError(f"Poles of V{y.chart} are tagged points, not coordinates ({y}).")
        return BasePoint.of(SPHERE, theta / 2, z)

    def fiber(self, x: BasePoint) -> List[PointRef]:
        if x.label in POLES:
            if x.coord:
                raise DomainError(f"The {x.label} pole takes no coordinates.")
            return [PointRef(V1, x.label), PointRef(V2, x.label)]
        if x.label == EQUATOR:
            if len(x.coord) != 1:
                raise DomainError(f"Equator points take one angle, got {x}.")
            return [PointRef(U, coord=(quantize(reduce_periodic(x.coord[0], TWO_PI)), 0.0))]
        if x.label == SPHERE:
            if len(x.coord) != 2:
                raise DomainError(f"Sphere base points take (phi, z), got {x}.")
            phi, z = x.coord
            if not 0.0 <= phi < math.pi + ANGLE_TOL or not 0.0 < abs(z) < 1.0:
                raise DomainError(f"{x} is outside [0, pi) x ((-1, 0) u (0, 1)).")
            return [
                PointRef(U, coord=(quantize(phi), z)),
                PointRef(U, coord=(quantize(phi + math.pi), z)),
                PointRef(V1, coord=(quantize(2 * phi), z)),
                PointRef(V2, coord=(quantize(2 * phi), z)),
            ]
        raise DomainError(f"'{x.label}' is not a stratum of the twisted sphere.")

    # --- sampling ---
    def sample_bases(self, n: int, seed: int = 0) -> List[BasePoint]:
        points = open_unit(quasi_uniform(n, 2, seed))
        samples = []
        for a, b in points:
            z = 2.0 * b - 1.0
            if abs(z) < 1e-6:
                z = 1e-6
            samples.append(BasePoint.of(SPHERE, a * math.pi, z))
        return samples

    def strata(self) -> List[BasePoint]:
        equator = [BasePoint.of(EQUATOR, TWO_PI * i / self.equator_strata) for i in range(self.equator_strata)]
        return equator + [BasePoint(NORTH), BasePoint(SOUTH)]

    def point_labels(self) -> frozenset:
        return frozenset(POLES)

    def stratum_ends(self) -> List[StratumEnd]:
        # the open hemispheres run into the long equator, which is one-dimensional
        return [
            StratumEnd(SPHERE, "z->0+", frozenset()),
            StratumEnd(SPHERE, "z->0-", frozenset()),
            StratumEnd(SPHERE, "z->1", frozenset({NORTH})),
            StratumEnd(SPHERE, "z->-1", frozenset({SOUTH})),
        ]

    def max_approach_distance(self) -> float:
        return 0.5

    def approach_directions(self, branch: BranchClass, anchor: Optional[float] = None) -> List[ApproachDirection]:
        if branch.name != "equator":
            return []
        theta = reduce_periodic(DEFAULT_EQUATOR_ANCHOR if anchor is None else anchor, TWO_PI)
        phi = reduce_periodic(theta, math.pi)
        end_bases = (BasePoint.of(EQUATOR, phi), BasePoint.of(EQUATOR, phi + math.pi))

        def limit_of(base: BasePoint, y: PointRef) -> Optional[PointRef]:
            # V-sheets leave through the removed equator
            if y.chart != U:
                return None
            return PointRef(U, coord=(y.coord[0], 0.0))

        directions = []
        for name, sign in (("z->0+", 1.0), ("z->0-", -1.0)):
            directions.append(ApproachDirection(
                name=name,
                branch_class=branch.name,
                end_bases=end_bases,
                base_at=lambda d, sign=sign: BasePoint.of(SPHERE, phi, sign * d),
                limit_of=limit_of,
            ))
        return directions
