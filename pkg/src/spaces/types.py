"""
Value types shared by every space model: charts, points of Y, points of X,
orbits (ψ-fibers), branch classes and approach data.
All of them are immutable.
"""
import math
from dataclasses import dataclass, field
from typing import Callable, FrozenSet, Optional, Tuple

from src.config import ANGLE_TOL, BASE_DIGITS

ChartId = int

CHART_TYPES = ("interval", "circle", "sphere-patch", "point", "section")


def reduce_periodic(value: float, period: float) -> float:
    """Reduces a periodic coordinate to [0, period), snapping values within ANGLE_TOL of the period to 0."""
    reduced = math.fmod(value, period)
    if reduced < 0:
        reduced += period
    if period - reduced < ANGLE_TOL:
        reduced = 0.0
    return reduced


def quantize(value: float) -> float:
    # -0.0 and 0.0 must hash alike
    return round(value, BASE_DIGITS) + 0.0


@dataclass(frozen=True)
class Chart:
    """A Hausdorff parameter patch of Y."""
    id: ChartId
    name: str
    type: str
    domain: Tuple[Tuple[float, float], ...] = ()
    period: Optional[float] = None

    def __post_init__(self):
        if self.type not in CHART_TYPES:
            raise ValueError(f"Unknown chart type '{self.type}'.")


@dataclass(frozen=True, order=True)
class PointRef:
    """A point y of Y: a chart plus coordinates, or a distinguished tag (poles, glued points, cover copies)."""
    chart: ChartId
    tag: str = ""
    coord: Tuple[float, ...] = ()

    def sort_key(self):
        return (self.chart, self.tag, self.coord)

    def close_to(self, other: "PointRef", tol: float = ANGLE_TOL, period: Optional[float] = None) -> bool:
        if self.chart != other.chart or self.tag != other.tag or len(self.coord) != len(other.coord):
            return False
        for i, (a, b) in enumerate(zip(self.coord, other.coord)):
            gap = abs(a - b)
            if period is not None and i == 0:
                gap = min(gap, period - gap)
            if gap > tol:
                return False
        return True

    def __str__(self):
        parts = [str(self.chart)]
        if self.tag:
            parts.append(self.tag)
        if self.coord:
            parts.append("(" + ", ".join(f"{c:.6g}" for c in self.coord) + ")")
        return ":".join(parts)


@dataclass(frozen=True, order=True)
class BasePoint:
    """A point x of X, identified by the stratum it lies on and its coordinates there."""
    label: str
    coord: Tuple[float, ...] = ()

    @classmethod
    def of(cls, label: str, *coord: float) -> "BasePoint":
        return cls(label, tuple(quantize(float(c)) for c in coord))

    def __str__(self):
        if not self.coord:
            return self.label
        return f"{self.label}(" + ", ".join(f"{c:.6g}" for c in self.coord) + ")"


@dataclass(frozen=True)
class Orbit:
    """The ψ-fiber over one base point, members in canonical (chart, tag, coord) order."""
    members: Tuple[PointRef, ...]
    base_label: BasePoint

    def __post_init__(self):
        if not self.members:
            raise ValueError("An orbit must have at least one member.")
        if len(set(self.members)) != len(self.members):
            raise ValueError(f"Duplicate members in orbit over {self.base_label}.")

    @classmethod
    def canonical(cls, members, base: BasePoint) -> "Orbit":
        return cls(tuple(sorted(members, key=PointRef.sort_key)), base)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def index_of(self, y: PointRef, tol: float = ANGLE_TOL, period: Optional[float] = None) -> int:
        """Position of y; `period` makes the first coordinate wrap around."""
        for i, member in enumerate(self.members):
            if member == y or member.close_to(y, tol, period):
                return i
        raise KeyError(f"{y} is not a member of the orbit over {self.base_label}.")


@dataclass(frozen=True)
class BranchClass:
    """
    A finite set of mutually non-separated points of X, given by base labels.
    A parametric class stands for a family of such sets inside one stratum
    (the long equator of the twisted sphere); `anchor` picks a representative.
    """
    name: str
    labels: FrozenSet[str]
    parametric: bool = False
    anchor: Optional[float] = None


@dataclass(frozen=True)
class StratumEnd:
    """One end of an open stratum of X and the point strata it approaches."""
    stratum: str
    end: str
    points: FrozenSet[str]


@dataclass(frozen=True)
class ApproachDirection:
    """A way of running into a branch class: base points at distance d and the limits in Y of their lifts."""
    name: str
    branch_class: str
    end_bases: Tuple[BasePoint, ...]
    base_at: Callable[[float], BasePoint] = field(compare=False)
    limit_of: Callable[[BasePoint, PointRef], Optional[PointRef]] = field(compare=False)


@dataclass(frozen=True)
class ApproachSample:
    distance: float
    base: BasePoint
    limits: Tuple[Optional[PointRef], ...]


@dataclass(frozen=True)
class ApproachSequence:
    """Samples running into a branch class; `limits` is aligned with the canonical orbit order of each sample."""
    target: str
    direction: str
    samples: Tuple[ApproachSample, ...]

    @property
    def distances(self) -> Tuple[float, ...]:
        return tuple(s.distance for s in self.samples)
