"""
One-dimensional models: X is a finite graph of open arcs and vertices (some vertices
non-separated), Y is a union of interval/circle charts, and every arc of X lifts to
one or more parameter intervals of Y. The aab/ab solenoid and the broken heart are
both instances.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from src.config import ANGLE_TOL
from src.errors import DomainError, ValidationError
from src.ktheory.stratified import Edge, OneDStratified
from src.spaces.base import SpaceModel, open_unit, quasi_uniform
from src.spaces.types import (
    ApproachDirection,
    BasePoint,
    BranchClass,
    Chart,
    ChartId,
    PointRef,
    StratumEnd,
    quantize,
    reduce_periodic,
)

logger = logging.getLogger(__name__)

START, END = "start", "end"


@dataclass(frozen=True)
class ArcLift:
    """One sheet over an arc: chart coordinate = offset + scale * s, plus the vertex each end runs into (None = escapes)."""
    chart: ChartId
    offset: float
    scale: float
    start: Optional[str] = None
    end: Optional[str] = None


@dataclass(frozen=True)
class Arc:
    label: str
    length: float
    lifts: Tuple[ArcLift, ...]

    @property
    def rank(self) -> int:
        return len(self.lifts)


class ArcGraphModel(SpaceModel):
    """X = arcs ∪ vertices; `ideal_arcs` are the arcs forming the ideal of the two-strata extension."""

    def __init__(
        self,
        charts: Sequence[Chart],
        arcs: Sequence[Arc],
        vertices: Dict[str, PointRef],
        branch_classes: Sequence[BranchClass],
        ideal_arcs: Sequence[str],
    ):
        super().__init__(charts, branch_classes)
        self.arcs: Dict[str, Arc] = {a.label: a for a in arcs}
        self.vertices: Dict[str, PointRef] = dict(vertices)
        self.ideal_arcs: Tuple[str, ...] = tuple(ideal_arcs)
        for arc in arcs:
            for lift in arc.lifts:
                self.chart(lift.chart)
                for v in (lift.start, lift.end):
                    if v is not None and v not in self.vertices:
                        raise ValidationError(f"Arc '{arc.label}' ends at unknown vertex '{v}'.")
        for label in self.ideal_arcs:
            if label not in self.arcs:
                raise ValidationError(f"Ideal arc '{label}' is not an arc of the model.")

    # --- the map ψ ---
    def _lift_point(self, lift: ArcLift, s: float) -> PointRef:
        chart = self.chart(lift.chart)
        return PointRef(lift.chart, coord=(quantize(self._periodic(chart, lift.offset + lift.scale * s)),))

    def _arc_parameter(self, lift: ArcLift, chart: Chart, c: float) -> float:
        if chart.period:
            if lift.scale > 0:
                return reduce_periodic(c - lift.offset, chart.period) / lift.scale
            return -reduce_periodic(lift.offset - c, chart.period) / lift.scale
        return (c - lift.offset) / lift.scale

    def base_of(self, y: PointRef) -> BasePoint:
        chart = self.chart(y.chart)
        if y.tag or len(y.coord) != 1:
            raise DomainError(f"Point {y} needs exactly one coordinate on chart '{chart.name}'.")
        c = self._periodic(chart, y.coord[0])
        for vertex, p in self.vertices.items():
            if p.chart == y.chart and PointRef(y.chart, coord=(c,)).close_to(p, period=chart.period):
                return BasePoint(vertex)
        for arc in self.arcs.values():
            for lift in arc.lifts:
                if lift.chart != y.chart:
                    continue
                s = self._arc_parameter(lift, chart, c)
                if ANGLE_TOL < s < arc.length - ANGLE_TOL:
                    return BasePoint.of(arc.label, s)
        raise DomainError(f"Coordinate {y.coord[0]} lies outside the domain of chart '{chart.name}'.")

    def fiber(self, x: BasePoint) -> List[PointRef]:
        if x.label in self.vertices:
            if x.coord:
                raise DomainError(f"Vertex '{x.label}' takes no coordinates.")
            return [self.vertices[x.label]]
        arc = self.arcs.get(x.label)
        if arc is None:
            raise DomainError(f"'{x.label}' is neither an arc nor a vertex of the {self.kind} model.")
        if len(x.coord) != 1:
            raise DomainError(f"Arc point '{x}' needs exactly one coordinate.")
        s = quantize(x.coord[0])
        if not ANGLE_TOL < s < arc.length - ANGLE_TOL:
            raise DomainError(f"Arc coordinate {s} is outside (0, {arc.length}) on arc '{arc.label}'.")
        return [self._lift_point(lift, s) for lift in arc.lifts]

    # --- sampling ---
    def sample_bases(self, n: int, seed: int = 0) -> List[BasePoint]:
        arcs = list(self.arcs.values())
        total = sum(a.length for a in arcs)
        positions = open_unit(quasi_uniform(n, 1, seed)[:, 0]) * total
        samples = []
        for pos in positions:
            for arc in arcs:
                if pos < arc.length:
                    s = min(max(pos, arc.length * 1e-6), arc.length * (1 - 1e-6))
                    samples.append(BasePoint.of(arc.label, s))
                    break
                pos -= arc.length
        return samples

    def strata(self) -> List[BasePoint]:
        return [BasePoint(v) for v in self.vertices]

    # --- stratification ---
    def point_labels(self) -> frozenset:
        return frozenset(self.vertices)

    def stratum_ends(self) -> List[StratumEnd]:
        ends = []
        for arc in self.arcs.values():
            for end in (START, END):
                points = {getattr(lift, end) for lift in arc.lifts} - {None}
                ends.append(StratumEnd(arc.label, end, frozenset(points)))
        return ends

    def max_approach_distance(self) -> float:
        return min(a.length for a in self.arcs.values()) / 4

    def approach_directions(self, branch: BranchClass, anchor: Optional[float] = None) -> List[ApproachDirection]:
        directions = []
        for end_info in self.stratum_ends():
            if not end_info.points & branch.labels:
                continue
            arc = self.arcs[end_info.stratum]
            end = end_info.end

            def base_at(d, arc=arc, end=end):
                return BasePoint.of(arc.label, d if end == START else arc.length - d)

            def limit_of(base, y, arc=arc, end=end):
                for lift in arc.lifts:
                    if self._lift_point(lift, base.coord[0]) == y:
                        vertex = getattr(lift, end)
                        return self.vertices[vertex] if vertex else None
                raise DomainError(f"{y} is not a lift of {base}.")

            directions.append(ApproachDirection(
                name=f"{arc.label}:{end}",
                branch_class=branch.name,
                end_bases=tuple(BasePoint(v) for v in sorted(end_info.points)),
                base_at=base_at,
                limit_of=limit_of,
            ))
        return directions

    def _quotient_classes(self) -> List[List[str]]:
        names = list(self.vertices)
        index = {v: i for i, v in enumerate(names)}
        quotient_arcs = [a for label, a in self.arcs.items() if label not in self.ideal_arcs]
        rows, cols = [], []
        for arc in quotient_arcs:
            ends = [index[v] for lift in arc.lifts for v in (lift.start, lift.end) if v is not None]
            rows += ends[:1] * (len(ends) - 1)
            cols += ends[1:]
        graph = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(names), len(names)))
        _, labels = connected_components(graph, directed=False)
        groups: Dict[int, List[str]] = {}
        for v, component in zip(names, labels):
            groups.setdefault(int(component), []).append(v)
        classes = list(groups.values())
        for members in classes:
            inside = [a for a in quotient_arcs
                      if any(v in members for lift in a.lifts for v in (lift.start, lift.end))]
            if len(inside) != len(members) - 1:
                raise ValidationError(f"Quotient component {members} is not contractible.")
        return classes

    def stratification(self) -> OneDStratified:
        """Ideal arcs as edges, contractible quotient components as vertex classes; positive end is s → 0⁺."""
        classes = self._quotient_classes()
        class_name = {}
        for members in classes:
            name = "|".join(members)
            for v in members:
                class_name[v] = name
        edges, incidence = [], {}
        for label in self.ideal_arcs:
            arc = self.arcs[label]
            edges.append(Edge(label, arc.rank))
            for sign, end in (("+", START), ("-", END)):
                counts: Dict[str, int] = {}
                for lift in arc.lifts:
                    vertex = getattr(lift, end)
                    if vertex is not None:
                        counts[class_name[vertex]] = counts.get(class_name[vertex], 0) + 1
                incidence[(label, sign)] = counts
        return OneDStratified(
            edges=tuple(edges),
            vertex_classes=tuple("|".join(m) for m in classes),
            incidence=incidence,
        )


class SolenoidAabAb(ArcGraphModel):
    """
    The circle t ∈ [0, 1) mapped onto the wedge of two circles with the wedge point split
    into ab, ba, aa: ab at t=0, the b-arc on (0, 1/2), ba at 1/2, two a-arcs on (1/2, 3/4)
    and (3/4, 1) with aa at 3/4 between them.
    """

    kind = "solenoid_aab_ab"

    def __init__(self):
        super().__init__(
            charts=[Chart(0, "circle", "circle", domain=((0.0, 1.0),), period=1.0)],
            arcs=[
                Arc("a", 1.0, (ArcLift(0, 0.5, 0.25, "ba", "aa"), ArcLift(0, 0.75, 0.25, "aa", "ab"))),
                Arc("b", 1.0, (ArcLift(0, 0.0, 0.5, "ab", "ba"),)),
            ],
            vertices={
                "ab": PointRef(0, coord=(0.0,)),
                "ba": PointRef(0, coord=(0.5,)),
                "aa": PointRef(0, coord=(0.75,)),
            },
            branch_classes=[BranchClass("split-vertex", frozenset({"ab", "ba", "aa"}))],
            ideal_arcs=("a", "b"),
        )


class BrokenHeart(ArcGraphModel):
    """
    Y: a stem [0, 2) rooted at p, two posts (0, 2] topped by q and r, and two diagonals
    p→q, p→r. The three open vertical segments are identified by height; X has stem
    coordinate s = 2 - height, so s → 0⁺ runs into the non-separated pair {q, r}.
    """

    kind = "broken_heart"

    def __init__(self):
        super().__init__(
            charts=[
                Chart(0, "stem", "interval", domain=((0.0, 2.0),)),
                Chart(1, "left-post", "interval", domain=((0.0, 2.0),)),
                Chart(2, "right-post", "interval", domain=((0.0, 2.0),)),
                Chart(3, "left-diagonal", "interval", domain=((0.0, 1.0),)),
                Chart(4, "right-diagonal", "interval", domain=((0.0, 1.0),)),
            ],
            arcs=[
                Arc("stem", 2.0, (
                    ArcLift(0, 2.0, -1.0, None, "p"),
                    ArcLift(1, 2.0, -1.0, "q", None),
                    ArcLift(2, 2.0, -1.0, "r", None),
                )),
                Arc("left", 1.0, (ArcLift(3, 0.0, 1.0, "p", "q"),)),
                Arc("right", 1.0, (ArcLift(4, 0.0, 1.0, "p", "r"),)),
            ],
            vertices={
                "p": PointRef(0, coord=(0.0,)),
                "q": PointRef(1, coord=(2.0,)),
                "r": PointRef(2, coord=(2.0,)),
            },
            branch_classes=[BranchClass("top", frozenset({"q", "r"}))],
            ideal_arcs=("stem",),
        )
