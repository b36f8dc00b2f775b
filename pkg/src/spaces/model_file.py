"""
JSON descriptions of space models, validated with pydantic.

    {"kind": "solenoid_aab_ab"}
    {"kind": "broken_heart"}
    {"kind": "twisted_sphere"}
    {"kind": "circle"}
    {"kind": "pinch", "A": [0.1, 0.5], "k": 2, "covering": "trivial"}
    {"kind": "wedge", "left": {...}, "right": {...},
     "y_left": {"chart": 0, "coord": [0.25]}, "y_right": {"chart": 0, "coord": [0.0]}}
    {"kind": "cover", "base": {...}, "charts": "star" | [
        {"name": "U0", "points": ["ab"], "intervals": [["a", 0.75, 1.0], ["b", null, 0.25]]}]}

In an interval, a null end runs to that end of the stratum; null for both ends
means the whole stratum.
"""
from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field
from pydantic import ValidationError as PydanticValidationError

from src.errors import ParameterError, ValidationError
from src.spaces.arc_graph import ArcGraphModel, BrokenHeart, SolenoidAabAb
from src.spaces.base import SpaceModel
from src.spaces.circle import Circle
from src.spaces.cover import CoverChart, CoverModel, star_cover
from src.spaces.pinch import PinchModel
from src.spaces.twisted_sphere import TwistedSphere
from src.spaces.types import PointRef
from src.spaces.wedge import WedgeModel


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class PointSpec(_Strict):
    chart: int
    tag: str = ""
    coord: List[float] = []

    def to_point(self) -> PointRef:
        return PointRef(self.chart, self.tag, tuple(self.coord))


class SolenoidSpec(_Strict):
    kind: Literal["solenoid_aab_ab"]


class BrokenHeartSpec(_Strict):
    kind: Literal["broken_heart"]


class TwistedSphereSpec(_Strict):
    kind: Literal["twisted_sphere"]


class CircleSpec(_Strict):
    kind: Literal["circle"]


class PinchSpec(_Strict):
    kind: Literal["pinch"]
    M_kind: Literal["circle"] = "circle"
    A: List[float] = []
    k: int = Field(default=2, ge=2)
    covering: Literal["trivial", "connected"] = "trivial"


class CoverChartSpec(_Strict):
    name: str
    points: List[str] = []
    intervals: List[Tuple[str, Optional[float], Optional[float]]] = []

    def to_chart(self) -> CoverChart:
        return CoverChart(self.name, frozenset(self.points), tuple(tuple(i) for i in self.intervals))


class CoverSpec(_Strict):
    kind: Literal["cover"]
    base: "ModelSpec"
    charts: Union[Literal["star"], List[CoverChartSpec]]


class WedgeSpec(_Strict):
    kind: Literal["wedge"]
    left: "ModelSpec"
    right: "ModelSpec"
    y_left: PointSpec
    y_right: PointSpec


ModelSpec = Union[SolenoidSpec, BrokenHeartSpec, TwistedSphereSpec, CircleSpec, PinchSpec, CoverSpec, WedgeSpec]

CoverSpec.model_rebuild()
WedgeSpec.model_rebuild()


class _ModelDocument(_Strict):
    model: ModelSpec = Field(discriminator="kind")


def build_model(spec) -> SpaceModel:
    if isinstance(spec, SolenoidSpec):
        return SolenoidAabAb()
    if isinstance(spec, BrokenHeartSpec):
        return BrokenHeart()
    if isinstance(spec, TwistedSphereSpec):
        return TwistedSphere()
    if isinstance(spec, CircleSpec):
        return Circle()
    if isinstance(spec, PinchSpec):
        return PinchModel(spec.A, spec.k, spec.covering, spec.M_kind)
    if isinstance(spec, WedgeSpec):
        return WedgeModel(
            build_model(spec.left), build_model(spec.right), spec.y_left.to_point(), spec.y_right.to_point()
        )
    if isinstance(spec, CoverSpec):
        base = build_model(spec.base)
        if spec.charts == "star":
            if not isinstance(base, ArcGraphModel):
                raise ParameterError(f"Star covers need an arc-graph base, got '{base.kind}'.")
            charts = star_cover(base)
        else:
            charts = [c.to_chart() for c in spec.charts]
        return CoverModel(base, charts)
    raise ValidationError(f"Unknown model description {spec!r}.")


def parse_model(data: dict) -> SpaceModel:
    """Builds a model from decoded JSON such as {"kind": "pinch", "A": [0.5], "k": 3}."""
    try:
        document = _ModelDocument.model_validate({"model": data})
    except PydanticValidationError as e:
        raise ValidationError(f"Invalid model description: {e}") from e
    return build_model(document.model)
