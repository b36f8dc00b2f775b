"""
JSON files describing an element to verify.

    {
      "model": {"kind": "twisted_sphere"},
      "element": {"rule": "builtin", "name": "twisted_sphere_projection",
                  "params": {"diagonal_shift": 0.1}},
      "samples": 10000, "seed": 0, "tol": 1e-12, "continuity": true
    }

Other element rules:

    {"rule": "indicator", "region": ["a", "aa"]}
    {"rule": "grid", "values": [
        {"base": {"label": "equator", "coord": [0.3]}, "entries": [[1.0]]},
        {"base": {"label": "north"}, "entries": [[1, 0], [0, [0.0, 1.0]]]}]}

A matrix entry is a real number or a [re, im] pair. Grid elements are verified
on their own base points, without continuity checks unless asked for.
"""
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic import ValidationError as PydanticValidationError

from src.config import ALGEBRA_TOL, CONTINUITY_TOL, DEFAULT_SAMPLES, DEFAULT_SEED
from src.errors import ValidationError
from src.conv.element import AlgebraElement, GridRule, indicator_projection
from src.conv.region import Region
from src.conv.sampling import stratified_samples
from src.spaces.base import SpaceModel
from src.spaces.model_file import parse_model
from src.spaces.types import BasePoint

logger = logging.getLogger(__name__)


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


Entry = Union[float, Tuple[float, float]]


class BaseSpec(_Strict):
    label: str
    coord: List[float] = []

    def to_base(self) -> BasePoint:
        return BasePoint.of(self.label, *self.coord)


class GridValueSpec(_Strict):
    base: BaseSpec
    entries: List[List[Entry]] = Field(min_length=1)

    @model_validator(mode="after")
    def _rectangular(self) -> "GridValueSpec":
        widths = {len(row) for row in self.entries}
        if len(widths) != 1 or 0 in widths:
            lengths = [len(row) for row in self.entries]
            raise ValueError(f"entries at {self.base.label} must form a rectangular matrix, got row lengths {lengths}")
        return self

    def to_array(self) -> np.ndarray:
        return np.array(
            [[complex(*e) if isinstance(e, tuple) else complex(e) for e in row] for row in self.entries],
            dtype=complex,
        )


class BuiltinSpec(_Strict):
    rule: Literal["builtin"]
    name: Literal["identity", "zero", "twisted_sphere_projection"]
    params: Dict[str, float] = {}


class GridSpec(_Strict):
    rule: Literal["grid"]
    values: List[GridValueSpec] = Field(min_length=1)


class IndicatorSpec(_Strict):
    rule: Literal["indicator"]
    region: List[str]


ElementSpec = Union[BuiltinSpec, GridSpec, IndicatorSpec]


class ElementFile(_Strict):
    model: dict
    element: ElementSpec = Field(discriminator="rule")
    samples: int = Field(default=DEFAULT_SAMPLES, ge=1)
    seed: int = DEFAULT_SEED
    tol: float = Field(default=ALGEBRA_TOL, gt=0)
    continuity_tol: float = Field(default=CONTINUITY_TOL, gt=0)
    continuity: Optional[bool] = None


@dataclass(frozen=True)
class VerifyJob:
    """An element with the sample set and tolerances it is to be verified with."""
    element: AlgebraElement
    samples: List[BasePoint]
    tol: float
    continuity_tol: float
    continuity: bool


def build_element(model: SpaceModel, spec) -> AlgebraElement:
    if isinstance(spec, BuiltinSpec):
        return AlgebraElement.builtin(model, spec.name, **spec.params)
    if isinstance(spec, GridSpec):
        return AlgebraElement.grid(model, {v.base.to_base(): v.to_array() for v in spec.values})
    return indicator_projection(model, Region.of(spec.region))


def parse_job(data: dict, samples: Optional[int] = None, tol: Optional[float] = None) -> VerifyJob:
    """`samples` and `tol` override the values in the file."""
    try:
        document = ElementFile.model_validate(data)
    except PydanticValidationError as e:
        raise ValidationError(f"Invalid element description: {e}") from e
    model = parse_model(document.model)
    element = build_element(model, document.element)

    if isinstance(element.rule, GridRule):
        bases = list(element.rule.values)
        continuity = bool(document.continuity)
    else:
        bases = stratified_samples(element.model, samples or document.samples, document.seed)
        continuity = document.continuity is not False
    return VerifyJob(
        element=element,
        samples=bases,
        tol=tol if tol is not None else document.tol,
        continuity_tol=document.continuity_tol,
        continuity=continuity,
    )


def load_job(path: str, samples: Optional[int] = None, tol: Optional[float] = None) -> VerifyJob:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise ValidationError(f"Cannot read '{path}': {e}") from e
    except json.JSONDecodeError as e:
        raise ValidationError(f"'{path}' is not valid JSON: {e}") from e
    return parse_job(data, samples, tol)
