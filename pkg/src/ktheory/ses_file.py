"""
JSON files describing a two-strata extension.

    {
      "source": "aab-ab",                     (optional)
      "K0_I": 0, "K1_I": 2, "K0_Q": 3, "K1_Q": 0,
      "delta0": [[-1, 1, 0], [1, -1, 0]],
      "delta1": []                            (optional, zero map if absent)
    }

A group is an integer rank, a group string ("Z^2", "Z ⊕ Z/2") or
{"rank": r, "torsion": [...]}. A matrix is a list of rows or
{"rows": r, "cols": c, "entries": [...]} in row-major order.
"""
import json
from pathlib import Path
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt
from pydantic import ValidationError as PydanticValidationError

from src.errors import ValidationError
from src.ktheory.groups import FgAbGroup
from src.ktheory.intmatrix import IntMatrix
from src.ktheory.six_term import TwoStrataSES


class GroupSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")
    rank: StrictInt = Field(ge=0)
    torsion: List[StrictInt] = []


class MatrixSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")
    rows: StrictInt = Field(ge=0)
    cols: StrictInt = Field(ge=0)
    entries: List[StrictInt]


GroupField = Union[StrictInt, str, GroupSpec]
MatrixField = Union[List[List[StrictInt]], MatrixSpec]


class SESFile(BaseModel):
    model_config = ConfigDict(extra="forbid")
    source: Optional[str] = None
    K0_I: GroupField
    K1_I: GroupField
    K0_Q: GroupField
    K1_Q: GroupField
    delta0: Optional[MatrixField] = None
    delta1: Optional[MatrixField] = None


def _group(value: GroupField) -> FgAbGroup:
    if isinstance(value, int):
        if value < 0:
            raise ValidationError(f"Group rank {value} is negative.")
        return FgAbGroup.free(value)
    if isinstance(value, str):
        return FgAbGroup.parse(value)
    return FgAbGroup.from_orders(value.rank, value.torsion)


def _matrix(value: Optional[MatrixField], shape: Tuple[int, int]) -> IntMatrix:
    if value is None:
        return IntMatrix.zeros(*shape)
    if isinstance(value, MatrixSpec):
        return IntMatrix(value.rows, value.cols, tuple(value.entries))
    return IntMatrix.from_rows(value, cols=shape[1])


def parse_ses(data: dict) -> TwoStrataSES:
    """Builds a TwoStrataSES from decoded JSON. Shapes are checked later, by solve_six_term."""
    try:
        spec = SESFile.model_validate(data)
    except PydanticValidationError as e:
        raise ValidationError(f"Invalid extension description: {e}") from e
    K0_I, K1_I, K0_Q, K1_Q = (_group(g) for g in (spec.K0_I, spec.K1_I, spec.K0_Q, spec.K1_Q))
    return TwoStrataSES(
        K0_I=K0_I,
        K1_I=K1_I,
        K0_Q=K0_Q,
        K1_Q=K1_Q,
        delta0=_matrix(spec.delta0, (K1_I.rank, K0_Q.rank)),
        delta1=_matrix(spec.delta1, (K0_I.rank, K1_Q.rank)),
        source=spec.source,
    )


def load_ses(path: Union[str, Path]) -> TwoStrataSES:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise ValidationError(f"Cannot read '{path}': {e}") from e
    except json.JSONDecodeError as e:
        raise ValidationError(f"'{path}' is not valid JSON: {e}") from e
    return parse_ses(data)


def ses_to_dict(ses: TwoStrataSES) -> dict:
    return {
        "source": ses.source,
        "K0_I": str(ses.K0_I),
        "K1_I": str(ses.K1_I),
        "K0_Q": str(ses.K0_Q),
        "K1_Q": str(ses.K1_Q),
        "delta0": ses.delta0.to_rows(),
        "delta1": ses.delta1.to_rows(),
    }
