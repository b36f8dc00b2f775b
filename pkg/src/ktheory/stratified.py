"""
One-dimensional stratifications: an ideal made of open edges (each a C₀((0,1)) ⊗ M_rank
block) and a quotient made of vertex classes (point evaluations). The boundary map
K₀(Q) → K₁(I) is read off the edge-end incidence.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

from src.errors import ValidationError
from src.ktheory.intmatrix import IntMatrix
from src.ktheory.six_term import TwoStrataSES

logger = logging.getLogger(__name__)

POSITIVE, NEGATIVE = "+", "-"
SIGNS = (POSITIVE, NEGATIVE)

EndKey = Tuple[str, str]


@dataclass(frozen=True)
class Edge:
    name: str
    rank: int


@dataclass(frozen=True, eq=False)
class OneDStratified:
    """
    `incidence[(edge, sign)]` maps a vertex class to how many sheets of the edge run
    into that class at that end. Sheets not counted at an end escape the quotient.
    """
    edges: Tuple[Edge, ...]
    vertex_classes: Tuple[str, ...]
    incidence: Mapping[EndKey, Mapping[str, int]]

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        names = [e.name for e in self.edges]
        if len(set(names)) != len(names):
            raise ValidationError(f"Edge names must be unique, got {names}.")
        if len(set(self.vertex_classes)) != len(self.vertex_classes):
            raise ValidationError(f"Vertex classes must be unique, got {list(self.vertex_classes)}.")
        classes = set(self.vertex_classes)
        ranks = {e.name: e.rank for e in self.edges}
        for edge in self.edges:
            if isinstance(edge.rank, bool) or not isinstance(edge.rank, int) or edge.rank < 1:
                raise ValidationError(f"Edge '{edge.name}' has rank {edge.rank!r}; ranks must be ≥ 1.")

        for key, counts in self.incidence.items():
            if not (isinstance(key, tuple) and len(key) == 2 and key[0] in ranks and key[1] in SIGNS):
                raise ValidationError(f"Incidence key {key!r} is not an (edge, '+'/'-') end.")
            for cls, mult in counts.items():
                if cls not in classes:
                    raise ValidationError(f"End {key} is incident to unknown vertex class '{cls}'.")
                if isinstance(mult, bool) or not isinstance(mult, int) or mult < 0:
                    raise ValidationError(f"Multiplicity {mult!r} at end {key} must be a nonnegative integer.")
            if sum(counts.values()) > ranks[key[0]]:
                raise ValidationError(
                    f"End {key} carries {sum(counts.values())} sheets but edge '{key[0]}' has rank {ranks[key[0]]}."
                )

        for edge in self.edges:
            if not any(self._end(edge.name, sign) for sign in SIGNS):
                raise ValidationError(f"Edge '{edge.name}' is not incident to any vertex class.")

    def _end(self, edge: str, sign: str) -> Dict[str, int]:
        return {c: m for c, m in self.incidence.get((edge, sign), {}).items() if m}


def vertex_class_boundary(c: OneDStratified) -> IntMatrix:
    """Rows are edges, columns are vertex classes; entry = Σ positive-end multiplicity − Σ negative-end multiplicity."""
    rows = []
    for edge in c.edges:
        plus, minus = c._end(edge.name, POSITIVE), c._end(edge.name, NEGATIVE)
        rows.append([plus.get(cls, 0) - minus.get(cls, 0) for cls in c.vertex_classes])
    return IntMatrix.from_rows(rows, cols=len(c.vertex_classes))


def two_strata_ses(c: OneDStratified, source: str = None) -> TwoStrataSES:
    """K*(I) = (0, ℤ^edges) for the open edges, K*(Q) = (ℤ^classes, 0) for the contractible vertex classes."""
    return TwoStrataSES.free(
        k0_i=0,
        k1_i=len(c.edges),
        k0_q=len(c.vertex_classes),
        k1_q=0,
        delta0=vertex_class_boundary(c),
        source=source,
    )
