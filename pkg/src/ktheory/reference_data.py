"""Stored boundary matrices and expected groups for the shipped examples, with provenance tags."""
from dataclasses import dataclass
from typing import Dict

from src.ktheory.groups import FgAbGroup
from src.ktheory.intmatrix import IntMatrix
from src.ktheory.six_term import TwoStrataSES


@dataclass(frozen=True)
class ReferenceExtension:
    name: str
    provenance: str
    ses: TwoStrataSES
    K0: FgAbGroup
    K1: FgAbGroup
    note: str = ""


# Rows: edges (a, b). Columns: vertex classes (ab, ba, aa).
AAB_AB_DELTA0 = IntMatrix.from_rows([[-1, 1, 0], [1, -1, 0]])

# [[-1]] gives the same groups; the sign is not determined by the example.
BROKEN_HEART_DELTA0 = IntMatrix.from_rows([[1]])

REFERENCES: Dict[str, ReferenceExtension] = {
    "aab-ab": ReferenceExtension(
        name="aab-ab",
        provenance="reference: aab/ab solenoid, boundary map from the vertex classes",
        ses=TwoStrataSES.free(0, 2, 3, 0, delta0=AAB_AB_DELTA0, source="aab-ab"),
        K0=FgAbGroup.free(2),
        K1=FgAbGroup.free(1),
    ),
    "broken-heart": ReferenceExtension(
        name="broken-heart",
        provenance="reference: broken heart, boundary map is an isomorphism",
        ses=TwoStrataSES.free(0, 1, 1, 0, delta0=BROKEN_HEART_DELTA0, source="broken-heart"),
        K0=FgAbGroup.zero(),
        K1=FgAbGroup.zero(),
        note="delta0 = [[-1]] yields identical K-groups",
    ),
}


def reference(name: str) -> ReferenceExtension:
    return REFERENCES[name]
