"""
Compact open Hausdorff regions K ⊆ X, given as unions of whole strata (by base label).
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List

from src.errors import NonHausdorffRegionError, RegionError
from src.spaces.base import SpaceModel
from src.spaces.types import BasePoint

logger = logging.getLogger(__name__)

LABEL_SCAN_SAMPLES = 64


@dataclass(frozen=True)
class Region:
    labels: FrozenSet[str]

    @classmethod
    def of(cls, labels: Iterable[str]) -> "Region":
        return cls(frozenset(labels))

    @property
    def is_empty(self) -> bool:
        return not self.labels

    def __contains__(self, x: BasePoint) -> bool:
        return x.label in self.labels

    def validate(self, model: SpaceModel) -> None:
        """Raises NonHausdorffRegionError or RegionError unless K is a compact open Hausdorff subset of X."""
        known = set(model.point_labels())
        known |= {end.stratum for end in model.stratum_ends()}
        known |= {x.label for x in model.strata()}
        known |= {x.label for x in model.sample_bases(LABEL_SCAN_SAMPLES)}
        unknown = self.labels - known
        if unknown:
            raise RegionError(f"Unknown strata {sorted(unknown)} in the {model.kind} model.")

        for branch in model.branch_classes:
            inside = self.labels & branch.labels
            if inside and branch.parametric:
                raise NonHausdorffRegionError(
                    f"Region meets the branch locus '{branch.name}', whose points are pairwise non-separated."
                )
            if len(inside) > 1:
                raise NonHausdorffRegionError(
                    f"Region contains the non-separated points {sorted(inside)} of '{branch.name}'."
                )

        for end in model.stratum_ends():
            if end.stratum in self.labels and not end.points & self.labels:
                raise RegionError(
                    f"Region is not closed: the {end.end} end of '{end.stratum}' runs out of it."
                )
        for point in self.labels & model.point_labels():
            for end in model.stratum_ends():
                if point in end.points and end.stratum not in self.labels:
                    raise RegionError(
                        f"Region is not open: '{point}' is a limit of '{end.stratum}', which is not in the region."
                    )

    def lift_bases(self, bases: Iterable[BasePoint]) -> List[BasePoint]:
        return [x for x in bases if x.label in self.labels]
