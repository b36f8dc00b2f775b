"""
This module serves as the public API facade for the spaces package.
It re-exports the models and the operations over them.
"""

from .arc_graph import Arc, ArcGraphModel, ArcLift, BrokenHeart, SolenoidAabAb
from .base import SpaceModel
from .circle import Circle
from .cover import CoverChart, CoverModel, star_cover
from .model_file import parse_model
from .operations import (
    approach_sequences,
    build_cover_groupoid,
    factor,
    orbit_over,
    resolve_orbit,
    subspace,
    wedge,
)
from .pinch import PinchModel
from .subspace import AugmentedModel, SubspaceModel
from .twisted_sphere import TwistedSphere
from .types import ApproachSequence, BasePoint, BranchClass, Chart, Orbit, PointRef
from .wedge import WedgeModel

__all__ = [
    'ApproachSequence',
    'Arc',
    'ArcGraphModel',
    'ArcLift',
    'AugmentedModel',
    'BasePoint',
    'BranchClass',
    'BrokenHeart',
    'Chart',
    'Circle',
    'CoverChart',
    'CoverModel',
    'Orbit',
    'PinchModel',
    'PointRef',
    'SolenoidAabAb',
    'SpaceModel',
    'SubspaceModel',
    'TwistedSphere',
    'WedgeModel',
    'approach_sequences',
    'build_cover_groupoid',
    'factor',
    'orbit_over',
    'parse_model',
    'resolve_orbit',
    'star_cover',
    'subspace',
    'wedge',
]
