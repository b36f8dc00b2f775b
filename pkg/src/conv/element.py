"""
Algebra elements f ∈ C*(R(ψ)) at sample resolution: a rule that produces the fiber
matrix of f over the orbit of any base point.

Convolution over an equivalence-relation groupoid restricted to one orbit is matrix
multiplication, (f*g)(y₁, y₂) = Σ_{z∼y₁} f(y₁, z) g(z, y₂), so products, sums and
adjoints are all computed orbit by orbit.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Mapping, Optional

import numpy as np

from src.errors import IncompatibilityError, MissingSampleError, ParameterError
from src.conv.fiber import FiberMatrix
from src.conv.region import Region
from src.spaces.base import SpaceModel
from src.spaces.operations import orbit_over
from src.spaces.subspace import AugmentedModel, SubspaceModel
from src.spaces.twisted_sphere import EQUATOR, POLES, SPHERE, U, V1, V2, TwistedSphere
from src.spaces.types import BasePoint, Orbit

logger = logging.getLogger(__name__)

SECTION_CHECK_SAMPLES = 64


class Rule:
    """How an element produces its fiber matrix over an orbit."""

    name = "rule"

    def matrix(self, model: SpaceModel, x: BasePoint, orbit: Orbit) -> np.ndarray:
        raise NotImplementedError

    def describe(self) -> dict:
        return {"rule": self.name}


# --- builtins ---

def twisted_sphere_matrix(orbit: Orbit, x: BasePoint, diagonal_shift: float = 0.0) -> np.ndarray:
    """The full projection of the twisted sphere; `diagonal_shift` is added to the first diagonal entry."""
    if x.label == EQUATOR:
        m = np.ones((1, 1), dtype=complex)
    elif x.label in POLES:
        m = np.eye(2, dtype=complex)
    elif x.label == SPHERE:
        a = abs(x.coord[1])
        c = math.sqrt(a * (1.0 - a) / 2.0)
        m = np.zeros((4, 4), dtype=complex)
        v1 = next(i for i, y in enumerate(orbit) if y.chart == V1)
        v2 = next(i for i, y in enumerate(orbit) if y.chart == V2)
        m[v1, v1] = m[v2, v2] = a
        for i, y in enumerate(orbit):
            if y.chart != U:
                continue
            theta = y.coord[0]
            m[i, i] = 1.0 - a
            m[i, v1] = c
            m[i, v2] = np.exp(-1j * theta) * c
            m[v1, i] = np.conj(m[i, v1])
            m[v2, i] = np.conj(m[i, v2])
    else:
        raise ParameterError(f"{x} is not a base point of the twisted sphere.")
    m[0, 0] += diagonal_shift
    return m


@dataclass(frozen=True)
class BuiltinRule(Rule):
    builtin: str
    params: Mapping[str, float] = field(default_factory=dict)

    name = "builtin"

    def matrix(self, model, x, orbit):
        n = len(orbit)
        if self.builtin == "identity":
            return np.eye(n, dtype=complex)
        if self.builtin == "zero":
            return np.zeros((n, n), dtype=complex)
        if self.builtin == "twisted_sphere_projection":
            if not isinstance(model, TwistedSphere):
                raise IncompatibilityError(f"twisted_sphere_projection lives on the twisted sphere, not '{model.kind}'.")
            return twisted_sphere_matrix(orbit, x, float(self.params.get("diagonal_shift", 0.0)))
        raise ParameterError(f"Unknown builtin element '{self.builtin}'.")

    def describe(self):
        return {"rule": self.name, "name": self.builtin, "params": dict(self.params)}


BUILTINS = ("identity", "zero", "twisted_sphere_projection")


@dataclass(frozen=True, eq=False)
class GridRule(Rule):
    values: Dict[BasePoint, np.ndarray]

    name = "grid"

    def matrix(self, model, x, orbit):
        try:
            return self.values[x]
        except KeyError:
            raise MissingSampleError(f"The grid element has no value at {x}.") from None

    def describe(self):
        return {"rule": self.name, "points": len(self.values)}


@dataclass(frozen=True)
class IndicatorRule(Rule):
    """1 on the diagonal entry of the section point over K, 0 elsewhere."""
    region: Region

    name = "indicator"

    def matrix(self, model, x, orbit):
        n = len(orbit)
        m = np.zeros((n, n), dtype=complex)
        if x.label in self.region.labels:
            if isinstance(model, AugmentedModel):
                i = orbit.index_of(model.section_point(x))
            else:
                i = 0
            m[i, i] = 1.0
        return m

    def describe(self):
        return {"rule": self.name, "region": sorted(self.region.labels)}


# --- derived rules ---

@dataclass(frozen=True, eq=False)
class AdjointRule(Rule):
    f: "AlgebraElement"
    name = "adjoint"

    def matrix(self, model, x, orbit):
        return self.f.evaluate(x).entries.conj().T

    def describe(self):
        return {"rule": self.name, "of": self.f.describe()}


@dataclass(frozen=True, eq=False)
class ProductRule(Rule):
    f: "AlgebraElement"
    g: "AlgebraElement"
    name = "product"

    def matrix(self, model, x, orbit):
        return (self.f.evaluate(x) @ self.g.evaluate(x)).entries

    def describe(self):
        return {"rule": self.name, "of": [self.f.describe(), self.g.describe()]}


@dataclass(frozen=True, eq=False)
class SumRule(Rule):
    f: "AlgebraElement"
    g: "AlgebraElement"
    name = "sum"

    def matrix(self, model, x, orbit):
        return (self.f.evaluate(x) + self.g.evaluate(x)).entries

    def describe(self):
        return {"rule": self.name, "of": [self.f.describe(), self.g.describe()]}


@dataclass(frozen=True, eq=False)
class ScaleRule(Rule):
    c: complex
    f: "AlgebraElement"
    name = "scale"

    def matrix(self, model, x, orbit):
        return self.c * self.f.evaluate(x).entries

    def describe(self):
        return {"rule": self.name, "by": [self.c.real, self.c.imag], "of": self.f.describe()}


@dataclass(frozen=True, eq=False)
class RestrictedRule(Rule):
    f: "AlgebraElement"
    name = "restricted"

    def matrix(self, model, x, orbit):
        return self.f.evaluate(x).entries

    def describe(self):
        return {"rule": self.name, "of": self.f.describe()}


def same_model(a: SpaceModel, b: SpaceModel) -> bool:
    return a is b or (type(a) is type(b) and a.describe() == b.describe())


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    model: SpaceModel
    rule: Rule

    # --- constructors ---
    @classmethod
    def builtin(cls, model: SpaceModel, name: str, **params) -> "AlgebraElement":
        if name not in BUILTINS:
            raise ParameterError(f"Unknown builtin element '{name}'; known: {list(BUILTINS)}.")
        if name == "twisted_sphere_projection" and not isinstance(model, TwistedSphere):
            raise IncompatibilityError(f"twisted_sphere_projection lives on the twisted sphere, not '{model.kind}'.")
        return cls(model, BuiltinRule(name, dict(params)))

    @classmethod
    def identity(cls, model: SpaceModel) -> "AlgebraElement":
        return cls(model, BuiltinRule("identity"))

    @classmethod
    def zero(cls, model: SpaceModel) -> "AlgebraElement":
        return cls(model, BuiltinRule("zero"))

    @classmethod
    def grid(cls, model: SpaceModel, values: Mapping[BasePoint, object]) -> "AlgebraElement":
        """Values may be arrays or FiberMatrix objects; shapes are checked against the orbits."""
        table = {}
        for x, value in values.items():
            entries = value.entries if isinstance(value, FiberMatrix) else value
            table[x] = FiberMatrix(orbit_over(model, x), entries).entries
        return cls(model, GridRule(table))

    @classmethod
    def tabulate(cls, model: SpaceModel, bases, fn: Callable[[Orbit], np.ndarray]) -> "AlgebraElement":
        return cls.grid(model, {x: fn(orbit_over(model, x)) for x in bases})

    # --- evaluation ---
    def evaluate(self, x: BasePoint, orbit: Optional[Orbit] = None) -> FiberMatrix:
        orbit = orbit if orbit is not None else orbit_over(self.model, x)
        return FiberMatrix(orbit, self.rule.matrix(self.model, x, orbit))

    def describe(self) -> dict:
        info = self.rule.describe()
        info["model"] = self.model.kind
        return info

    # --- algebra ---
    def _check_compatible(self, other: "AlgebraElement") -> None:
        if not same_model(self.model, other.model):
            raise IncompatibilityError(
                f"Elements over '{self.model.kind}' and '{other.model.kind}' cannot be combined."
            )

    def adjoint(self) -> "AlgebraElement":
        return AlgebraElement(self.model, AdjointRule(self))

    def __matmul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_compatible(other)
        return AlgebraElement(self.model, ProductRule(self, other))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_compatible(other)
        return AlgebraElement(self.model, SumRule(self, other))

    def scale(self, c: complex) -> "AlgebraElement":
        return AlgebraElement(self.model, ScaleRule(complex(c), self))

    def restrict(self, sub: SubspaceModel) -> "AlgebraElement":
        if not isinstance(sub, SubspaceModel) or not same_model(sub.parent, self.model):
            raise IncompatibilityError("restrict needs a sub-model of the element's own model.")
        return AlgebraElement(sub, RestrictedRule(self))


def _orbits_are_singletons(model: SpaceModel, region: Region) -> bool:
    over = region.lift_bases(model.sample_bases(SECTION_CHECK_SAMPLES) + model.strata())
    return all(len(model.fiber(x)) == 1 for x in over)


def indicator_projection(model: SpaceModel, region: Region) -> AlgebraElement:
    """
    The projection 1_K for a compact open Hausdorff K ⊆ X. When ψ⁻¹(K) is not a
    section over K the element lives on Y ⊔ K instead of Y. A model that already
    carries a section over K is used as it is, so indicators of several regions
    can share one augmented model.
    """
    region.validate(model)
    if region.is_empty:
        return AlgebraElement.zero(model)
    if isinstance(model, AugmentedModel) and region.labels <= model.region_labels:
        return AlgebraElement(model, IndicatorRule(region))
    if not _orbits_are_singletons(model, region):
        logger.debug("augmenting %s with a section over %s", model.kind, sorted(region.labels))
        model = AugmentedModel(model, region.labels)
    return AlgebraElement(model, IndicatorRule(region))
