"""Fiber matrices: the values f(y₁, y₂) of a groupoid element over one orbit."""
from dataclasses import dataclass

import numpy as np

from src.errors import IncompatibilityError, ValidationError
from src.spaces.types import Orbit, PointRef


@dataclass(frozen=True, eq=False)
class FiberMatrix:
    orbit: Orbit
    entries: np.ndarray

    def __post_init__(self):
        m = np.array(self.entries, dtype=complex)
        n = len(self.orbit)
        if m.shape != (n, n):
            raise ValidationError(
                f"A fiber matrix over an orbit of size {n} must be {n}x{n}, got shape {m.shape}."
            )
        if not np.all(np.isfinite(m)):
            raise ValidationError(f"Fiber matrix over {self.orbit.base_label} has non-finite entries.")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @classmethod
    def identity(cls, orbit: Orbit) -> "FiberMatrix":
        return cls(orbit, np.eye(len(orbit), dtype=complex))

    @classmethod
    def zeros(cls, orbit: Orbit) -> "FiberMatrix":
        return cls(orbit, np.zeros((len(orbit), len(orbit)), dtype=complex))

    @property
    def size(self) -> int:
        return len(self.orbit)

    def entry(self, y1: PointRef, y2: PointRef) -> complex:
        return complex(self.entries[self.orbit.index_of(y1), self.orbit.index_of(y2)])

    def _check_same_orbit(self, other: "FiberMatrix") -> None:
        if self.orbit.members != other.orbit.members:
            raise IncompatibilityError(
                f"Fiber matrices over {self.orbit.base_label} and {other.orbit.base_label} live on different orbits."
            )

    # --- *-algebra of one orbit ---
    def __matmul__(self, other: "FiberMatrix") -> "FiberMatrix":
        self._check_same_orbit(other)
        return FiberMatrix(self.orbit, self.entries @ other.entries)

    def __add__(self, other: "FiberMatrix") -> "FiberMatrix":
        self._check_same_orbit(other)
        return FiberMatrix(self.orbit, self.entries + other.entries)

    def __sub__(self, other: "FiberMatrix") -> "FiberMatrix":
        self._check_same_orbit(other)
        return FiberMatrix(self.orbit, self.entries - other.entries)

    def scale(self, c: complex) -> "FiberMatrix":
        return FiberMatrix(self.orbit, c * self.entries)

    def adjoint(self) -> "FiberMatrix":
        return FiberMatrix(self.orbit, self.entries.conj().T)

    # --- measurements ---
    def norm(self) -> float:
        """Operator norm (largest singular value)."""
        if self.size == 0:
            return 0.0
        return float(np.linalg.norm(self.entries, ord=2))

    def max_abs_entry(self) -> float:
        return float(np.max(np.abs(self.entries)))

    def trace(self) -> complex:
        return complex(np.trace(self.entries))

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(0.5 * (self.entries + self.entries.conj().T))

    def idempotency_defect(self) -> float:
        return (self @ self - self).norm()

    def selfadjoint_defect(self) -> float:
        return (self - self.adjoint()).norm()

    def allclose(self, other: "FiberMatrix", tol: float) -> bool:
        return self.orbit.members == other.orbit.members and (self - other).norm() <= tol
