"""
Six-term exact sequence for a two-strata extension 0 → I → A → Q → 0 with free
K-groups:

    K₀(I) → K₀(A) → K₀(Q)
      ↑δ₁              ↓δ₀
    K₁(Q) ← K₁(A) ← K₁(I)

Kernels of integer matrices are free, so both short exact pieces split and
K₀(A) = coker δ₁ ⊕ ker δ₀, K₁(A) = coker δ₀ ⊕ ker δ₁.
"""
import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

from src.errors import UnsupportedInputError, ValidationError
from src.ktheory.groups import FgAbGroup, cokernel, kernel
from src.ktheory.intmatrix import IntMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwoStrataSES:
    K0_I: FgAbGroup
    K1_I: FgAbGroup
    K0_Q: FgAbGroup
    K1_Q: FgAbGroup
    delta0: IntMatrix  # K₀(Q) → K₁(I)
    delta1: IntMatrix  # K₁(Q) → K₀(I)
    source: Optional[str] = field(default=None, compare=False)

    @classmethod
    def free(
        cls,
        k0_i: int,
        k1_i: int,
        k0_q: int,
        k1_q: int,
        delta0: Optional[IntMatrix] = None,
        delta1: Optional[IntMatrix] = None,
        source: Optional[str] = None,
    ) -> "TwoStrataSES":
        """Free groups of the given ranks; a missing boundary map is the zero map."""
        return cls(
            FgAbGroup.free(k0_i),
            FgAbGroup.free(k1_i),
            FgAbGroup.free(k0_q),
            FgAbGroup.free(k1_q),
            delta0 if delta0 is not None else IntMatrix.zeros(k1_i, k0_q),
            delta1 if delta1 is not None else IntMatrix.zeros(k0_i, k1_q),
            source,
        )

    def validate(self) -> None:
        for name in ("K0_I", "K1_I", "K0_Q", "K1_Q"):
            group = getattr(self, name)
            if not group.is_free:
                raise UnsupportedInputError(
                    f"{name} = {group} has torsion; only free K-groups are supported."
                )
        expected = {
            "delta0": (self.K1_I.rank, self.K0_Q.rank),
            "delta1": (self.K0_I.rank, self.K1_Q.rank),
        }
        for name, shape in expected.items():
            matrix = getattr(self, name)
            if (matrix.rows, matrix.cols) != shape:
                raise ValidationError(
                    f"{name} is {matrix.rows}x{matrix.cols} but the group ranks require {shape[0]}x{shape[1]}."
                )

    def swapped(self) -> "TwoStrataSES":
        """The same extension with degrees shifted by one (K₀ ↔ K₁ on both strata)."""
        return TwoStrataSES(
            self.K1_I, self.K0_I, self.K1_Q, self.K0_Q, self.delta1, self.delta0, self.source
        )


def solve_six_term(s: TwoStrataSES) -> Tuple[FgAbGroup, FgAbGroup]:
    s.validate()
    K0 = cokernel(s.delta1) + kernel(s.delta0)
    K1 = cokernel(s.delta0) + kernel(s.delta1)
    logger.debug("Six-term solve%s: K0 = %s, K1 = %s", f" ({s.source})" if s.source else "", K0, K1)
    return K0, K1


def k_homology(delta0: IntMatrix) -> Tuple[FgAbGroup, FgAbGroup]:
    """(K⁰, K¹) from the transposed boundary map, for extensions with K₀(I) = K₁(Q) = 0."""
    dual = delta0.transpose()
    return cokernel(dual), kernel(dual)


@dataclass(frozen=True)
class DualityResult:
    even_self_dual: bool
    odd_self_dual_rationally: bool

    def to_dict(self) -> dict:
        return {"even_self_dual": self.even_self_dual, "odd_self_dual_rationally": self.odd_self_dual_rationally}


def duality_check(K0: FgAbGroup, K1: FgAbGroup, K0h: FgAbGroup, K1h: FgAbGroup) -> DualityResult:
    return DualityResult(
        even_self_dual=(K0 == K0h and K1 == K1h),
        odd_self_dual_rationally=(K0.rank == K1h.rank and K1.rank == K0h.rank),
    )
