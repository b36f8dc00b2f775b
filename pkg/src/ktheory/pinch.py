"""
K-theory of pinch spaces: M with every point of a closed set A split into k points.

The formula K*(X) ≅ K*(M) ⊕ K*(A)^{k−1} is cross-checked by an independent route
through the split extension whose ideal is Morita equivalent to C(M) and whose
quotient is the (k−1)-fold excess over A.
"""
import logging
from typing import Dict, Tuple

from src.errors import ParameterError
from src.ktheory.groups import FgAbGroup
from src.ktheory.intmatrix import IntMatrix
from src.ktheory.six_term import TwoStrataSES, solve_six_term

logger = logging.getLogger(__name__)

KPair = Tuple[FgAbGroup, FgAbGroup]

MANIFOLD_K: Dict[str, KPair] = {
    "point": (FgAbGroup.free(1), FgAbGroup.zero()),
    "circle": (FgAbGroup.free(1), FgAbGroup.free(1)),
    "sphere2": (FgAbGroup.free(2), FgAbGroup.zero()),
    "torus": (FgAbGroup.free(2), FgAbGroup.free(2)),
}


def manifold_k_theory(kind: str) -> KPair:
    try:
        return MANIFOLD_K[kind]
    except KeyError:
        raise ParameterError(f"No K-theory table entry for manifold '{kind}'; known: {sorted(MANIFOLD_K)}.") from None


def finite_set_k_theory(m: int) -> KPair:
    if m < 0:
        raise ParameterError(f"A finite set cannot have {m} points.")
    return FgAbGroup.free(m), FgAbGroup.zero()


def _check_sheets(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise ParameterError(f"The number of sheets k must be an integer ≥ 2, got {k!r}.")


def pinch_k_theory(K_M: KPair, K_A: KPair, k: int) -> KPair:
    _check_sheets(k)
    return (
        K_M[0] + K_A[0].power(k - 1),
        K_M[1] + K_A[1].power(k - 1),
    )


def pinch_strata_oracle(M_kind: str, A_size: int, k: int) -> KPair:
    """Solves the split extension 0 → I → A → Q → 0 with K*(I) = K*(C(M)) and K*(Q) = (ℤ^{m(k−1)}, 0)."""
    _check_sheets(k)
    K_M = manifold_k_theory(M_kind)
    K_A = finite_set_k_theory(A_size)
    ses = TwoStrataSES(
        K0_I=K_M[0],
        K1_I=K_M[1],
        K0_Q=K_A[0].power(k - 1),
        K1_Q=K_A[1].power(k - 1),
        delta0=IntMatrix.zeros(K_M[1].rank, A_size * (k - 1)),
        delta1=IntMatrix.zeros(K_M[0].rank, 0),
        source=f"pinch:{M_kind}:m={A_size}:k={k}",
    )
    K0, K1 = solve_six_term(ses)
    logger.debug("Pinch oracle M=%s m=%d k=%d: (%s, %s)", M_kind, A_size, k, K0, K1)
    return K0, K1