"""
Finitely generated abelian groups in invariant-factor form, and the kernel and
cokernel of an integer matrix viewed as a map ℤ^cols → ℤ^rows.
"""
import re
from dataclasses import dataclass
from typing import Iterable, Tuple

from src.errors import ValidationError
from src.ktheory.intmatrix import IntMatrix
from src.ktheory.snf import smith_normal_form

SUM_SIGN = " ⊕ "


@dataclass(frozen=True)
class FgAbGroup:
    """ℤ^rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/dₙ with 2 ≤ d₁ | d₂ | … | dₙ."""
    rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        if isinstance(self.rank, bool) or not isinstance(self.rank, int) or self.rank < 0:
            raise ValidationError(f"Group rank must be a nonnegative integer, got {self.rank!r}.")
        object.__setattr__(self, "torsion", tuple(self.torsion))
        for d in self.torsion:
            if isinstance(d, bool) or not isinstance(d, int) or d < 2:
                raise ValidationError(f"Invariant factors must be integers ≥ 2, got {d!r}.")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValidationError(f"Invariant factors {self.torsion} do not form a divisibility chain.")

    @classmethod
    def free(cls, rank: int) -> "FgAbGroup":
        return cls(rank)

    @classmethod
    def zero(cls) -> "FgAbGroup":
        return cls(0)

    @classmethod
    def from_orders(cls, rank: int, orders: Iterable[int]) -> "FgAbGroup":
        """ℤ^rank ⊕ ⊕ ℤ/nᵢ for arbitrary cyclic orders nᵢ ≥ 1, brought to canonical form."""
        orders = [int(n) for n in orders]
        if any(n < 1 for n in orders):
            raise ValidationError(f"Cyclic orders must be positive, got {orders}.")
        if not orders:
            return cls(rank)
        factors = smith_normal_form(IntMatrix.diagonal(orders, len(orders), len(orders))).invariant_factors
        return cls(rank, tuple(d for d in factors if d > 1))

    @property
    def is_free(self) -> bool:
        return not self.torsion

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.torsion

    def direct_sum(self, other: "FgAbGroup") -> "FgAbGroup":
        return FgAbGroup.from_orders(self.rank + other.rank, self.torsion + other.torsion)

    def __add__(self, other: "FgAbGroup") -> "FgAbGroup":
        if not isinstance(other, FgAbGroup):
            return NotImplemented
        return self.direct_sum(other)

    def power(self, n: int) -> "FgAbGroup":
        """The n-fold direct sum; power(0) is the zero group."""
        if n < 0:
            raise ValidationError(f"Cannot take a negative number of copies ({n}).")
        return FgAbGroup.from_orders(self.rank * n, self.torsion * n)

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return SUM_SIGN.join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> "FgAbGroup":
        """Inverse of str(); also accepts '+' as the sum sign and non-canonical torsion like 'Z/2 ⊕ Z/3'."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        rank, orders = 0, []
        for part in re.split(r"\s*(?:⊕|\+)\s*", text):
            m = re.fullmatch(r"Z(?:\^(\d+))?|Z/(\d+)", part)
            if m is None:
                raise ValidationError(f"Cannot parse group summand '{part}' in '{text}'.")
            if m.group(2) is not None:
                orders.append(int(m.group(2)))
            else:
                rank += int(m.group(1)) if m.group(1) else 1
        return cls.from_orders(rank, orders)


def kernel(A: IntMatrix) -> FgAbGroup:
    """ker(A: ℤ^cols → ℤ^rows); always free."""
    return FgAbGroup(A.cols - smith_normal_form(A).rank)


def cokernel(A: IntMatrix) -> FgAbGroup:
    """ℤ^rows / im(A)."""
    factors = smith_normal_form(A).invariant_factors
    return FgAbGroup(A.rows - len(factors), tuple(d for d in factors if d > 1))
