"""Integer matrices with arbitrary-precision entries, stored row-major."""
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix

from src.errors import ValidationError


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValidationError(f"Negative matrix shape {self.rows}x{self.cols}.")
        if len(self.entries) != self.rows * self.cols:
            raise ValidationError(
                f"A {self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}."
            )
        for e in self.entries:
            if isinstance(e, bool) or not isinstance(e, int):
                raise ValidationError(f"Matrix entries must be integers, got {e!r}.")

    # --- constructors ---
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else (cols or 0)
        if cols is not None and rows and width != cols:
            raise ValidationError(f"Expected {cols} columns, got {width}.")
        if any(len(r) != width for r in rows):
            raise ValidationError("Rows have different lengths.")
        return cls(len(rows), width, tuple(int(e) for r in rows for e in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int, cols: int) -> "IntMatrix":
        entries = [0] * (rows * cols)
        for i, v in enumerate(values):
            entries[i * cols + i] = int(v)
        return cls(rows, cols, tuple(entries))

    # --- access ---
    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def to_rows(self) -> List[List[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def diagonal_entries(self) -> List[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    # --- algebra ---
    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValidationError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}.")
        a, b = self.to_rows(), other.to_rows()
        out = [sum(a[i][k] * b[k][j] for k in range(self.cols)) for i in range(self.rows) for j in range(other.cols)]
        return IntMatrix(self.rows, other.cols, tuple(out))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-e for e in self.entries))

    def determinant(self) -> int:
        if self.rows != self.cols:
            raise ValidationError("Determinant of a non-square matrix.")
        if self.rows == 0:
            return 1
        return int(Matrix(self.to_rows()).det(method="bareiss"))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j)

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.to_rows()) + "]"
