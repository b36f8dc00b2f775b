"""
Smith normal form over ℤ with unimodular transforms, U·A·V = S.

Works on plain Python ints, so pivots never overflow. The reduction moves the
smallest nonzero entry of the trailing block to the pivot, clears its row and
column by division with remainder, and repeats until the pivot divides the
whole trailing block.
"""
from dataclasses import dataclass
from typing import List, Tuple

from src.ktheory.intmatrix import IntMatrix


@dataclass(frozen=True)
class SNFResult:
    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return tuple(d for d in self.S.diagonal_entries() if d != 0)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def _identity(n: int) -> List[List[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, target, source, factor):
    """row[target] += factor * row[source]"""
    if factor:
        src = m[source]
        m[target] = [a + factor * b for a, b in zip(m[target], src)]


def _add_col(m, target, source, factor):
    """col[target] += factor * col[source]"""
    if factor:
        for row in m:
            row[target] += factor * row[source]


def _smallest_pivot(S, t):
    best = None
    for i in range(t, len(S)):
        for j in range(t, len(S[i])):
            if S[i][j] != 0 and (best is None or abs(S[i][j]) < abs(S[best[0]][best[1]])):
                best = (i, j)
    return best


def _reduce_block(S, U, V, t) -> bool:
    m, n = len(S), len(S[0]) if S else 0
    while True:
        pivot = _smallest_pivot(S, t)
        if pivot is None:
            return False
        i0, j0 = pivot
        if i0 != t:
            _swap_rows(S, t, i0)
            _swap_rows(U, t, i0)
        if j0 != t:
            _swap_cols(S, t, j0)
            _swap_cols(V, t, j0)

        p = S[t][t]
        clean = True
        for i in range(t + 1, m):
            q = S[i][t] // p
            _add_row(S, i, t, -q)
            _add_row(U, i, t, -q)
            clean = clean and S[i][t] == 0
        for j in range(t + 1, n):
            q = S[t][j] // p
            _add_col(S, j, t, -q)
            _add_col(V, j, t, -q)
            clean = clean and S[t][j] == 0
        if not clean:
            continue

        offender = next(
            (i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p != 0),
            None,
        )
        if offender is not None:
            _add_row(S, t, offender, 1)
            _add_row(U, t, offender, 1)
            continue

        if p < 0:
            S[t] = [-e for e in S[t]]
            U[t] = [-e for e in U[t]]
        return True


def smith_normal_form(A: IntMatrix) -> SNFResult:
    """Returns U, S, V with U·A·V = S, U and V unimodular, S diagonal with d₁ | d₂ | … and dᵢ ≥ 0."""
    m, n = A.rows, A.cols
    S = A.to_rows()
    U, V = _identity(m), _identity(n)
    for t in range(min(m, n)):
        if not _reduce_block(S, U, V, t):
            break
    return SNFResult(
        U=IntMatrix.from_rows(U, cols=m),
        S=IntMatrix.from_rows(S, cols=n),
        V=IntMatrix.from_rows(V, cols=n),
    )
