import itertools
import math
import unittest
import sys
import os

import numpy as np
from sympy import Matrix

# Add the project root directory to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.ktheory.groups import FgAbGroup, cokernel, kernel
from src.ktheory.intmatrix import IntMatrix
from src.ktheory.snf import smith_normal_form


def random_matrix(rng, max_dim=8, bound=20):
    rows = int(rng.integers(1, max_dim + 1))
    cols = int(rng.integers(1, max_dim + 1))
    entries = rng.integers(-bound, bound + 1, size=rows * cols)
    return IntMatrix(rows, cols, tuple(int(e) for e in entries))


def random_unimodular(rng, n, steps=12):
    """Product of random elementary operations applied to the identity."""
    m = IntMatrix.identity(n).to_rows()
    for _ in range(steps):
        i, j = (int(v) for v in rng.integers(0, n, size=2))
        op = int(rng.integers(0, 3))
        if op == 0 and i != j:
            factor = int(rng.integers(-3, 4))
            m[i] = [a + factor * b for a, b in zip(m[i], m[j])]
        elif op == 1:
            m[i], m[j] = m[j], m[i]
        else:
            m[i] = [-a for a in m[i]]
    return IntMatrix.from_rows(m, cols=n)


def determinantal_divisors(A: IntMatrix, k: int) -> int:
    """gcd of all k×k minors, computed with sympy."""
    rows = A.to_rows()
    g = 0
    for r in itertools.combinations(range(A.rows), k):
        for c in itertools.combinations(range(A.cols), k):
            minor = Matrix([[rows[i][j] for j in c] for i in r]).det()
            g = math.gcd(g, int(minor))
    return g


class TestSmithNormalFormExamples(unittest.TestCase):

    def test_identity(self):
        result = smith_normal_form(IntMatrix.identity(3))
        self.assertEqual(result.S, IntMatrix.identity(3))

    def test_two_by_two(self):
        """gcd of entries is 2 and |det| is 8."""
        result = smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]]))
        self.assertEqual(result.S, IntMatrix.diagonal([2, 4], 2, 2))

    def test_aab_ab_boundary_has_rank_one(self):
        A = IntMatrix.from_rows([[-1, 1, 0], [1, -1, 0]])
        result = smith_normal_form(A)
        self.assertEqual(result.S, IntMatrix.diagonal([1, 0], 2, 3))
        self.assertEqual(result.rank, 1)

    def test_zero_and_empty_matrices(self):
        for rows, cols in [(0, 0), (0, 4), (3, 0), (2, 5)]:
            A = IntMatrix.zeros(rows, cols)
            result = smith_normal_form(A)
            self.assertEqual(result.S, A)
            self.assertEqual(result.U @ A @ result.V, result.S)

    def test_large_entries_stay_exact(self):
        big = 10 ** 30
        A = IntMatrix.from_rows([[big, big + 1], [big - 1, big]])
        result = smith_normal_form(A)
        self.assertEqual(result.U @ A @ result.V, result.S)
        # det = big² − (big² − 1) = 1
        self.assertEqual(result.S, IntMatrix.identity(2))


class TestSmithNormalFormProperties(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(20240601)

    def test_postconditions_on_random_matrices(self):
        """U·A·V = S, U and V unimodular, S diagonal with a divisibility chain."""
        for _ in range(500):
            A = random_matrix(self.rng)
            result = smith_normal_form(A)
            self.assertEqual(result.U @ A @ result.V, result.S)
            self.assertEqual(abs(result.U.determinant()), 1)
            self.assertEqual(abs(result.V.determinant()), 1)
            self.assertTrue(result.S.is_diagonal())

            diag = result.S.diagonal_entries()
            self.assertTrue(all(d >= 0 for d in diag))
            nonzero = [d for d in diag if d]
            self.assertEqual(diag[:len(nonzero)], nonzero, "zeros must come last")
            for a, b in zip(nonzero, nonzero[1:]):
                self.assertEqual(b % a, 0)
            self.assertEqual(result.rank, Matrix(A.to_rows()).rank())

    def test_invariant_factors_match_determinantal_divisors(self):
        for _ in range(60):
            A = random_matrix(self.rng, max_dim=4, bound=9)
            factors = smith_normal_form(A).invariant_factors
            product = 1
            for k, d in enumerate(factors, start=1):
                product *= d
                self.assertEqual(product, determinantal_divisors(A, k))

    def test_kernel_and_cokernel_are_basis_invariant(self):
        for _ in range(500):
            A = random_matrix(self.rng)
            P = random_unimodular(self.rng, A.rows)
            Q = random_unimodular(self.rng, A.cols)
            B = P @ A @ Q
            self.assertEqual(kernel(B), kernel(A))
            self.assertEqual(cokernel(B), cokernel(A))

    def test_rank_nullity(self):
        for _ in range(200):
            A = random_matrix(self.rng)
            r = smith_normal_form(A).rank
            self.assertEqual(kernel(A).rank + r, A.cols)
            self.assertEqual(cokernel(A).rank + r, A.rows)


class TestKernelCokernel(unittest.TestCase):

    def setUp(self):
        self.delta0 = IntMatrix.from_rows([[-1, 1, 0], [1, -1, 0]])

    def test_aab_ab_boundary(self):
        self.assertEqual(kernel(self.delta0), FgAbGroup.free(2))
        self.assertEqual(cokernel(self.delta0), FgAbGroup.free(1))

    def test_aab_ab_transpose(self):
        self.assertEqual(cokernel(self.delta0.transpose()), FgAbGroup.free(2))
        self.assertEqual(kernel(self.delta0.transpose()), FgAbGroup.free(1))

    def test_zero_rows_map(self):
        self.assertEqual(kernel(IntMatrix.zeros(0, 5)), FgAbGroup.free(5))
        self.assertEqual(cokernel(IntMatrix.zeros(0, 5)), FgAbGroup.zero())

    def test_index_two_image(self):
        self.assertEqual(cokernel(IntMatrix.from_rows([[2]])), FgAbGroup(0, (2,)))
        self.assertEqual(str(cokernel(IntMatrix.from_rows([[2]]))), "Z/2")


if __name__ == '__main__':
    unittest.main()
