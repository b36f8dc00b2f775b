import json
import os
import sys
import tempfile
import unittest

# Add the project root directory to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.errors import ParameterError, UnsupportedInputError, ValidationError
from src.ktheory import ktheory_tool
from src.ktheory.groups import FgAbGroup
from src.ktheory.intmatrix import IntMatrix
from src.ktheory.pinch import finite_set_k_theory, manifold_k_theory, pinch_k_theory, pinch_strata_oracle
from src.ktheory.reference_data import AAB_AB_DELTA0, BROKEN_HEART_DELTA0, REFERENCES
from src.ktheory.ses_file import load_ses, parse_ses
from src.ktheory.six_term import TwoStrataSES, duality_check, k_homology, solve_six_term
from src.ktheory.stratified import Edge, OneDStratified, two_strata_ses, vertex_class_boundary

DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')

Z = FgAbGroup.free


class TestFgAbGroup(unittest.TestCase):

    def test_canonical_strings(self):
        self.assertEqual(str(FgAbGroup.zero()), "0")
        self.assertEqual(str(Z(1)), "Z")
        self.assertEqual(str(Z(2)), "Z^2")
        self.assertEqual(str(FgAbGroup(1, (2,))), "Z ⊕ Z/2")

    def test_parse_is_inverse_of_str(self):
        for group in [FgAbGroup.zero(), Z(1), Z(3), FgAbGroup(0, (2, 4)), FgAbGroup(2, (3,))]:
            self.assertEqual(FgAbGroup.parse(str(group)), group)

    def test_parse_canonicalizes_torsion(self):
        """ℤ/2 ⊕ ℤ/3 ≅ ℤ/6."""
        self.assertEqual(FgAbGroup.parse("Z/2 + Z/3"), FgAbGroup(0, (6,)))

    def test_parse_rejects_garbage(self):
        with self.assertRaises(ValidationError):
            FgAbGroup.parse("Q^2")

    def test_divisibility_chain_is_enforced(self):
        with self.assertRaises(ValidationError):
            FgAbGroup(0, (2, 3))
        with self.assertRaises(ValidationError):
            FgAbGroup(0, (1,))
        with self.assertRaises(ValidationError):
            FgAbGroup(-1)

    def test_direct_sum_and_power(self):
        self.assertEqual(Z(1) + Z(2), Z(3))
        self.assertEqual(FgAbGroup(0, (2,)) + FgAbGroup(0, (2,)), FgAbGroup(0, (2, 2)))
        self.assertEqual(Z(2).power(3), Z(6))
        self.assertEqual(Z(4).power(0), FgAbGroup.zero())


class TestSixTerm(unittest.TestCase):

    def test_aab_ab(self):
        ses = TwoStrataSES.free(0, 2, 3, 0, delta0=AAB_AB_DELTA0)
        self.assertEqual(solve_six_term(ses), (Z(2), Z(1)))

    def test_broken_heart(self):
        ses = TwoStrataSES.free(0, 1, 1, 0, delta0=BROKEN_HEART_DELTA0)
        self.assertEqual(solve_six_term(ses), (FgAbGroup.zero(), FgAbGroup.zero()))

    def test_broken_heart_sign_does_not_matter(self):
        ses = TwoStrataSES.free(0, 1, 1, 0, delta0=IntMatrix.from_rows([[-1]]))
        self.assertEqual(solve_six_term(ses), (FgAbGroup.zero(), FgAbGroup.zero()))

    def test_zero_maps_split(self):
        ses = TwoStrataSES.free(1, 2, 3, 4)
        self.assertEqual(solve_six_term(ses), (Z(4), Z(6)))

    def test_torsion_input_is_unsupported(self):
        ses = TwoStrataSES(
            FgAbGroup(0, (2,)), Z(1), Z(1), FgAbGroup.zero(),
            IntMatrix.zeros(1, 1), IntMatrix.zeros(0, 0),
        )
        with self.assertRaises(UnsupportedInputError):
            solve_six_term(ses)

    def test_shape_mismatch(self):
        ses = TwoStrataSES(Z(0), Z(2), Z(3), Z(0), IntMatrix.zeros(3, 2), IntMatrix.zeros(0, 0))
        with self.assertRaises(ValidationError):
            solve_six_term(ses)

    def test_swapping_degrees_swaps_groups(self):
        ses = TwoStrataSES.free(
            1, 2, 3, 2,
            delta0=IntMatrix.from_rows([[1, 2, 0], [0, 2, 4]]),
            delta1=IntMatrix.from_rows([[3, 0]]),
        )
        K0, K1 = solve_six_term(ses)
        self.assertEqual(solve_six_term(ses.swapped()), (K1, K0))

    def test_reference_extensions(self):
        for name, ref in REFERENCES.items():
            with self.subTest(name=name):
                self.assertEqual(solve_six_term(ref.ses), (ref.K0, ref.K1))


class TestKHomologyAndDuality(unittest.TestCase):

    def test_aab_ab_k_homology(self):
        self.assertEqual(k_homology(AAB_AB_DELTA0), (Z(2), Z(1)))

    def test_aab_ab_duality(self):
        K0, K1 = solve_six_term(TwoStrataSES.free(0, 2, 3, 0, delta0=AAB_AB_DELTA0))
        K0h, K1h = k_homology(AAB_AB_DELTA0)
        result = duality_check(K0, K1, K0h, K1h)
        self.assertTrue(result.even_self_dual)
        self.assertFalse(result.odd_self_dual_rationally)

    def test_zero_boundary_k_homology(self):
        """δ₀ᵀ is 3×2 zero: cokernel ℤ³, kernel ℤ²."""
        self.assertEqual(k_homology(IntMatrix.zeros(2, 3)), (Z(3), Z(2)))

    def test_broken_heart_k_homology(self):
        self.assertEqual(k_homology(BROKEN_HEART_DELTA0), (FgAbGroup.zero(), FgAbGroup.zero()))

    def test_trivial_groups(self):
        zero = FgAbGroup.zero()
        result = duality_check(zero, zero, zero, zero)
        self.assertTrue(result.even_self_dual)
        self.assertTrue(result.odd_self_dual_rationally)

    def test_circle_like_groups(self):
        result = duality_check(Z(1), Z(1), Z(1), Z(1))
        self.assertEqual(result.to_dict(), {"even_self_dual": True, "odd_self_dual_rationally": True})


class TestVertexClassBoundary(unittest.TestCase):

    def test_aab_ab_incidence(self):
        complex_ = OneDStratified(
            edges=(Edge("a", 2), Edge("b", 1)),
            vertex_classes=("ab", "ba", "aa"),
            incidence={
                ("a", "+"): {"ba": 1, "aa": 1},
                ("a", "-"): {"aa": 1, "ab": 1},
                ("b", "+"): {"ab": 1},
                ("b", "-"): {"ba": 1},
            },
        )
        self.assertEqual(vertex_class_boundary(complex_), AAB_AB_DELTA0)
        self.assertEqual(solve_six_term(two_strata_ses(complex_)), (Z(2), Z(1)))

    def test_both_ends_to_same_class_cancel(self):
        complex_ = OneDStratified(
            edges=(Edge("e", 1),),
            vertex_classes=("c",),
            incidence={("e", "+"): {"c": 1}, ("e", "-"): {"c": 1}},
        )
        self.assertEqual(vertex_class_boundary(complex_), IntMatrix.from_rows([[0]]))

    def test_positive_end_only(self):
        complex_ = OneDStratified(
            edges=(Edge("e", 1),),
            vertex_classes=("c",),
            incidence={("e", "+"): {"c": 1}},
        )
        self.assertEqual(vertex_class_boundary(complex_), IntMatrix.from_rows([[1]]))

    def test_malformed_incidence(self):
        cases = [
            dict(edges=(Edge("e", 0),), vertex_classes=("c",), incidence={("e", "+"): {"c": 1}}),
            dict(edges=(Edge("e", 1),), vertex_classes=("c",), incidence={("e", "+"): {"d": 1}}),
            dict(edges=(Edge("e", 1),), vertex_classes=("c",), incidence={("e", "+"): {"c": -1}}),
            dict(edges=(Edge("e", 1),), vertex_classes=("c",), incidence={("e", "+"): {"c": 2}}),
            dict(edges=(Edge("e", 1),), vertex_classes=("c",), incidence={("f", "+"): {"c": 1}}),
            dict(edges=(Edge("e", 1),), vertex_classes=("c",), incidence={}),
        ]
        for kwargs in cases:
            with self.subTest(kwargs=kwargs):
                with self.assertRaises(ValidationError):
                    OneDStratified(**kwargs)


class TestPinch(unittest.TestCase):

    def test_circle_with_finite_set(self):
        for m in range(0, 6):
            self.assertEqual(
                pinch_k_theory(manifold_k_theory("circle"), finite_set_k_theory(m), 2),
                (Z(1 + m), Z(1)),
            )

    def test_empty_set_gives_manifold(self):
        K_M = manifold_k_theory("torus")
        self.assertEqual(pinch_k_theory(K_M, (FgAbGroup.zero(), FgAbGroup.zero()), 2), K_M)

    def test_oracle_matches_formula(self):
        for m in range(1, 6):
            for k in range(2, 5):
                with self.subTest(m=m, k=k):
                    expected = pinch_k_theory(manifold_k_theory("circle"), finite_set_k_theory(m), k)
                    self.assertEqual(pinch_strata_oracle("circle", m, k), expected)

    def test_oracle_examples(self):
        self.assertEqual(pinch_strata_oracle("circle", 3, 2), (Z(4), Z(1)))
        self.assertEqual(pinch_strata_oracle("circle", 1, 3), (Z(3), Z(1)))
        self.assertEqual(pinch_strata_oracle("circle", 0, 2), (Z(1), Z(1)))

    def test_other_manifolds(self):
        for kind in ("point", "sphere2", "torus"):
            expected = pinch_k_theory(manifold_k_theory(kind), finite_set_k_theory(2), 3)
            self.assertEqual(pinch_strata_oracle(kind, 2, 3), expected)

    def test_rank_grows_linearly(self):
        ranks = [pinch_strata_oracle("circle", m, 2)[0].rank for m in range(10, 60, 10)]
        self.assertEqual([b - a for a, b in zip(ranks, ranks[1:])], [10] * 4)

    def test_invalid_parameters(self):
        with self.assertRaises(ParameterError):
            pinch_k_theory(manifold_k_theory("circle"), finite_set_k_theory(1), 1)
        with self.assertRaises(ParameterError):
            manifold_k_theory("klein-bottle")


class TestSESFile(unittest.TestCase):

    def test_aab_ab_file(self):
        ses = load_ses(os.path.join(DATA_DIR, 'aab_ab_ses.json'))
        self.assertEqual(ses.delta0, AAB_AB_DELTA0)
        self.assertEqual(solve_six_term(ses), (Z(2), Z(1)))

    def test_zero_map_data(self):
        ses = parse_ses({"K0_I": 1, "K1_I": 0, "K0_Q": 1, "K1_Q": 0})
        K0, K1 = solve_six_term(ses)
        self.assertEqual((str(K0), str(K1)), ("Z^2", "0"))

    def test_matrix_object_form(self):
        ses = parse_ses({
            "K0_I": "0", "K1_I": "Z", "K0_Q": {"rank": 1}, "K1_Q": 0,
            "delta0": {"rows": 1, "cols": 1, "entries": [1]},
        })
        self.assertEqual(ses.delta0, BROKEN_HEART_DELTA0)

    def test_unknown_field_is_rejected(self):
        with self.assertRaises(ValidationError):
            parse_ses({"K0_I": 0, "K1_I": 0, "K0_Q": 0, "K1_Q": 0, "delta2": []})

    def test_tool_status(self):
        result = ktheory_tool.solve_ses_file(os.path.join(DATA_DIR, 'aab_ab_ses.json'))
        self.assertEqual(result["status"], "success")
        self.assertEqual(result["message"], "K0 = Z^2, K1 = Z")

    def test_tool_reports_torsion_as_unsupported(self):
        result = ktheory_tool.solve_ses_file(os.path.join(DATA_DIR, 'torsion_ses.json'))
        self.assertEqual(result["status"], "unsupported")

    def test_tool_reports_bad_json(self):
        with tempfile.NamedTemporaryFile('w', suffix='.json', delete=False) as f:
            f.write("{not json")
            path = f.name
        try:
            self.assertEqual(ktheory_tool.solve_ses_file(path)["status"], "error")
        finally:
            os.remove(path)


if __name__ == '__main__':
    unittest.main()
