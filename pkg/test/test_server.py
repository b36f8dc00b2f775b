import json
import os
import sys
import unittest

from fastapi import HTTPException

# Add the project root directory to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.server import lab_server
from src.server.lab_server import ExampleRequest, SolveRequest, VerifyRequest

DATA_DIR = os.path.join(os.path.dirname(__file__), 'data')


def load(name):
    with open(os.path.join(DATA_DIR, name), 'r', encoding='utf-8') as f:
        return json.load(f)


class TestSolveEndpoint(unittest.TestCase):

    def test_solve(self):
        result = lab_server.solve_extension(SolveRequest(extension=load("broken_heart_ses.json")))
        self.assertEqual(result["status"], "success")
        self.assertEqual((result["K0"], result["K1"]), ("0", "0"))

    def test_unsupported_input_is_a_bad_request(self):
        with self.assertRaises(HTTPException) as cm:
            lab_server.solve_extension(SolveRequest(extension=load("torsion_ses.json")))
        self.assertEqual(cm.exception.status_code, 400)


class TestVerifyEndpoint(unittest.TestCase):

    def test_failed_verification_is_still_an_answer(self):
        result = lab_server.verify_element(VerifyRequest(document=load("circle_half_grid.json")))
        self.assertEqual(result["status"], "failure")
        self.assertAlmostEqual(result["report"]["max_idempotency_defect"], 0.25, places=12)

    def test_projection(self):
        request = VerifyRequest(document=load("twisted_sphere_p.json"), samples=200, workers=2)
        self.assertEqual(lab_server.verify_element(request)["status"], "success")

    def test_bad_document(self):
        with self.assertRaises(HTTPException) as cm:
            lab_server.verify_element(VerifyRequest(document=load("non_hausdorff_region.json")))
        self.assertEqual(cm.exception.status_code, 400)

    def test_ragged_grid_is_a_bad_request(self):
        document = {
            "model": {"kind": "twisted_sphere"},
            "element": {"rule": "grid", "values": [{"base": {"label": "north"}, "entries": [[1.0], [0.0, 1.0]]}]},
        }
        with self.assertRaises(HTTPException) as cm:
            lab_server.verify_element(VerifyRequest(document=document))
        self.assertEqual(cm.exception.status_code, 400)


class TestExampleEndpoint(unittest.TestCase):

    def test_run_example(self):
        result = lab_server.run_example(ExampleRequest(name="pinch", params={"m": 1, "k": 2}))
        self.assertEqual(result["status"], "success")
        self.assertTrue(result["report"]["passed"])

    def test_unknown_example(self):
        with self.assertRaises(HTTPException) as cm:
            lab_server.run_example(ExampleRequest(name="moebius"))
        self.assertEqual(cm.exception.status_code, 400)


if __name__ == '__main__':
    unittest.main()
