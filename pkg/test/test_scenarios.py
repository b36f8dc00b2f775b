import json
import os
import sys
import time
import unittest

import numpy as np

# Add the project root directory to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.errors import ScenarioError
from src.scenarios import scenario_tool
from src.scenarios.report import ScenarioReport


class TestScenarios(unittest.TestCase):

    def _run(self, name, **params):
        report = scenario_tool.run_scenario(name, params)
        failed = [c for c in report.checks if not c.passed]
        self.assertTrue(report.passed, failed)
        self.assertEqual(report.exit_code, 0)
        return report

    def test_aab_ab(self):
        report = self._run("aab-ab", samples=300)
        checks = {c.name: c for c in report.checks}
        self.assertEqual(checks["K0"].actual, "Z^2")
        self.assertEqual(checks["K1"].actual, "Z")
        self.assertEqual(checks["K^0"].actual, "Z^2")
        self.assertEqual(checks["K^1"].actual, "Z")
        self.assertEqual(checks["odd duality (rational)"].actual, False)
        self.assertEqual(checks["fullness floor"].actual, 0.0)
        self.assertEqual(checks["largest fiber entry"].actual, 1.0)
        self.assertTrue(all(c.provenance for c in report.checks))

    def test_broken_heart(self):
        report = self._run("broken-heart")
        checks = {c.name: c for c in report.checks}
        self.assertEqual(checks["boundary map"].actual, [[1]])
        self.assertEqual(checks["K0"].actual, "0")
        self.assertEqual(checks["K1"].actual, "0")
        self.assertIn("no nonzero projections", report.flags)

    def test_broken_heart_wedge(self):
        report = self._run("broken-heart-wedge", samples=300)
        self.assertEqual(report.values["fullness_floor"], 0.0)
        self.assertIn("no full projection", report.flags)

    def test_twisted_sphere(self):
        report = self._run("twisted-sphere", samples=1000, workers=2)
        self.assertGreaterEqual(report.values["samples_used"], 1000)
        names = [c.name for c in report.checks]
        self.assertIn("continuity z->0+", names)
        self.assertIn("continuity z->0-", names)

    def test_pinch_defaults(self):
        report = self._run("pinch")
        self.assertEqual(report.values["K0"], "Z^4")
        self.assertEqual(report.values["K1"], "Z")
        np.testing.assert_allclose(report.values["A"], [0.0, 1 / 11, 1 / 10], atol=1e-12)

    def test_pinch_connected_covering(self):
        self._run("pinch", m=2, k=3, covering="connected", samples=200)

    def test_pinch_without_a_circle_model(self):
        """Only the K-theory checks run when M is not the circle."""
        report = self._run("pinch", m=1, k=2, M_kind="torus")
        self.assertTrue(any("skipped" in flag for flag in report.flags))
        self.assertFalse(any(c.name.startswith("orbit sizes") for c in report.checks))

    def test_string_parameters_are_converted(self):
        report = self._run("pinch", m="2", k="4", samples="100")
        self.assertEqual(report.parameters["k"], 4)


class TestScenarioErrors(unittest.TestCase):

    def test_unknown_scenario(self):
        with self.assertRaises(ScenarioError):
            scenario_tool.run_scenario("moebius")
        result = scenario_tool.run_example("moebius")
        self.assertEqual(result["status"], "error")
        self.assertIn("moebius", result["message"])

    def test_parameters_out_of_range(self):
        for params in ({"k": 1}, {"m": 0}, {"m": 51}, {"M_kind": "klein"}, {"colour": "red"}):
            with self.subTest(params=params):
                with self.assertRaises(ScenarioError):
                    scenario_tool.run_scenario("pinch", params)

    def test_broken_heart_takes_no_parameters(self):
        result = scenario_tool.run_example("broken-heart", {"samples": 10})
        self.assertEqual(result["status"], "error")


class TestReportRendering(unittest.TestCase):

    def setUp(self):
        self.report = scenario_tool.run_scenario("broken-heart")

    def test_json_and_text_agree(self):
        data = json.loads(self.report.to_json())
        self.assertEqual(data["scenario"], "broken-heart")
        self.assertTrue(data["passed"])
        text = self.report.to_text()
        for check in data["checks"]:
            actual = check["actual"]
            shown = actual if isinstance(actual, str) else json.dumps(actual, ensure_ascii=False)
            self.assertIn(f"{check['name']}: {shown}", text)
        self.assertTrue(text.endswith("result: PASS"))

    def test_status_dictionary_round_trips_the_report(self):
        result = scenario_tool.run_example("broken-heart")
        self.assertEqual(result["status"], "success")
        report = ScenarioReport.model_validate(result["report"])
        self.assertEqual(report.checks, self.report.checks)

    def test_failed_check_changes_the_exit_code(self):
        self.report.expect_equal("extra", 1, 2, "test")
        self.assertFalse(self.report.passed)
        self.assertEqual(self.report.exit_code, 1)
        self.assertIn("[FAIL] extra", self.report.to_text())


@unittest.skipUnless(
    os.environ.get('RUN_TIMING_TESTS') == 'true',
    "Skipping timing tests. Set RUN_TIMING_TESTS=true to run them."
)
class TestScenarioTiming(unittest.TestCase):

    def test_twisted_sphere_with_default_samples(self):
        """Ten thousand samples plus the strata in at most five seconds."""
        start = time.perf_counter()
        report = scenario_tool.run_scenario("twisted-sphere")
        elapsed = time.perf_counter() - start
        self.assertTrue(report.passed)
        self.assertLessEqual(elapsed, 5.0)


if __name__ == '__main__':
    unittest.main()
