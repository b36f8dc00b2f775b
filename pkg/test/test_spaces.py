import math
import os
import sys
import unittest

import numpy as np

# Add the project root directory to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.errors import (
    BranchLookupError,
    CoverageError,
    DomainError,
    InvalidWedgeError,
    InvarianceError,
    ParameterError,
    ValidationError,
)
from src.spaces.arc_graph import BrokenHeart, SolenoidAabAb
from src.spaces.circle import Circle
from src.spaces.cover import CoverChart, CoverModel, star_cover, whole_stratum
from src.spaces.space_tool import parse_model
from src.spaces.operations import (
    approach_sequences,
    build_cover_groupoid,
    factor,
    orbit_over,
    resolve_orbit,
    subspace,
    wedge,
)
from src.spaces.pinch import PinchModel
from src.spaces.twisted_sphere import U, V1, V2, TwistedSphere
from src.spaces.types import BasePoint, PointRef
from src.spaces.wedge import WedgeModel

SOLENOID_B_POINT = PointRef(0, coord=(0.25,))
BROKEN_HEART_P = PointRef(0, coord=(0.0,))


class TestTwistedSphereOrbits(unittest.TestCase):

    def setUp(self):
        self.model = TwistedSphere()

    def test_equator_point_is_its_own_orbit(self):
        orbit = resolve_orbit(self.model, PointRef(U, coord=(0.3, 0.0)))
        self.assertEqual(len(orbit), 1)
        self.assertEqual(orbit.base_label.label, "equator")

    def test_generic_point_has_four_members(self):
        orbit = resolve_orbit(self.model, PointRef(U, coord=(0.3, 0.5)))
        self.assertEqual(len(orbit), 4)
        charts = [y.chart for y in orbit]
        self.assertEqual(charts, [U, U, V1, V2])
        self.assertAlmostEqual(orbit.members[1].coord[0], 0.3 + math.pi, places=9)
        self.assertAlmostEqual(orbit.members[2].coord[0], 0.6, places=9)
        self.assertAlmostEqual(orbit.members[3].coord[0], 0.6, places=9)

    def test_pole_orbit(self):
        orbit = resolve_orbit(self.model, PointRef(V1, "north"))
        self.assertEqual(orbit.members, (PointRef(V1, "north"), PointRef(V2, "north")))

    def test_resolution_is_idempotent(self):
        """Resolving from any member gives the same ordered members."""
        orbit = resolve_orbit(self.model, PointRef(U, coord=(2.0, -0.7)))
        for member in orbit:
            self.assertEqual(resolve_orbit(self.model, member).members, orbit.members)

    def test_angles_wrap_around(self):
        eps = 5e-10
        near_period = resolve_orbit(self.model, PointRef(U, coord=(2 * math.pi - eps, 0.5)))
        self.assertEqual(near_period.base_label, BasePoint.of("sphere", 0.0, 0.5))
        self.assertEqual(resolve_orbit(self.model, PointRef(V1, coord=(2 * math.pi - eps, 0.5))).members,
                         near_period.members)
        unreduced = resolve_orbit(self.model, PointRef(U, coord=(0.3 + 2 * math.pi, 0.5)))
        self.assertEqual(unreduced.members, resolve_orbit(self.model, PointRef(U, coord=(0.3, 0.5))).members)

    def test_coordinates_outside_the_domain(self):
        with self.assertRaises(DomainError):
            resolve_orbit(self.model, PointRef(U, coord=(0.3, 1.0)))
        with self.assertRaises(DomainError):
            resolve_orbit(self.model, PointRef(V1, coord=(0.3, 0.0)))
        with self.assertRaises(DomainError):
            resolve_orbit(self.model, PointRef(U, "north"))
        with self.assertRaises(DomainError):
            resolve_orbit(self.model, PointRef(7, coord=(0.3, 0.5)))

    def test_samples_and_strata(self):
        samples = self.model.sample_bases(200, seed=3)
        self.assertEqual(len(samples), 200)
        self.assertTrue(all(len(orbit_over(self.model, x)) == 4 for x in samples))
        labels = {x.label for x in self.model.strata()}
        self.assertEqual(labels, {"equator", "north", "south"})

    def test_orbits_partition_the_sampled_points(self):
        """Orbits of random points of Y are equal or disjoint."""
        rng = np.random.default_rng(7)
        points = []
        for _ in range(60):
            chart = int(rng.integers(0, 3))
            theta = float(rng.uniform(0, 2 * math.pi))
            z = float(rng.choice([-1, 1]) * rng.uniform(0.05, 0.95))
            points.append(PointRef(chart, coord=(theta, z)))
        orbits = [frozenset(resolve_orbit(self.model, y).members) for y in points]
        for a in orbits:
            for b in orbits:
                self.assertTrue(a == b or not (a & b))


class TestCircleOrbits(unittest.TestCase):

    def test_point_just_below_the_period(self):
        orbit = resolve_orbit(Circle(), PointRef(0, coord=(1.0 - 5e-10,)))
        self.assertEqual(orbit.members, (PointRef(0, coord=(0.0,)),))

    def test_unreduced_coordinate(self):
        orbit = resolve_orbit(Circle(), PointRef(0, coord=(-0.75,)))
        self.assertEqual(orbit.base_label, BasePoint.of("circle", 0.25))


class TestPinchOrbits(unittest.TestCase):

    def test_trivial_covering(self):
        """Off A every orbit has k members; over A every sheet is alone."""
        model = PinchModel([0.25, 0.5], k=3)
        for x in model.sample_bases(200):
            self.assertEqual(len(orbit_over(model, x)), 3)
        for x in model.strata():
            self.assertEqual(len(orbit_over(model, x)), 1)
        self.assertEqual(len(model.strata()), 6)

    def test_connected_covering(self):
        model = PinchModel([0.3], k=2, covering="connected")
        for x in model.sample_bases(100):
            orbit = orbit_over(model, x)
            self.assertEqual(len(orbit), 2)
            self.assertEqual({model.base_of(y) for y in orbit}, {x})
        split = resolve_orbit(model, PointRef(0, coord=(0.15,)))
        self.assertEqual(len(split), 1)
        self.assertEqual(split.base_label.label, "split:0")

    def test_invalid_parameters(self):
        with self.assertRaises(ParameterError):
            PinchModel([0.5], k=1)
        with self.assertRaises(ParameterError):
            PinchModel([0.5, 0.5], k=2)
        with self.assertRaises(ParameterError):
            PinchModel([0.5], k=2, covering="twisted")


class TestCoverGroupoid(unittest.TestCase):

    def test_single_chart_gives_singletons(self):
        model = build_cover_groupoid(Circle(), [CoverChart("all", intervals=(whole_stratum("circle"),))])
        for x in model.sample_bases(50) + model.strata():
            self.assertEqual(len(orbit_over(model, x)), 1)

    def test_overlap_of_two_charts(self):
        charts = [
            CoverChart("U0", intervals=(("circle", 0.0, 0.6),)),
            CoverChart("U1", intervals=(("circle", 0.5, 0.1),)),
        ]
        model = build_cover_groupoid(Circle(), charts)
        self.assertEqual(len(orbit_over(model, BasePoint.of("circle", 0.55))), 2)
        self.assertEqual(len(orbit_over(model, BasePoint.of("circle", 0.05))), 2)
        self.assertEqual(len(orbit_over(model, BasePoint.of("circle", 0.3))), 1)

    def test_intervals_with_one_open_end(self):
        lower = CoverChart("lower", intervals=(("circle", None, 0.6),))
        upper = CoverChart("upper", intervals=(("circle", 0.4, None),))
        self.assertTrue(lower.contains(BasePoint.of("circle", 0.1)))
        self.assertFalse(lower.contains(BasePoint.of("circle", 0.7)))
        self.assertTrue(upper.contains(BasePoint.of("circle", 0.9)))
        self.assertFalse(upper.contains(BasePoint.of("circle", 0.3)))
        model = build_cover_groupoid(Circle(), [lower, upper])
        self.assertEqual(len(orbit_over(model, BasePoint.of("circle", 0.5))), 2)

    def test_uncovered_point(self):
        with self.assertRaises(CoverageError):
            build_cover_groupoid(Circle(), [CoverChart("half", intervals=(("circle", 0.0, 0.5),))])

    def test_charts_must_be_hausdorff(self):
        base = SolenoidAabAb()
        charts = star_cover(base) + [CoverChart("bad", frozenset({"ab", "ba"}))]
        with self.assertRaises(ValidationError):
            CoverModel(base, charts)

    def test_star_cover_against_brute_force(self):
        """Orbit size at x is the number of charts containing x."""
        base = SolenoidAabAb()
        charts = star_cover(base)
        model = build_cover_groupoid(base, charts)
        self.assertEqual(len(charts), 5)
        for x in base.sample_bases(300, seed=1) + base.strata():
            expected = sum(1 for chart in charts if chart.contains(x))
            self.assertEqual(len(orbit_over(model, x)), expected)
        for vertex in ("ab", "ba", "aa"):
            self.assertEqual(len(orbit_over(model, BasePoint(vertex))), 1)
        self.assertEqual(len(orbit_over(model, BasePoint.of("a", 0.1))), 3)
        self.assertEqual(len(orbit_over(model, BasePoint.of("a", 0.5))), 1)


class TestWedge(unittest.TestCase):

    def setUp(self):
        self.left, self.right = SolenoidAabAb(), BrokenHeart()
        self.model = wedge(self.left, self.right, SOLENOID_B_POINT, BROKEN_HEART_P)

    def test_wedge_point_is_a_singleton(self):
        orbit = orbit_over(self.model, BasePoint("wedge"))
        self.assertEqual(orbit.members, (self.model.glued_point,))

    def test_orbits_away_from_the_wedge_point_are_unchanged(self):
        for x in self.left.sample_bases(100):
            inner = len(orbit_over(self.left, x))
            self.assertEqual(len(orbit_over(self.model, BasePoint("L/" + x.label, x.coord))), inner)
        for x in self.right.sample_bases(100):
            inner = len(orbit_over(self.right, x))
            self.assertEqual(len(orbit_over(self.model, BasePoint("R/" + x.label, x.coord))), inner)

    def test_wedge_at_the_identified_segment_is_invalid(self):
        """A stem point of the broken heart has an orbit of size 3."""
        with self.assertRaises(InvalidWedgeError):
            WedgeModel(self.left, self.right, SOLENOID_B_POINT, PointRef(0, coord=(1.0,)))

    def test_wedge_at_a_branch_point_is_invalid(self):
        with self.assertRaises(InvalidWedgeError):
            WedgeModel(self.left, self.right, PointRef(0, coord=(0.0,)), BROKEN_HEART_P)

    def test_branch_classes_are_prefixed(self):
        names = {b.name for b in self.model.branch_classes}
        self.assertEqual(names, {"L/split-vertex", "R/top"})

    def test_factors(self):
        right = factor(self.model, "right")
        for x in right.sample_bases(50):
            self.assertTrue(x.label.startswith("R/"))
        self.assertIn(BasePoint("wedge"), right.strata())
        with self.assertRaises(ParameterError):
            factor(self.model, "middle")
        with self.assertRaises(ParameterError):
            factor(self.left, "left")


class TestSubspace(unittest.TestCase):

    def test_non_invariant_charts(self):
        with self.assertRaises(InvarianceError):
            subspace(TwistedSphere(), [U])
        with self.assertRaises(InvarianceError):
            subspace(TwistedSphere(), [V1, V2])

    def test_whole_model_is_invariant(self):
        sub = subspace(TwistedSphere(), [U, V1, V2])
        x = BasePoint.of("sphere", 0.3, 0.5)
        self.assertEqual(orbit_over(sub, x).members, orbit_over(TwistedSphere(), x).members)


class TestApproachSequences(unittest.TestCase):

    def test_twisted_sphere_equator(self):
        seqs = approach_sequences(TwistedSphere(), "equator", n=3, eps0=0.1)
        self.assertEqual(sorted(s.direction for s in seqs), ["z->0+", "z->0-"])
        for seq in seqs:
            self.assertEqual(len(seq.samples), 3)
            for a, b in zip(seq.distances, (0.1, 0.05, 0.025)):
                self.assertAlmostEqual(a, b)

    def test_solenoid_split_vertex(self):
        seqs = approach_sequences(SolenoidAabAb(), {"ab", "ba", "aa"}, n=4)
        self.assertEqual(len(seqs), 4)
        self.assertEqual(sorted(s.direction for s in seqs), ["a:end", "a:start", "b:end", "b:start"])

    def test_broken_heart_top(self):
        seqs = approach_sequences(BrokenHeart(), "top", n=4)
        self.assertEqual(sorted(s.direction for s in seqs), ["left:end", "right:end", "stem:start"])

    def test_distances_strictly_decrease(self):
        for seq in approach_sequences(PinchModel([0.5], k=2), "A[0]", n=8, eps0=0.2):
            d = seq.distances
            self.assertTrue(all(a > b > 0 for a, b in zip(d, d[1:])))

    def test_limits_are_aligned_with_the_orbit(self):
        seq = approach_sequences(TwistedSphere(), "equator", n=2)[0]
        for sample in seq.samples:
            self.assertEqual(len(sample.limits), 4)
            self.assertEqual(sum(1 for limit in sample.limits if limit is None), 2)

    def test_invalid_requests(self):
        with self.assertRaises(ParameterError):
            approach_sequences(TwistedSphere(), "equator", n=0)
        with self.assertRaises(ParameterError):
            approach_sequences(TwistedSphere(), "equator", n=4, eps0=0.9)
        with self.assertRaises(BranchLookupError):
            approach_sequences(TwistedSphere(), "meridian", n=4)


class TestModelFile(unittest.TestCase):

    def test_simple_kinds(self):
        self.assertIsInstance(parse_model({"kind": "twisted_sphere"}), TwistedSphere)
        pinch = parse_model({"kind": "pinch", "A": [0.5], "k": 3})
        self.assertEqual((pinch.A, pinch.k), ((0.5,), 3))

    def test_wedge_and_cover(self):
        model = parse_model({
            "kind": "wedge",
            "left": {"kind": "solenoid_aab_ab"},
            "right": {"kind": "broken_heart"},
            "y_left": {"chart": 0, "coord": [0.25]},
            "y_right": {"chart": 0, "coord": [0.0]},
        })
        self.assertIsInstance(model, WedgeModel)
        cover = parse_model({"kind": "cover", "base": {"kind": "solenoid_aab_ab"}, "charts": "star"})
        self.assertEqual(len(cover.charts), 5)

    def test_invalid_descriptions(self):
        with self.assertRaises(ValidationError):
            parse_model({"kind": "torus"})
        with self.assertRaises(ValidationError):
            parse_model({"kind": "pinch", "A": [0.5], "k": 1})
        with self.assertRaises(ValidationError):
            parse_model({"kind": "circle", "radius": 2})
        with self.assertRaises(ParameterError):
            parse_model({"kind": "cover", "base": {"kind": "circle"}, "charts": "star"})


if __name__ == '__main__':
    unittest.main()
