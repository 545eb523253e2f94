# IxG graph-of-convex-sets planner
#
# Copyright 2026 The IxG Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""
IxG test suite.
"""

import numpy as np

from ixg import errors
from ixg import geometry

from ixg_tests import testlib


def _simplex():
    return geometry.ConvexSet.from_halfspaces(
        [([-1, 0], 0), ([0, -1], 0), ([1, 1], 1)], label="simplex")


class ConvexSetTest(testlib.IxgTestCase):
    def testContains(self):
        unit = testlib.box([0, 0], [1, 1])
        self.assertTrue(geometry.contains(unit, [0.5, 0.5]))
        self.assertFalse(geometry.contains(unit, [1.5, 0.5]))
        self.assertTrue(geometry.contains(_simplex(), [0.3, 0.3]))
        self.assertFalse(geometry.contains(_simplex(), [0.6, 0.6]))

        # Tolerance widens every facet.
        self.assertTrue(geometry.contains(unit, [1.0 + 1e-7, 0.5], tol=1e-6))

    def testContainsErrors(self):
        unit = testlib.box([0, 0], [1, 1])
        with self.assertRaises(errors.IxgArgumentError):
            geometry.contains(unit, [0.5, 0.5, 0.5])

        with self.assertRaises(errors.IxgArgumentError):
            geometry.contains(unit, [0.5, 0.5], tol=-1)

        with self.assertRaises(errors.IxgArgumentError):
            geometry.contains(unit, [float("nan"), 0.5])

    def testMalformed(self):
        with self.assertRaises(errors.IxgArgumentError):
            geometry.ConvexSet([[0, 0]], [1])

        with self.assertRaises(errors.IxgArgumentError):
            geometry.ConvexSet([[1, 0], [0, 1]], [1])

        with self.assertRaises(errors.IxgEmptySetError):
            testlib.box([1, 0], [0, 1])

    def testCheck(self):
        with self.assertRaises(errors.IxgEmptySetError):
            geometry.ConvexSet([[-1], [1]], [0, -1]).check()

        with self.assertRaises(errors.IxgUnboundedSetError):
            geometry.ConvexSet([[-1, 0], [0, -1]], [0, 0]).check()

        _simplex().check()

    def testBoundingBox(self):
        lo, hi = _simplex().bounding_box
        self.assertPointsAlmostEqual(lo, [0, 0])
        self.assertPointsAlmostEqual(hi, [1, 1])

    def testSlack(self):
        unit = testlib.box([0, 0], [1, 1])
        self.assertAlmostEqual(unit.slack([0.5, 0.25]), 0.25)
        self.assertAlmostEqual(unit.slack([1.5, 0.5]), -0.5)

    def testSingleton(self):
        point = geometry.ConvexSet.from_point([1, 2])
        self.assertTrue(point.is_singleton)
        self.assertTrue(point.contains([1, 2]))
        self.assertFalse(testlib.box([0, 0], [1, 1]).is_singleton)

    def testEquality(self):
        self.assertEqual(testlib.box([0, 0], [1, 1], "a"),
                         testlib.box([0, 0], [1, 1], "a"))
        self.assertNotEqual(testlib.box([0, 0], [1, 1], "a"),
                            testlib.box([0, 0], [1, 1], "b"))
        self.assertEqual(len(set([testlib.box([0, 0], [1, 1]),
                                  testlib.box([0, 0], [1, 1])])), 1)


class IntersectsTest(testlib.IxgTestCase):
    def testBoxes(self):
        unit = testlib.box([0, 0], [1, 1])
        self.assertTrue(geometry.intersects(
            unit, testlib.box([0.5, 0.5], [1.5, 1.5])))
        self.assertFalse(geometry.intersects(
            unit, testlib.box([2, 2], [3, 3])))

    def testFacetTouching(self):
        left = testlib.box([0, 0], [1, 1])
        right = testlib.box([1, 0], [2, 1])
        self.assertTrue(geometry.intersects(left, right, 0))
        self.assertFalse(geometry.intersects(left, right, 0.01))

    def testPolytopes(self):
        simplex = _simplex()
        self.assertTrue(geometry.intersects(
            simplex, testlib.box([0.4, 0.4], [2, 2])))
        self.assertFalse(geometry.intersects(
            simplex, testlib.box([0.6, 0.6], [2, 2])))

        # The two only touch at (0.5, 0.5).
        corner = testlib.box([0.5, 0.5], [2, 2])
        self.assertTrue(geometry.intersects(simplex, corner, 0))
        self.assertFalse(geometry.intersects(simplex, corner, 0.01))

    def testSymmetric(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            a = testlib.box(rng.uniform(0, 1, 2), rng.uniform(1, 2, 2))
            lo = rng.uniform(0, 2, 2)
            b = testlib.box(lo, lo + rng.uniform(0, 1, 2))
            for margin in (0, 0.05):
                self.assertEqual(geometry.intersects(a, b, margin),
                                 geometry.intersects(b, a, margin))

    def testDimensionMismatch(self):
        with self.assertRaises(errors.IxgArgumentError):
            geometry.intersects(testlib.box([0, 0], [1, 1]),
                                testlib.box([0, 0, 0], [1, 1, 1]))


class IntersectionTest(testlib.IxgTestCase):
    def testBoxes(self):
        result = geometry.intersection(testlib.box([0, 0], [2, 2]),
                                       testlib.box([1, 1], [3, 3]))
        self.assertTrue(result.is_box)
        self.assertPointsAlmostEqual(result.box[0], [1, 1])
        self.assertPointsAlmostEqual(result.box[1], [2, 2])

    def testIdempotent(self):
        a = testlib.box([0, 0], [2, 2])
        result = geometry.intersection(a, a)
        self.assertPointsAlmostEqual(result.box[0], a.box[0])
        self.assertPointsAlmostEqual(result.box[1], a.box[1])

        simplex = _simplex()
        result = geometry.intersection(simplex, simplex)
        self.assertEqual(result.A.shape[0], 3)

    def testDisjoint(self):
        with self.assertRaises(errors.IxgEmptyIntersectionError):
            geometry.intersection(testlib.box([0, 0], [1, 1]),
                                  testlib.box([2, 2], [3, 3]))

        with self.assertRaises(errors.IxgEmptyIntersectionError):
            geometry.intersection(_simplex(), testlib.box([2, 2], [3, 3]))

    def testContainsBoth(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            a = testlib.box(rng.uniform(0, 1, 2), rng.uniform(2, 3, 2))
            b = testlib.box(rng.uniform(1, 1.5, 2), rng.uniform(3, 4, 2))
            both = geometry.intersection(a, b)
            for point in rng.uniform(-0.5, 4.5, size=(50, 2)):
                self.assertEqual(geometry.contains(both, point),
                                 geometry.contains(a, point) and
                                 geometry.contains(b, point))

    def testPolytope(self):
        both = geometry.intersection(_simplex(), testlib.box([0, 0], [0.5, 2]))
        self.assertTrue(both.contains([0.25, 0.7]))
        self.assertFalse(both.contains([0.75, 0.1]))
        self.assertFalse(both.contains([0.4, 0.7]))


class ChebyshevTest(testlib.IxgTestCase):
    def testSquare(self):
        center, radius = geometry.chebyshev_center(testlib.box([0, 0], [2, 2]))
        self.assertPointsAlmostEqual(center, [1, 1])
        self.assertAlmostEqual(radius, 1.0)

    def testRectangle(self):
        center, radius = geometry.chebyshev_center(
            geometry.ConvexSet(testlib.box([0, 0], [4, 2]).A,
                               testlib.box([0, 0], [4, 2]).b))
        self.assertAlmostEqual(radius, 1.0, places=6)
        self.assertAlmostEqual(center[1], 1.0, places=6)
        self.assertTrue(1.0 - 1e-6 <= center[0] <= 3.0 + 1e-6)

    def testEmpty(self):
        with self.assertRaises(errors.IxgEmptySetError):
            geometry.chebyshev_center(geometry.ConvexSet([[-1], [1]],
                                                         [0, -1]))

    def testCenterInside(self):
        simplex = _simplex()
        center, radius = simplex.chebyshev
        self.assertTrue(geometry.contains(simplex, center))
        self.assertAlmostEqual(radius, 1.0 / (2.0 + np.sqrt(2.0)), places=6)


class VelocitySetTest(testlib.IxgTestCase):
    def testLimits(self):
        vset = geometry.VelocitySet(2.0, dim=3)
        self.assertEqual(vset.dim, 3)
        self.assertEqual(vset.vmax, 2.0)
        self.assertTrue(vset.is_bounded)
        self.assertTrue(vset.contains([2, -2, 0]))
        self.assertFalse(vset.contains([2.1, 0, 0]))

    def testMinTime(self):
        vset = geometry.VelocitySet([1.0, 2.0])
        self.assertAlmostEqual(vset.min_time([3, 4]), 3.0)
        self.assertEqual(geometry.VelocitySet.unbounded(2).min_time([3, 4]),
                         0.0)

    def testInvalid(self):
        with self.assertRaises(errors.IxgArgumentError):
            geometry.VelocitySet(0.0, dim=2)

        with self.assertRaises(errors.IxgArgumentError):
            geometry.VelocitySet([1.0, 2.0], dim=3)


class SamplePointsTest(testlib.IxgTestCase):
    def testMargin(self):
        rng = np.random.default_rng(0)
        simplex = _simplex()
        points = geometry.sample_points(simplex, 20, rng, margin=0.05)
        self.assertEqual(len(points), 20)
        for point in points:
            self.assertGreaterEqual(simplex.slack(point), 0.05)
