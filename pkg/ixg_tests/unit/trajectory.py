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

import io

import numpy as np

from ixg import errors
from ixg import geometry
from ixg import graph as gcs
from ixg import trajectory as traj

from ixg.protocols import exportable

from ixg_tests import testlib


def straight(points, durations, set_ids):
    segments = []
    for k, duration in enumerate(durations):
        segments.append(traj.TrajectorySegment(points[k:k + 2], duration,
                                               set_ids[k]))
    return traj.Trajectory(segments)


class CostWeightsTest(testlib.IxgTestCase):
    def testArguments(self):
        with self.assertRaises(errors.IxgArgumentError):
            traj.CostWeights(a=-1, b=1)

        with self.assertRaises(errors.IxgArgumentError):
            traj.CostWeights(a=0, b=0)

        self.assertEqual(traj.CostWeights(2, 3).scaled(2),
                         traj.CostWeights(4, 6))


class SegmentTest(testlib.IxgTestCase):
    def testArguments(self):
        with self.assertRaises(errors.IxgArgumentError):
            traj.TrajectorySegment([[0, 0]], 1.0, 0)

        with self.assertRaises(errors.IxgArgumentError):
            traj.TrajectorySegment([[0, 0], [1, 1]], 0.0, 0)

        with self.assertRaises(errors.IxgArgumentError):
            traj.TrajectorySegment([[0, 0], [float("nan"), 1]], 1.0, 0)

    def testEvaluate(self):
        segment = traj.TrajectorySegment([[0, 0], [1, 2], [2, 0]], 2.0, 0)
        self.assertPointsAlmostEqual(segment.evaluate(0.0), [0, 0])
        self.assertPointsAlmostEqual(segment.evaluate(0.5), [1, 1])
        self.assertPointsAlmostEqual(segment.evaluate(1.0), [2, 0])
        self.assertEqual(segment.order, 2)

    def testVelocity(self):
        segment = traj.TrajectorySegment([[0, 0], [1, 0], [3, 0]], 2.0, 0)
        self.assertPointsAlmostEqual(segment.velocity_points(),
                                     [[1, 0], [2, 0]])
        self.assertPointsAlmostEqual(segment.start_velocity(), [1, 0])
        self.assertPointsAlmostEqual(segment.end_velocity(), [2, 0])

    def testLength(self):
        segment = traj.TrajectorySegment([[0, 0], [3, 4], [3, 5]], 1.0, 0)
        self.assertAlmostEqual(segment.length, 6.0)


class CostTest(testlib.IxgTestCase):
    def testCost(self):
        trajectory = straight([[0, 0], [3, 4], [3, 6]], [2.0, 1.5], [0, 1])
        self.assertAlmostEqual(trajectory.length, 7.0)
        self.assertAlmostEqual(trajectory.duration, 3.5)
        self.assertAlmostEqual(
            traj.cost(trajectory, traj.CostWeights(a=1, b=2)), 14.0)
        self.assertAlmostEqual(
            traj.cost(trajectory, traj.CostWeights(a=0, b=1)), 3.5)

    def testEmpty(self):
        empty = traj.Trajectory([])
        self.assertTrue(empty.is_empty)
        self.assertEqual(traj.cost(empty, traj.CostWeights()), 0.0)

    def testReversed(self):
        trajectory = straight([[0, 0], [1, 0], [1, 1]], [1.0, 2.0], [0, 1])
        backwards = trajectory.reversed()
        self.assertEqual(backwards.set_ids, [1, 0])
        self.assertPointsAlmostEqual(backwards.start, [1, 1])
        self.assertPointsAlmostEqual(backwards.end, [0, 0])
        self.assertAlmostEqual(backwards.length, trajectory.length)


class SampleTest(testlib.IxgTestCase):
    def testSample(self):
        trajectory = straight([[0, 0], [1, 0], [1, 3]], [1.0, 3.0], [0, 1])
        samples = traj.sample(trajectory, 5)
        self.assertEqual([t for t, _ in samples], [0.0, 1.0, 2.0, 3.0, 4.0])
        self.assertPointsAlmostEqual(samples[0][1], [0, 0])
        self.assertPointsAlmostEqual(samples[1][1], [1, 0])
        self.assertPointsAlmostEqual(samples[2][1], [1, 1])
        self.assertPointsAlmostEqual(samples[4][1], [1, 3])

    def testArguments(self):
        with self.assertRaises(errors.IxgArgumentError):
            traj.sample(traj.Trajectory([]), 10)

        trajectory = straight([[0, 0], [1, 0]], [1.0], [0])
        with self.assertRaises(errors.IxgArgumentError):
            traj.sample(trajectory, 1)

    def testExportCsv(self):
        trajectory = straight([[0, 0], [2, 0]], [2.0], [0])
        fd = io.StringIO()
        traj.export_csv(trajectory, fd, n=3)
        self.assertEqual(fd.getvalue(), "t,x1,x2\n0,0,0\n1,1,0\n2,2,0\n")


class ValidateTest(testlib.IxgTestCase):
    def setUp(self):
        self.graph = gcs.build_graph(testlib.chain_world())
        self.free = geometry.VelocitySet.unbounded(2)

    def testValid(self):
        trajectory = straight([[0.5, 0.5], [1.75, 0.5], [3.25, 0.5]],
                              [1.0, 1.0], [0, 1])
        self.assertValid(trajectory, self.graph)
        self.assertValid(trajectory, self.graph,
                         query=gcs.Query([0.5, 0.5], [3.25, 0.5]))

    def testContainment(self):
        trajectory = straight([[0.5, 0.5], [4.5, 0.5]], [1.0], [0])
        report = traj.validate(trajectory, self.graph, self.free)
        self.assertFalse(report)
        self.assertEqual(report.kinds(), ["containment"])

    def testVelocity(self):
        trajectory = straight([[0.5, 0.5], [1.5, 0.5]], [0.5], [0])
        report = traj.validate(trajectory, self.graph,
                               geometry.VelocitySet(1.0, dim=2))
        self.assertEqual(report.kinds(), ["velocity"])
        self.assertTrue(traj.validate(trajectory, self.graph,
                                      geometry.VelocitySet(2.0, dim=2)))

    def testContinuity(self):
        trajectory = traj.Trajectory([
            traj.TrajectorySegment([[0.5, 0.5], [1.75, 0.5]], 1.0, 0),
            traj.TrajectorySegment([[1.8, 0.5], [3.25, 0.5]], 1.0, 1)])
        report = traj.validate(trajectory, self.graph, self.free)
        self.assertEqual(report.kinds(), ["continuity"])

        # Velocity jumps only matter for C^1 trajectories.
        kinked = traj.Trajectory([
            traj.TrajectorySegment([[0.5, 0.5], [1.75, 0.5]], 1.0, 0),
            traj.TrajectorySegment([[1.75, 0.5], [1.75, 0.9]], 1.0, 1)])
        self.assertTrue(traj.validate(kinked, self.graph, self.free))
        smooth = traj.Trajectory(kinked.segments, continuity_order=1)
        self.assertEqual(traj.validate(smooth, self.graph, self.free).kinds(),
                         ["continuity"])

    def testBoundary(self):
        trajectory = straight([[0.5, 0.5], [1.5, 0.5]], [1.0], [0])
        query = gcs.Query([0.5, 0.5], [1.5, 0.5], start_velocity=[0, 0])
        report = traj.validate(trajectory, self.graph, self.free, query=query)
        self.assertEqual(report.kinds(), ["boundary"])

        query = gcs.Query([0.5, 0.5], [1.0, 0.5])
        report = traj.validate(trajectory, self.graph, self.free, query=query)
        self.assertEqual(report.kinds(), ["boundary"])

    def testUnknownSet(self):
        trajectory = straight([[0.5, 0.5], [1.5, 0.5]], [1.0], [7])
        with self.assertRaises(errors.IxgArgumentError):
            traj.validate(trajectory, self.graph, self.free)

    def testEmpty(self):
        self.assertTrue(traj.validate(traj.Trajectory([]), self.graph,
                                      self.free))


class ExportTest(testlib.IxgTestCase):
    def testTrajectory(self):
        trajectory = straight([[0, 0], [1, 0], [1, 1]], [1.0, 2.0], [0, 1])
        data = exportable.todict(trajectory)
        self.assertEqual(data["segments"][1],
                         dict(control_points=[[1.0, 0.0], [1.0, 1.0]],
                              duration=2.0, set_id=1))

        copy = exportable.fromdict(traj.Trajectory, data)
        self.assertEqual(copy.set_ids, [0, 1])
        self.assertPointsAlmostEqual(copy.end, [1, 1])
        self.assertEqual(np.shape(copy.segments[0].control_points), (2, 2))
