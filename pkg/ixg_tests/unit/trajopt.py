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

import math

import numpy as np

from ixg import errors
from ixg import geometry
from ixg import graph as gcs
from ixg import trajectory as traj
from ixg import trajopt

from ixg_tests import testlib


LENGTH_ONLY = traj.CostWeights(a=1, b=0)


class SeqProgramTest(testlib.IxgTestCase):
    def testCollapse(self):
        a, b = testlib.box([0, 0], [1, 1]), testlib.box([0.5, 0], [2, 1])
        program = trajopt.SeqProgram([a, a, b], set_ids=[0, 0, 1])
        self.assertEqual(program.set_ids, (0, 1))
        self.assertEqual(len(program), 2)
        self.assertEqual(program.num_decision_vars, 2 * 4 * 2 + 2)
        self.assertEqual(program.copy(continuity=1).num_decision_vars,
                         2 * 4 * 2 + 1)

    def testCopy(self):
        a = testlib.box([0, 0], [1, 1])
        program = trajopt.SeqProgram([a], start=[0, 0], end=[1, 1], order=2)
        copy = trajopt.SeqProgram(program, continuity=1)
        self.assertEqual(copy.order, 2)
        self.assertEqual(copy.continuity, 1)
        self.assertPointsAlmostEqual(copy.end, [1, 1])
        self.assertEqual(program.continuity, 0)

    def testArguments(self):
        a = testlib.box([0, 0], [1, 1])
        with self.assertRaises(errors.IxgArgumentError):
            trajopt.SeqProgram([])

        with self.assertRaises(errors.IxgArgumentError):
            trajopt.SeqProgram([a], order=0)

        with self.assertRaises(errors.IxgArgumentError):
            trajopt.SeqProgram([a], continuity=2)

        with self.assertRaises(errors.IxgArgumentError):
            trajopt.SeqProgram([a, testlib.box([0, 0, 0], [1, 1, 1])])

        with self.assertRaises(errors.IxgArgumentError):
            trajopt.SeqProgram([a],
                               velocity_set=geometry.VelocitySet(1, dim=3))

    def testFromGraph(self):
        graph = gcs.build_graph(testlib.chain_world())
        program = trajopt.SeqProgram.from_graph(graph, [0, 1, 2])
        self.assertEqual(program.set_ids, (0, 1, 2))
        with self.assertRaises(errors.IxgArgumentError):
            trajopt.SeqProgram.from_graph(graph, [0, 2])

    def testDump(self):
        program = trajopt.SeqProgram([testlib.box([0, 0], [1, 1], "A")],
                                     start=[0, 0])
        text = program.dump()
        self.assertIn("start: [0.0, 0.0]", text)
        self.assertIn("end: free", text)
        self.assertIn("set 0 A:", text)


class SolveSequenceTest(testlib.IxgTestCase):
    def testSingleBox(self):
        program = trajopt.SeqProgram([testlib.box([0, 0], [2, 1])],
                                     start=[0, 0.5], end=[2, 0.5],
                                     weights=LENGTH_ONLY)
        result = trajopt.solve_sequence(program)
        self.assertTrue(result)
        self.assertAlmostEqual(traj.cost(result, LENGTH_ONLY), 2.0, places=5)
        self.assertPointsAlmostEqual(result.start, [0, 0.5])
        self.assertPointsAlmostEqual(result.end, [2, 0.5])

    def testSpeedLimit(self):
        weights = traj.CostWeights(a=1, b=1)
        program = trajopt.SeqProgram(
            [testlib.box([0, 0], [2, 1])], start=[0, 0.5], end=[2, 0.5],
            weights=weights, velocity_set=geometry.VelocitySet(1.0, dim=2))
        result = trajopt.solve_sequence(program)
        self.assertAlmostEqual(traj.cost(result, weights), 4.0, places=4)
        self.assertAlmostEqual(result.duration, 2.0, places=4)

    def testCorner(self):
        graph = gcs.build_graph([testlib.box([0, 0], [2, 1]),
                                 testlib.box([1, 0], [2, 3])])
        program = trajopt.SeqProgram.from_graph(
            graph, [0, 1], start=[0.5, 0.5], end=[1.5, 2.5],
            weights=LENGTH_ONLY)
        result = trajopt.solve_sequence(program)

        # The shortest path bends around the inner corner at (1, 1).
        expected = math.hypot(0.5, 0.5) + math.hypot(0.5, 1.5)
        self.assertRelativelyClose(traj.cost(result, LENGTH_ONLY), expected)
        self.assertPointsAlmostEqual(result.segments[0].end, [1, 1],
                                     tol=1e-4)
        self.assertValid(result, graph)

    def testWeightScaling(self):
        weights = traj.CostWeights(a=1, b=0.5)
        vset = geometry.VelocitySet(2.0, dim=2)
        graph = gcs.build_graph(testlib.chain_world())
        program = trajopt.SeqProgram.from_graph(
            graph, [0, 1, 2], start=[0.5, 0.5], end=[4.5, 0.2],
            weights=weights, velocity_set=vset)
        scaled = program.copy(weights=weights.scaled(3))

        base = traj.cost(trajopt.solve_sequence(program), weights)
        triple = traj.cost(trajopt.solve_sequence(scaled), weights.scaled(3))
        self.assertRelativelyClose(triple, 3 * base)

    def testSmooth(self):
        graph = gcs.build_graph([testlib.box([0, 0], [2, 1]),
                                 testlib.box([1, 0], [2, 3])])
        vset = geometry.VelocitySet(1.0, dim=2)
        program = trajopt.SeqProgram.from_graph(
            graph, [0, 1], start=[0.5, 0.5], end=[1.5, 2.5], continuity=1,
            start_velocity=[0, 0], end_velocity=[0, 0], velocity_set=vset)
        result = trajopt.solve_sequence(program)
        self.assertTrue(result)
        self.assertEqual(result.continuity_order, 1)
        self.assertValid(result, graph, velocity_set=vset)
        self.assertAlmostEqual(result.segments[0].duration,
                               result.segments[1].duration, places=6)
        self.assertPointsAlmostEqual(result.segments[0].start_velocity(),
                                     [0, 0], tol=1e-5)

    def testZeroVelocityLinear(self):
        # A straight segment that starts at rest can't move.
        program = trajopt.SeqProgram(
            [testlib.box([0, 0], [2, 1])], start=[0, 0.5], end=[2, 0.5],
            start_velocity=[0, 0], order=1, continuity=1)
        result = trajopt.solve_sequence(program)
        self.assertFalse(result)
        self.assertEqual(result.constraint_class,
                         trajopt.Infeasible.VELOCITY_BOUNDARY)

        self.assertTrue(trajopt.solve_sequence(program.copy(order=3)))

    def testDisjoint(self):
        program = trajopt.SeqProgram([testlib.box([0, 0], [1, 1]),
                                      testlib.box([2, 2], [3, 3])])
        result = trajopt.solve_sequence(program)
        self.assertFalse(result)
        self.assertEqual(result.constraint_class,
                         trajopt.Infeasible.CONTAINMENT)

    def testBoundaryOutside(self):
        counter = trajopt.SolveCounter()
        program = trajopt.SeqProgram([testlib.box([0, 0], [1, 1])],
                                     start=[2, 2])
        result = trajopt.solve_sequence(program, counter=counter)
        self.assertFalse(result)
        self.assertEqual(result.constraint_class, trajopt.Infeasible.BOUNDARY)
        self.assertEqual(counter.calls, 1)

    def testBoundaryVelocity(self):
        program = trajopt.SeqProgram(
            [testlib.box([0, 0], [1, 1])], start=[0, 0],
            start_velocity=[3, 0],
            velocity_set=geometry.VelocitySet(1.0, dim=2))
        result = trajopt.solve_sequence(program)
        self.assertEqual(result.constraint_class,
                         trajopt.Infeasible.VELOCITY_BOUNDARY)

    def testFreeEnds(self):
        program = trajopt.SeqProgram([testlib.box([0, 0], [1, 1]),
                                      testlib.box([0.5, 0], [2, 1])],
                                     weights=LENGTH_ONLY)
        result = trajopt.solve_sequence(program)
        self.assertAlmostEqual(traj.cost(result, LENGTH_ONLY), 0.0, places=5)

    def testRegionBoundary(self):
        program = trajopt.SeqProgram(
            [testlib.box([0, 0], [4, 1])], start=[0, 0.5],
            end=testlib.box([3, 0], [4, 1]), weights=LENGTH_ONLY)
        result = trajopt.solve_sequence(program)
        self.assertAlmostEqual(traj.cost(result, LENGTH_ONLY), 3.0, places=5)

    def testWarmStart(self):
        program = trajopt.SeqProgram([testlib.box([0, 0], [2, 1])],
                                     start=[0, 0.5], end=[2, 0.5])
        first = trajopt.solve_sequence(program)
        second = trajopt.solve_sequence(program.copy(warm_start=first))
        self.assertPointsAlmostEqual(first.end, second.end)

    def testWarmStartKeepsOptimum(self):
        weights = traj.CostWeights(a=1, b=1)
        vset = geometry.VelocitySet(1.0, dim=2)
        graph = gcs.build_graph([testlib.box([0, 0], [2, 1]),
                                 testlib.box([1, 0], [2, 3])])
        program = trajopt.SeqProgram.from_graph(
            graph, [0, 1], start=[0.5, 0.5], end=[1.5, 2.5],
            weights=weights, velocity_set=vset)
        cold = traj.cost(trajopt.solve_sequence(program), weights)

        # Seeded with its own optimum and with the optimum of a prefix, the
        # way the search seeds children from their parent.
        own = trajopt.solve_sequence(program)
        prefix = trajopt.solve_sequence(trajopt.SeqProgram.from_graph(
            graph, [0], start=[0.5, 0.5], weights=weights,
            velocity_set=vset))
        for seed in (own, prefix):
            warm = trajopt.solve_sequence(program.copy(warm_start=seed))
            self.assertRelativelyClose(traj.cost(warm, weights), cold)

    def testRelaxingSpeedLimit(self):
        weights = traj.CostWeights(a=1, b=1)
        graph = gcs.build_graph([testlib.box([0, 0], [2, 1]),
                                 testlib.box([1, 0], [2, 3])])
        costs = []
        for vmax in (0.5, 1.0, 2.0, 4.0, float("inf")):
            program = trajopt.SeqProgram.from_graph(
                graph, [0, 1], start=[0.5, 0.5], end=[1.5, 2.5],
                weights=weights,
                velocity_set=geometry.VelocitySet(vmax, dim=2))
            costs.append(traj.cost(trajopt.solve_sequence(program), weights))

        for tighter, looser in zip(costs, costs[1:]):
            self.assertTrue(looser <= tighter * (1 + 1e-5) + 1e-6,
                            "Cost rose from %r to %r." % (tighter, looser))
        self.assertTrue(costs[-1] < costs[0])

    def testCounter(self):
        counter = trajopt.SolveCounter()
        graph = gcs.build_graph(testlib.chain_world())
        for ids in ([0], [0, 1], [0, 1, 2]):
            trajopt.solve_sequence(
                trajopt.SeqProgram.from_graph(graph, ids), counter=counter)

        self.assertEqual(counter.calls, 3)
        self.assertEqual(counter.max_sequence_length, 3)
        self.assertEqual(counter.max_decision_vars, 3 * 4 * 2 + 3)


class BackendTest(testlib.IxgTestCase):
    def testDefault(self):
        backend = trajopt.get_backend()
        self.assertEqual(backend.name, trajopt.DEFAULT_BACKEND)

    def testUnknown(self):
        with self.assertRaises(errors.IxgArgumentError,
                               lambda e: e.key == "gurobi"):
            trajopt.get_backend("gurobi")

    def testScs(self):
        try:
            backend = trajopt.get_backend("scs")
        except errors.IxgArgumentError:
            self.skipTest("SCS is not installed.")

        program = trajopt.SeqProgram([testlib.box([0, 0], [2, 1])],
                                     start=[0, 0.5], end=[2, 0.5],
                                     weights=LENGTH_ONLY)
        result = trajopt.solve_sequence(program, backend=backend)
        self.assertAlmostEqual(traj.cost(result, LENGTH_ONLY), 2.0, places=3)
        self.assertTrue(np.all(np.isfinite(result.end)))
