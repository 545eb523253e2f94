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
from ixg import worlds

from ixg_tests import testlib


class BuildGraphTest(testlib.IxgTestCase):
    def testChain(self):
        graph = gcs.build_graph(testlib.chain_world())
        self.assertEqual(graph.edges, frozenset([(0, 1), (1, 0), (1, 2),
                                                 (2, 1)]))
        self.assertEqual(graph.successors(1), (0, 2))
        self.assertEqual(graph.predecessors(0), (1,))
        self.assertFalse(graph.is_wired)

    def testSingleSet(self):
        graph = gcs.build_graph([testlib.box([0, 0], [1, 1])])
        self.assertEqual(graph.num_edges, 0)
        self.assertEqual(graph.num_vertices, 1)

    def testMargin(self):
        touching = [testlib.box([0, 0], [1, 1]), testlib.box([1, 0], [2, 1])]
        self.assertEqual(gcs.build_graph(touching, margin=0).num_edges, 2)
        self.assertEqual(gcs.build_graph(touching).num_edges, 0)

    def testMixedDimensions(self):
        with self.assertRaises(errors.IxgArgumentError):
            gcs.build_graph([testlib.box([0, 0], [1, 1]),
                             testlib.box([0, 0, 0], [1, 1, 1])])

        with self.assertRaises(errors.IxgArgumentError):
            gcs.build_graph([])

    def testMaze(self):
        openings = worlds.maze_openings(5, 5, seed=7)
        graph = gcs.build_graph(worlds.generate_maze(5, 5, seed=7))
        self.assertEqual(graph.num_edges, 2 * len(openings))
        self.assertEqual(len(graph.components()), 1)

    def testEdgesIntersect(self):
        sets = worlds.generate_box_world(([0, 0], [10, 10]), 10, seed=4)
        graph = gcs.build_graph(sets)
        for u, v in graph.edges:
            self.assertTrue((v, u) in graph.edges)
            self.assertNotEqual(u, v)

    def testDegreeStats(self):
        stats = gcs.build_graph(testlib.chain_world()).degree_stats()
        self.assertEqual(stats["degrees"], [(1, 1), (2, 2), (1, 1)])
        self.assertEqual(stats["max_out"], 2)

    def testExportEdges(self):
        fd = io.StringIO()
        gcs.build_graph(testlib.chain_world()).export_edges(fd)
        self.assertEqual(fd.getvalue(), "0 1\n1 0\n1 2\n2 1\n")

    def testInterface(self):
        graph = gcs.build_graph(testlib.chain_world())
        region = graph.interface(0, 1)
        self.assertPointsAlmostEqual(region.box[0], [1.5, 0])
        self.assertPointsAlmostEqual(region.box[1], [2, 1])
        with self.assertRaises(errors.IxgArgumentError):
            graph.interface(0, 2)


class WireQueryTest(testlib.IxgTestCase):
    def testWiring(self):
        graph = gcs.build_graph(testlib.chain_world())
        wired = gcs.wire_query(graph, gcs.Query([1.75, 0.5], [4.5, 0.5]))

        self.assertEqual(wired.num_vertices, graph.num_vertices + 2)
        self.assertEqual(wired.num_edges, graph.num_edges + 3)
        self.assertEqual(wired.successors(wired.start_id), (0, 1))
        self.assertEqual(wired.predecessors(wired.goal_id), (2,))
        self.assertEqual(wired.predecessors(wired.start_id), ())
        self.assertEqual(wired.successors(wired.goal_id), ())
        self.assertEqual(wired.set_ids, [0, 1, 2])

        # The input graph is untouched.
        self.assertFalse(graph.is_wired)
        self.assertEqual(graph.num_vertices, 3)

    def testSameSet(self):
        graph = gcs.build_graph([testlib.box([0, 0], [1, 1])])
        wired = gcs.wire_query(graph, gcs.Query([0.5, 0.5], [0.5, 0.5]))
        self.assertTrue(wired.has_edge(wired.start_id, 0))
        self.assertTrue(wired.has_edge(0, wired.goal_id))

    def testOutsideCover(self):
        graph = gcs.build_graph(testlib.chain_world())
        with self.assertRaises(errors.IxgQueryOutsideCoverError,
                               lambda e: e.endpoint == "start"):
            gcs.wire_query(graph, gcs.Query([9, 9], [0.5, 0.5]))

        with self.assertRaises(errors.IxgQueryOutsideCoverError,
                               lambda e: e.endpoint == "goal"):
            gcs.wire_query(graph, gcs.Query([0.5, 0.5], [9, 9]))

    def testTwice(self):
        graph = gcs.build_graph(testlib.chain_world())
        query = gcs.Query([0.5, 0.5], [4.5, 0.5])
        with self.assertRaises(errors.IxgStateError):
            gcs.wire_query(gcs.wire_query(graph, query), query)

    def testQueryVelocities(self):
        query = gcs.Query([0, 0], [1, 1], start_velocity=[2, 0])
        with self.assertRaises(errors.IxgArgumentError):
            query.check_velocities(geometry.VelocitySet(1.0, dim=2))
        query.check_velocities(geometry.VelocitySet(2.0, dim=2))


class WorldsTest(testlib.IxgTestCase):
    def testSmallMaze(self):
        sets = worlds.generate_maze(2, 2, seed=1)
        self.assertEqual(len(sets), 4)
        self.assertEqual(len(worlds.maze_openings(2, 2, seed=1)), 3)
        self.assertEqual(gcs.build_graph(sets).num_edges, 6)

    def testMazeDeterministic(self):
        self.assertEqual(worlds.maze_openings(6, 4, seed=3),
                         worlds.maze_openings(6, 4, seed=3))
        self.assertEqual(worlds.generate_maze(3, 3, seed=3),
                         worlds.generate_maze(3, 3, seed=3))

    def testMazeLabels(self):
        sets = worlds.generate_maze(2, 3, seed=0)
        self.assertEqual([s.label for s in sets][:3],
                         ["cell_0_0", "cell_0_1", "cell_0_2"])

    def testMazeArguments(self):
        with self.assertRaises(errors.IxgArgumentError):
            worlds.generate_maze(1, 5, seed=0)

        with self.assertRaises(errors.IxgArgumentError):
            worlds.generate_maze(3, 3, seed=0, overlap=0.1, inset=0.05)

    def testBoxWorld(self):
        bounds = ([0, 0], [10, 10])
        single = worlds.generate_box_world(bounds, 1, seed=0)
        self.assertEqual(len(single), 1)
        self.assertPointsAlmostEqual(single[0].box[0], [0, 0])
        self.assertPointsAlmostEqual(single[0].box[1], [10, 10])

        sets = worlds.generate_box_world(bounds, 10, seed=5)
        self.assertEqual(len(sets), 10)
        self.assertEqual(len(gcs.build_graph(sets).components()), 1)
        self.assertEqual(sets, worlds.generate_box_world(bounds, 10, seed=5))

    def testRandomWorlds(self):
        for seed in range(10):
            sets = worlds.generate_random_world(seed)
            self.assertTrue(6 <= len(sets) <= 12)
            self.assertEqual(len(gcs.build_graph(sets).components()), 1)

    def testRevisitWorld(self):
        graph = gcs.build_graph(worlds.generate_revisit_world())
        labels = [v.label for v in graph.vertices]
        self.assertEqual(labels, ["O", "B", "C", "D"])
        # B, C and D all border the start set O.
        self.assertEqual(graph.successors(0), (1, 2, 3))
        self.assertEqual(graph.containing(worlds.REVISIT_START), [0])

    def testRegistry(self):
        self.assertEqual(worlds.generators(),
                         ["boxworld", "maze", "random", "revisit"])
        self.assertEqual(len(worlds.generate("maze", rows=3, cols=3,
                                             seed=0)), 9)
        with self.assertRaises(errors.IxgArgumentError):
            worlds.get_generator("spiral")

    def testSampleQuery(self):
        sets = worlds.generate_maze(3, 3, seed=2)
        graph = gcs.build_graph(sets)
        rng = np.random.default_rng(0)
        for _ in range(10):
            query = worlds.sample_query(sets, rng)
            self.assertTrue(graph.containing(query.start))
            self.assertTrue(graph.containing(query.goal))
