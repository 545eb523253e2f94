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

import os
import shutil
import tempfile

from ixg import errors
from ixg import geometry
from ixg import graph as gcs
from ixg import lbg as lbgs
from ixg import search
from ixg import trajectory as traj
from ixg import worlds

from ixg_tests import testlib


def star_world():
    """A hub B with three arms L, R and T that only touch B."""
    return [testlib.box([0, 0], [3, 3], "B"),
            testlib.box([-1, 1], [0.5, 2], "L"),
            testlib.box([2.5, 1], [4, 2], "R"),
            testlib.box([1, 2.5], [2, 4], "T")]


class BuildLbgTest(testlib.IxgTestCase):
    def testChain(self):
        graph = gcs.build_graph(testlib.chain_world())
        lbg = lbgs.build_lbg(graph)

        # Only B has two neighbors, so there is a single triplet A-B-C.
        self.assertEqual(lbg.num_vertices, 2)
        self.assertEqual(lbg.num_edges, 2)
        self.assertPointsAlmostEqual(lbg.vertices[0].point, [2, 0.5])
        self.assertPointsAlmostEqual(lbg.vertices[1].point, [3, 0.5])
        self.assertEqual(lbg.vertices[0].owners, (0, 1))
        self.assertEqual(lbg.vertices[1].owners, (1, 2))
        self.assertAlmostEqual(lbg.edge(0, 1).cost, 1.0)
        self.assertEqual(lbg.edge(1, 0).provenance, lbgs.TRIPLET)

    def testTriplets(self):
        graph = gcs.build_graph(testlib.chain_world())
        lbg = lbgs.build_lbg(graph)

        forward = lbgs.lookup_triplet(lbg, 0, 1, 2)
        backward = lbgs.lookup_triplet(lbg, 2, 1, 0)
        self.assertPointsAlmostEqual(forward.start, [2, 0.5])
        self.assertPointsAlmostEqual(forward.end, [3, 0.5])
        self.assertPointsAlmostEqual(backward.start, [3, 0.5])
        self.assertEqual(forward.set_ids, [1])

        self.assertIsNone(lbgs.lookup_triplet(lbg, 0, 1, 0))
        self.assertIsNone(lbgs.lookup_triplet(None, 0, 1, 2))

    def testSingleSet(self):
        graph = gcs.build_graph([testlib.box([0, 0], [1, 1])])
        lbg = lbgs.build_lbg(graph)
        self.assertEqual(lbg.num_vertices, 0)
        self.assertEqual(lbg.num_edges, 0)

    def testAnchors(self):
        # Two sets: no triplets, so the interface gets its center.
        graph = gcs.build_graph([testlib.box([0, 0], [2, 1]),
                                 testlib.box([1, 0], [3, 1])])
        lbg = lbgs.build_lbg(graph)
        self.assertEqual(lbg.num_vertices, 1)
        self.assertPointsAlmostEqual(lbg.vertices[0].point, [1.5, 0.5])
        self.assertEqual(lbg.vertices[0].owners, (0, 1))

    def testStar(self):
        graph = gcs.build_graph(star_world())
        lbg = lbgs.build_lbg(graph)
        self.assertEqual(lbg.num_vertices, 6)
        self.assertEqual(len(lbg.vertices_on((0, 1))), 2)
        self.assertEqual(lbg.num_edges, 12)

        interface = [e for e in lbg.edges() if e.provenance == lbgs.INTERFACE]
        self.assertEqual(len(interface), 6)
        self.assertTrue(all(e.cost == 0.0 for e in interface))

        report = lbgs.size_report(graph, lbg)
        self.assertTrue(report["holds"])
        self.assertEqual(report["vertex_bound"], 24)
        self.assertEqual(report["edge_bound"], 12)

    def testChordInterface(self):
        graph = gcs.build_graph(star_world())
        with self.assertLogs("ixg.lbg", level="WARNING") as logs:
            lbg = lbgs.build_lbg(graph, interface_cost=lbgs.INTERFACE_CHORD)
        self.assertEqual(len(logs.records), 1)
        self.assertIn("optimality", logs.output[0])
        a, b = lbg.vertices_on((0, 1))
        self.assertAlmostEqual(lbg.edge(a, b).cost, 0.5)
        self.assertEqual(lbg.edge(a, b).provenance, lbgs.INTERFACE)

        with self.assertRaises(errors.IxgArgumentError):
            lbgs.build_lbg(graph, interface_cost="euclid")

    def testSpeedLimit(self):
        graph = gcs.build_graph(testlib.chain_world())
        lbg = lbgs.build_lbg(graph, weights=traj.CostWeights(a=1, b=1),
                             velocity_set=geometry.VelocitySet(0.5, dim=2))
        # Length 1 plus at least 2 seconds at half speed.
        self.assertAlmostEqual(lbg.edge(0, 1).cost, 3.0)

    def testWorkers(self):
        graph = gcs.build_graph(star_world())
        serial = lbgs.build_lbg(graph)
        threaded = lbgs.build_lbg(graph, workers=3)
        self.assertEqual(serial.num_vertices, threaded.num_vertices)
        for a, b in zip(serial.vertices, threaded.vertices):
            self.assertPointsAlmostEqual(a.point, b.point)

    def testPolytope(self):
        # A triangle hub forces the conic program instead of the box rule.
        hub = geometry.ConvexSet.from_halfspaces(
            [([0, -1], 0), ([-1, 0], 0), ([1, 1], 4)], label="hub")
        graph = gcs.build_graph([hub, testlib.box([-1, 0], [0.5, 1]),
                                 testlib.box([0, -1], [1, 0.5])])
        lbg = lbgs.build_lbg(graph, weights=traj.CostWeights(a=1, b=0))
        trajectory = lbgs.lookup_triplet(lbg, 1, 0, 2)
        self.assertIsNotNone(trajectory)
        self.assertAlmostEqual(traj.cost(trajectory,
                                         traj.CostWeights(a=1, b=0)),
                               0.0, places=5)


class UpdateLbgTest(testlib.IxgTestCase):
    def setUp(self):
        self.graph = gcs.build_graph(testlib.chain_world())
        self.lbg = lbgs.build_lbg(self.graph)

    def testInsert(self):
        updated = lbgs.update_lbg(self.graph, self.lbg, [0.5, 0.5])
        self.assertEqual(updated.num_vertices, self.lbg.num_vertices + 1)
        self.assertEqual(updated.num_edges, self.lbg.num_edges + 2)

        q = updated.query_vertices()[0]
        self.assertEqual(updated.vertices[q].owners, (0,))
        self.assertAlmostEqual(updated.edge(q, 0).cost, 1.0)
        self.assertEqual(updated.edge(0, q).provenance, lbgs.QUERY)

        # The input is left alone.
        self.assertEqual(self.lbg.num_vertices, 2)

    def testIdempotent(self):
        once = lbgs.update_lbg(self.graph, self.lbg, [0.5, 0.5], vertex_id=3)
        twice = lbgs.update_lbg(self.graph, once, [0.5, 0.5], vertex_id=3)
        self.assertIs(once, twice)

    def testSharedPoint(self):
        start = lbgs.update_lbg(self.graph, self.lbg, [1.75, 0.5])
        q = start.query_vertices()[0]
        self.assertEqual(start.vertices[q].owners, (0, 1))
        # Joined to the one vertex of A and both vertices of B.
        self.assertEqual(len(list(start.out_edges(q))), 2)

    def testOutsideCover(self):
        with self.assertRaises(errors.IxgQueryOutsideCoverError):
            lbgs.update_lbg(self.graph, self.lbg, [9, 9])

    def testOwnedWithinTolerance(self):
        # A and B overlap in a slab 5e-7 thick and C stops 1e-7 below it, so
        # the vertex on A-B belongs to C as well though C misses the slab.
        graph = gcs.build_graph([testlib.box([0, 0], [2, 1], "A"),
                                 testlib.box([1, -1], [3, 5e-7], "B"),
                                 testlib.box([0.5, -1], [2.5, -1e-7], "C")])
        lbg = lbgs.build_lbg(graph)
        on_slab = lbg.vertices_on((0, 1))
        self.assertTrue(on_slab)
        self.assertTrue(all(2 in lbg.vertices[v].owners for v in on_slab))

        # The point lies where B and C overlap.
        updated = lbgs.update_lbg(graph, lbg, [1.5, -0.5])
        q = updated.query_vertices()[0]
        self.assertEqual(updated.vertices[q].owners, (1, 2))
        for v in on_slab:
            self.assertEqual(updated.edge(q, v).cost, 0.0)

        query = gcs.Query([1.5, -0.5], [0.5, 0.5])
        result = search.plan_ixg_star(graph, lbg, query)
        self.assertTrue(result)
        _, _, heuristic, _ = search.prepare(graph, query, lbg)
        self.assertTrue(heuristic(result.path[0]) <= result.cost + 1e-6)


class HeuristicTest(testlib.IxgTestCase):
    def setUp(self):
        self.graph = gcs.build_graph(testlib.chain_world())
        lbg = lbgs.build_lbg(self.graph)
        lbg = lbgs.update_lbg(self.graph, lbg, [0.5, 0.5], vertex_id=3)
        self.lbg = lbgs.update_lbg(self.graph, lbg, [4.5, 0.5], vertex_id=4)

    def testBackwardDijkstra(self):
        table = lbgs.backward_dijkstra(self.lbg, [4.5, 0.5])
        self.assertAlmostEqual(table(4), 0.0)
        self.assertAlmostEqual(table(2), 0.0)
        self.assertAlmostEqual(table(1), 1.0)
        self.assertAlmostEqual(table(0), 2.0)
        self.assertAlmostEqual(table(3), 3.0)
        self.assertEqual(table(17), float("inf"))

    def testLowerBound(self):
        # The straight line costs 4 (length 4, no speed limit).
        table = lbgs.backward_dijkstra(self.lbg, [4.5, 0.5])
        self.assertTrue(table(3) <= 4.0)

    def testMissingGoal(self):
        with self.assertRaises(errors.IxgStateError):
            lbgs.backward_dijkstra(self.lbg, [1.0, 0.5])

    def testZero(self):
        table = lbgs.HeuristicTable.zero()
        self.assertEqual(table(0), 0.0)
        self.assertEqual(table(1234), 0.0)

    def testPairLowerBound(self):
        plain = lbgs.build_lbg(self.graph)
        self.assertAlmostEqual(lbgs.pair_lower_bound(plain, 0, 2), 1.0)
        self.assertEqual(lbgs.pair_lower_bound(plain, 0, 9), float("inf"))


class CacheTest(testlib.IxgTestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.path = os.path.join(self.tmpdir, "star.lbg")

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def testSaveLoad(self):
        graph = gcs.build_graph(star_world())
        lbg = lbgs.build_lbg(graph, interface_cost=lbgs.INTERFACE_CHORD)
        key = lbgs.cache_key("digest", lbg.weights, lbg.velocity_set,
                             lbg.interface_cost)
        lbgs.save_lbg(lbg, self.path, key=key)

        with self.assertLogs("ixg.lbg", level="WARNING") as logs:
            loaded = lbgs.load_lbg(self.path, key=key)
        self.assertIn("not a proven lower bound", logs.output[0])
        self.assertEqual(loaded.num_vertices, lbg.num_vertices)
        self.assertEqual(loaded.num_edges, lbg.num_edges)
        self.assertEqual(loaded.interface_cost, lbgs.INTERFACE_CHORD)
        self.assertEqual(sorted(loaded.triplet_cache),
                         sorted(lbg.triplet_cache))
        self.assertEqual(loaded.vertices_on((0, 1)), lbg.vertices_on((0, 1)))

        with self.assertRaises(errors.IxgCacheError):
            lbgs.load_lbg(self.path, key="stale")

    def testCacheKey(self):
        weights = traj.CostWeights()
        free = geometry.VelocitySet.unbounded(2)
        key = lbgs.cache_key("digest", weights, free, lbgs.INTERFACE_ZERO)
        self.assertEqual(key, lbgs.cache_key("digest", weights, free,
                                             lbgs.INTERFACE_ZERO))
        self.assertNotEqual(key, lbgs.cache_key("digest", weights, free,
                                                lbgs.INTERFACE_CHORD))
        self.assertNotEqual(key, lbgs.cache_key("other", weights, free,
                                                lbgs.INTERFACE_ZERO))

    def testGarbage(self):
        with open(self.path, "w") as fd:
            fd.write("not json")

        with self.assertRaises(errors.IxgCacheError):
            lbgs.load_lbg(self.path)

        with self.assertRaises(errors.IxgCacheError):
            lbgs.load_lbg(os.path.join(self.tmpdir, "missing.lbg"))

    def testVersion(self):
        with open(self.path, "w") as fd:
            fd.write('{"version": 0}')

        with self.assertRaises(errors.IxgCacheError):
            lbgs.load_lbg(self.path)


class SizeReportTest(testlib.IxgTestCase):
    def testMaze(self):
        graph = gcs.build_graph(worlds.generate_maze(4, 4, seed=11))
        report = lbgs.size_report(graph, lbgs.build_lbg(graph))
        self.assertTrue(report["holds"], report)
        self.assertTrue(report["degree_bound_holds"])
        self.assertGreater(report["vertices"], 0)
