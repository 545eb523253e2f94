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
IxG acceptance tests: lower bound graph admissibility and size bounds.
"""

from ixg import errors
from ixg import geometry
from ixg import graph as gcs
from ixg import lbg as lbgs
from ixg import oracle
from ixg import search
from ixg import worlds

from ixg_tests import testlib


WORLD_COUNT = 50 if testlib.SLOW_TESTS else 2
MAX_SETS = 12 if testlib.SLOW_TESTS else 7
MAZE_SIZES = ((10, 10), (20, 20), (50, 50)) if testlib.SLOW_TESTS else (
    (6, 6),)
VELOCITY_SET = geometry.VelocitySet(2.0, dim=2)


class AdmissibilityTest(testlib.IxgTestCase):
    def assertAdmissible(self, graph, interface_cost, continuity):
        lbg = lbgs.build_lbg(graph, velocity_set=VELOCITY_SET,
                             interface_cost=interface_cost)
        config = search.PlannerConfig(continuity=continuity,
                                      velocity_set=VELOCITY_SET)
        for source in graph.set_ids:
            for target in graph.set_ids:
                try:
                    best = oracle.pair_oracle(graph, source, target,
                                              config=config)
                except errors.IxgOracleTooLargeError:
                    continue

                if best == float("inf"):
                    continue

                self.assertLessEqual(
                    lbgs.pair_lower_bound(lbg, source, target), best + 1e-6,
                    "LBG overestimates %d -> %d (%s, j=%d)." %
                    (source, target, interface_cost, continuity))

    def testRandomWorlds(self):
        for seed in range(WORLD_COUNT):
            graph = gcs.build_graph(
                worlds.generate_random_world(seed, max_sets=MAX_SETS))
            for continuity in (0, 1):
                self.assertAdmissible(graph, lbgs.INTERFACE_ZERO, continuity)


class SizeBoundsTest(testlib.IxgTestCase):
    def assertBounds(self, graph):
        report = lbgs.size_report(graph, lbgs.build_lbg(graph))
        self.assertTrue(report["holds"], report)
        return report

    def testMazes(self):
        for rows, cols in MAZE_SIZES:
            graph = gcs.build_graph(worlds.generate_maze(rows, cols, seed=1))
            self.assertBounds(graph)
            openings = worlds.maze_openings(rows, cols, seed=1)
            self.assertEqual(graph.num_edges, 2 * len(openings))

    def testRandomWorlds(self):
        for seed in range(WORLD_COUNT):
            self.assertBounds(gcs.build_graph(
                worlds.generate_random_world(seed, max_sets=MAX_SETS)))
