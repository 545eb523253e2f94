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
IxG acceptance tests: work done per query on mazes.

The full-size maze runs need IXG_SLOW_TESTS=1.
"""

import unittest

import numpy as np

from ixg import graph as gcs
from ixg import lbg as lbgs
from ixg import search
from ixg import worlds

from ixg_tests import testlib


EPSILONS = (1, 2, 4, 8, 16)


def cell_query(row, col):
    """Start and goal inside the maze cell (row, col)."""
    return gcs.Query(start=[col + 0.3, row + 0.3],
                     goal=[col + 0.7, row + 0.7])


class MazeWorkload(object):
    def __init__(self, rows, cols, queries, seed=0):
        sets = worlds.generate_maze(rows, cols, seed=seed)
        self.graph = gcs.build_graph(sets)
        self.lbg = lbgs.build_lbg(self.graph)
        rng = np.random.default_rng(seed)
        self.queries = [worlds.sample_query(sets, rng)
                        for _ in range(queries)]

    def run(self, epsilon):
        config = search.PlannerConfig(epsilon=epsilon)
        return [search.plan_ixg_star(self.graph, self.lbg, query, config)
                for query in self.queries]


def trend(values, decreasing):
    """How many consecutive pairs move the expected way (ties count)."""
    pairs = zip(values, values[1:])
    if decreasing:
        return sum(1 for x, y in pairs if y <= x)
    return sum(1 for x, y in pairs if y >= x)


class SameSetTest(testlib.IxgTestCase):
    def testFewSolves(self):
        graph = gcs.build_graph(worlds.generate_maze(6, 6, seed=2))
        lbg = lbgs.build_lbg(graph)
        for row, col in ((0, 0), (2, 3), (5, 5)):
            result = search.plan_ixg_star(graph, lbg, cell_query(row, col),
                                          search.PlannerConfig(epsilon=6))
            self.assertTrue(result)
            self.assertLessEqual(result.stats.own_optimized_edges, 3)


@unittest.skipUnless(testlib.SLOW_TESTS, "Set IXG_SLOW_TESTS=1 to run.")
class QueryDependentWorkTest(testlib.IxgTestCase):
    @classmethod
    def setUpClass(cls):
        cls.workload = MazeWorkload(20, 20, queries=50)

    def testOptimizedEdges(self):
        results = self.workload.run(6)
        mean_solves = np.mean([r.stats.optimized_edges for r in results])
        self.assertLess(mean_solves, 0.25 * self.workload.graph.num_edges)

    def testEpsilonTrend(self):
        expansions = []
        wall_times = []
        costs = []
        for epsilon in EPSILONS:
            results = self.workload.run(epsilon)
            expansions.append(np.mean([r.stats.expansions for r in results]))
            wall_times.append(np.mean([r.stats.wall_time for r in results]))
            costs.append(np.mean([r.cost for r in results]))

        # Four comparisons between five epsilons; one may go the wrong way.
        self.assertGreaterEqual(trend(expansions, decreasing=True), 3)
        self.assertGreaterEqual(trend(wall_times, decreasing=True), 3)
        self.assertGreaterEqual(trend(costs, decreasing=False), 3)
