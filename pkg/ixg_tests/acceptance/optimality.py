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
IxG acceptance tests: optimality and bounded suboptimality against the oracle.

A handful of worlds run by default. Set IXG_SLOW_TESTS=1 for the full suites.
"""

import numpy as np

from ixg import errors
from ixg import graph as gcs
from ixg import lbg as lbgs
from ixg import oracle
from ixg import search
from ixg import worlds

from ixg_tests import testlib


WORLD_COUNT = 100 if testlib.SLOW_TESTS else 4
PRUNING_WORLD_COUNT = 20 if testlib.SLOW_TESTS else 3
EPSILONS = (1.5, 3.0, 6.0)


def random_instance(seed):
    """A random world, its LBG and a query inside its cover."""
    sets = worlds.generate_random_world(seed)
    graph = gcs.build_graph(sets)
    query = worlds.sample_query(sets, np.random.default_rng(seed))
    lbg = lbgs.build_lbg(graph)
    return graph, lbg, query


class OptimalityTest(testlib.IxgTestCase):
    def setUp(self):
        self.instances = []
        for seed in range(WORLD_COUNT):
            graph, lbg, query = random_instance(seed)
            try:
                best = oracle.oracle_enumerate(graph, query)
            except errors.IxgOracleTooLargeError:
                continue

            self.instances.append((graph, lbg, query, best))

        self.assertTrue(self.instances)

    def testOptimal(self):
        for graph, lbg, query, best in self.instances:
            result = search.plan_ixg_star(graph, lbg, query)
            self.assertEqual(result.status, best.status)
            if best:
                self.assertRelativelyClose(result.cost, best.cost)

    def testBoundedSuboptimality(self):
        for graph, lbg, query, best in self.instances:
            if not best:
                continue

            for epsilon in EPSILONS:
                config = search.PlannerConfig(epsilon=epsilon)
                result = search.plan_ixg_star(graph, lbg, query, config)
                self.assertTrue(result)
                self.assertLessEqual(result.cost, epsilon * best.cost + 1e-6)
                self.assertGreaterEqual(result.cost, best.cost - 1e-6)

                # IxG has no epsilon guarantee but never beats the optimum.
                result = search.plan_ixg(graph, lbg, query, config)
                if result:
                    self.assertGreaterEqual(result.cost, best.cost - 1e-6)


class PruningTest(testlib.IxgTestCase):
    def testPruningSavesExpansions(self):
        for seed in range(PRUNING_WORLD_COUNT):
            graph, lbg, query = random_instance(seed)
            pruned = search.plan_ixg_star(graph, lbg, query)
            unpruned = search.plan_ixg_star(
                graph, lbg, query,
                search.PlannerConfig(use_upper_bound=False))

            self.assertEqual(pruned.status, unpruned.status)
            self.assertLessEqual(pruned.stats.total_reexpansions,
                                 unpruned.stats.total_reexpansions)
            if pruned:
                self.assertRelativelyClose(pruned.cost, unpruned.cost)
