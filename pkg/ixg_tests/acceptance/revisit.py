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
IxG acceptance tests: a set that must be visited twice.
"""

from ixg import geometry
from ixg import graph as gcs
from ixg import lbg as lbgs
from ixg import oracle
from ixg import search
from ixg import worlds

from ixg_tests import testlib


class RevisitCompletenessTest(testlib.IxgTestCase):
    def setUp(self):
        self.graph = gcs.build_graph(worlds.generate_revisit_world())
        self.query = worlds.revisit_query()
        self.velocity_set = geometry.VelocitySet(worlds.REVISIT_VMAX, dim=2)
        self.lbg = lbgs.build_lbg(self.graph, velocity_set=self.velocity_set)
        self.config = search.PlannerConfig(continuity=1,
                                           velocity_set=self.velocity_set)

    def testWithoutCycles(self):
        result = search.plan_ixg_star(self.graph, self.lbg, self.query,
                                      self.config)
        self.assertEqual(result.status, search.INFEASIBLE)

    def testWithCycles(self):
        config = self.config.copy(allow_cycles=True, max_visits_per_vertex=2)
        result = search.plan_ixg_star(self.graph, self.lbg, self.query, config)
        self.assertTrue(result)

        # The start set is entered once more after leaving it.
        sets = [v for v in result.path if v < 4]
        self.assertEqual(sets.count(0), 2)
        self.assertValid(result.trajectory,
                         gcs.wire_query(self.graph, self.query),
                         velocity_set=self.velocity_set, query=self.query)
        self.assertEqual(result.trajectory.continuity_order, 1)

        best = oracle.oracle_enumerate(self.graph, self.query, max_visits=2,
                                       config=config)
        self.assertRelativelyClose(result.cost, best.cost, rel=1e-3)
