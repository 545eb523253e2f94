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

from ixg import api
from ixg import errors
from ixg import lbg as lbgs
from ixg import scenario as scenarios
from ixg import search
from ixg import version

from ixg_tests import testlib


class ApiTest(testlib.IxgTestCase):
    def testPlan(self):
        result = api.plan(testlib.get_fixture_path("two_boxes.json"))
        self.assertTrue(result)
        self.assertEqual(result.algorithm, "ixgstar")
        self.assertAlmostEqual(result.cost, 2.0, places=4)

    def testAlgorithms(self):
        scenario = api.load(testlib.get_fixture_path("two_boxes.json"))
        costs = []
        for algorithm in ("ixg", "ixgstar", "oracle"):
            result = api.plan(scenario, [0.5, 0.5], [2.5, 0.5],
                              algorithm=algorithm)
            self.assertEqual(result.algorithm, algorithm)
            costs.append(result.cost)

        for cost in costs:
            self.assertRelativelyClose(cost, costs[-1])

        with self.assertRaises(errors.IxgArgumentError,
                               lambda e: e.key == "algorithm"):
            api.plan(scenario, algorithm="astar")

    def testScenarioDefaults(self):
        scenario = api.load(testlib.get_fixture_path("revisit.json"))
        result = api.plan(scenario, lbg=False, allow_cycles=True,
                          max_visits_per_vertex=2)
        self.assertTrue(result)
        self.assertEqual(result.trajectory.continuity_order, 1)

        # Explicit options win over the scenario's.
        scenario = api.load(testlib.get_fixture_path("two_boxes.json"))
        result = api.plan(scenario, lbg=False, continuity=1)
        self.assertTrue(result)
        self.assertEqual(result.trajectory.continuity_order, 1)

    def testNoQuery(self):
        scenario = scenarios.Scenario([testlib.box([0, 0], [1, 1])], 2)
        with self.assertRaises(errors.IxgArgumentError):
            api.plan(scenario)

        result = api.plan(scenario, [0.2, 0.2], [0.8, 0.8], lbg=False)
        self.assertEqual(result.status, search.SOLVED)

    def testVersion(self):
        self.assertTrue(version.get_version().startswith("0.3"))


class BuildHeuristicTest(testlib.IxgTestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.scenario = api.load(testlib.get_fixture_path("maze_5x5.json"))

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def testCache(self):
        cache = os.path.join(self.tmpdir, "maze.lbg")
        built = api.build_heuristic(self.scenario, cache=cache)
        self.assertTrue(os.path.exists(cache))

        loaded = api.build_heuristic(self.scenario, cache=cache)
        self.assertEqual(loaded.num_vertices, built.num_vertices)
        self.assertEqual(loaded.num_edges, built.num_edges)

        with self.assertLogs("ixg.api", level="WARNING"):
            chord = api.build_heuristic(
                self.scenario, interface_cost=lbgs.INTERFACE_CHORD,
                cache=cache)
        self.assertEqual(chord.interface_cost, lbgs.INTERFACE_CHORD)

    def testNoCache(self):
        lbg = api.build_heuristic(self.scenario, workers=2)
        self.assertTrue(lbgs.size_report(self.scenario.graph, lbg)["holds"])
