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

import json
import os
import shutil
import tempfile

from ixg import errors
from ixg import scenario as scenarios
from ixg import trajectory as traj

from ixg.protocols import exportable

from ixg_tests import testlib


class LoadScenarioTest(testlib.IxgTestCase):
    def testMaze(self):
        scenario = scenarios.load_scenario(
            testlib.get_fixture_path("maze_5x5.json"))
        self.assertEqual(scenario.name, "5x5 maze")
        self.assertEqual(len(scenario.sets), 25)
        self.assertEqual(scenario.generator,
                         ("maze", dict(rows=5, cols=5, seed=7)))
        self.assertEqual(scenario.velocity_set.vmax, 1.0)
        self.assertEqual(scenario.graph.num_edges, 48)
        self.assertPointsAlmostEqual(scenario.query.goal, [4.5, 4.5])

    def testTwoBoxes(self):
        scenario = scenarios.load_scenario(
            testlib.get_fixture_path("two_boxes.json"))
        self.assertEqual([s.label for s in scenario.sets], ["left", "right"])
        self.assertEqual(scenario.weights, traj.CostWeights(a=1, b=0))
        self.assertFalse(scenario.velocity_set.is_bounded)
        self.assertEqual(scenario.continuity, 0)
        self.assertEqual(scenario.graph.num_edges, 2)

    def testPolytope(self):
        scenario = scenarios.load_scenario(
            testlib.get_fixture_path("triangles.json"))
        self.assertFalse(scenario.sets[0].is_box)
        self.assertEqual(scenario.graph.num_edges, 2)

    def testRevisit(self):
        scenario = scenarios.load_scenario(
            testlib.get_fixture_path("revisit.json"))
        self.assertEqual(scenario.continuity, 1)
        self.assertPointsAlmostEqual(scenario.query.start_velocity, [-1, 0])
        self.assertEqual(scenario.generator, ("revisit", {}))

    def testSyntaxError(self):
        with self.assertRaises(errors.IxgParseError,
                               lambda e: e.line == 6):
            scenarios.load_scenario(testlib.get_fixture_path("broken.json"))

    def testMissingFile(self):
        with self.assertRaises(errors.IxgArgumentError):
            scenarios.load_scenario(testlib.get_fixture_path("nope.json"))


class ParseScenarioTest(testlib.IxgTestCase):
    def testMissingDimension(self):
        text = '{\n  "sets": [{"box": {"lo": [0], "hi": [1]}}]\n}'
        with self.assertRaises(errors.IxgKeyError,
                               lambda e: e.key == "dimension"):
            scenarios.loads_scenario(text)

    def testMissingSets(self):
        with self.assertRaises(errors.IxgKeyError,
                               lambda e: e.key == "sets"):
            scenarios.loads_scenario('{"dimension": 2}')

    def testBadDimension(self):
        text = ('{\n  "sets": [{"box": {"lo": [0], "hi": [1]}}],\n'
                '  "dimension": 2\n}')
        with self.assertRaises(errors.IxgParseError,
                               lambda e: e.line == 2):
            scenarios.loads_scenario(text)

        with self.assertRaises(errors.IxgParseError):
            scenarios.loads_scenario('{"dimension": "two", "sets": []}')

    def testMalformedSet(self):
        text = '{"dimension": 1, "sets": [{"box": {"lo": [0]}}]}'
        with self.assertRaises(errors.IxgParseError):
            scenarios.loads_scenario(text)

    def testEmptySet(self):
        text = ('{"dimension": 1, '
                '"sets": [{"box": {"lo": [1], "hi": [0]}}]}')
        with self.assertRaises(errors.IxgError):
            scenarios.loads_scenario(text)

    def testGeneratorMaze(self):
        scenario = scenarios.loads_scenario(
            '{"dimension":2,"generator":{"maze":{"rows":5,"cols":5,'
            '"seed":7}}}')
        self.assertEqual(len(scenario.sets), 25)
        self.assertEqual(scenario.generator,
                         ("maze", dict(rows=5, cols=5, seed=7)))
        self.assertEqual(scenario.graph.num_edges, 48)

    def testGeneratorBoxWorld(self):
        text = ('{"dimension": 2, "generator": {"boxworld": '
                '{"bounds": [[0, 0], [10, 10]], "n_boxes": 6, "seed": 3}}}')
        scenario = scenarios.loads_scenario(text)
        self.assertEqual(len(scenario.sets), 6)
        self.assertEqual(scenario.generator[0], "boxworld")
        self.assertEqual(scenario.generator[1]["n_boxes"], 6)
        for cset in scenario.sets:
            self.assertTrue(cset.is_box)
            self.assertEqual(cset.dim, 2)

    def testGeneratorOlderShape(self):
        text = ('{"dimension": 2, "generator": '
                '{"name": "maze", "params": {"rows": 2, "cols": 3, '
                '"seed": 1}}}')
        scenario = scenarios.loads_scenario(text)
        self.assertEqual(len(scenario.sets), 6)
        self.assertEqual(scenario.generator,
                         ("maze", dict(rows=2, cols=3, seed=1)))

    def testUnknownGenerator(self):
        text = '{"dimension": 2, "generator": {"spiral": {}}}'
        with self.assertRaises(errors.IxgParseError):
            scenarios.loads_scenario(text)

        text = '{"dimension": 2, "generator": {"maze": {"rows": 3}}}'
        with self.assertRaises(errors.IxgParseError,
                               lambda e: e.key == "generator"):
            scenarios.loads_scenario(text)

    def testMalformedGenerator(self):
        for generator in ('{}', '{"maze": {}, "boxworld": {}}',
                          '{"maze": [5, 5, 7]}', '"maze"'):
            text = '{"dimension": 2, "generator": %s}' % generator
            with self.assertRaises(errors.IxgParseError,
                                   lambda e: e.line == 1):
                scenarios.loads_scenario(text)

    def testMalformedVelocity(self):
        for velocity in ("1.0", '"fast"', "[1.0]"):
            text = ('{"dimension": 1,\n'
                    ' "sets": [{"box": {"lo": [0], "hi": [1]}}],\n'
                    ' "velocity": %s}' % velocity)
            with self.assertRaises(errors.IxgParseError,
                                   lambda e: e.line == 3):
                scenarios.loads_scenario(text)

        text = ('{"dimension": 1, "sets": [{"box": {"lo": [0], "hi": [1]}}],'
                ' "velocity": {"vmax": "fast"}}')
        with self.assertRaises(errors.IxgParseError):
            scenarios.loads_scenario(text)

    def testUnknownKey(self):
        text = ('{"dimension": 1, "colour": "red",\n'
                ' "sets": [{"box": {"lo": [0], "hi": [1]}}]}')
        with self.assertLogs("ixg.scenario", level="WARNING") as logs:
            scenario = scenarios.loads_scenario(text)

        self.assertEqual(len(scenario.sets), 1)
        self.assertIn("'colour'", logs.output[0])

    def testNotAnObject(self):
        with self.assertRaises(errors.IxgParseError):
            scenarios.loads_scenario("[1, 2]")


class SaveScenarioTest(testlib.IxgTestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def testGenerated(self):
        scenario = scenarios.load_scenario(
            testlib.get_fixture_path("maze_5x5.json"))
        path = os.path.join(self.tmpdir, "maze.json")
        scenarios.save_scenario(scenario, path)

        with open(path) as fd:
            data = json.load(fd)
        self.assertNotIn("sets", data)
        self.assertEqual(data["generator"],
                         {"maze": dict(rows=5, cols=5, seed=7)})

        again = scenarios.load_scenario(path)
        self.assertEqual(again.sets, scenario.sets)
        self.assertEqual(again.digest(), scenario.digest())

    def testExplicit(self):
        scenario = scenarios.load_scenario(
            testlib.get_fixture_path("triangles.json"))
        path = os.path.join(self.tmpdir, "triangles.json")
        scenarios.save_scenario(scenario, path)

        again = scenarios.load_scenario(path)
        self.assertEqual(again.sets, scenario.sets)
        self.assertEqual(again.name, "triangle and box")

    def testDigest(self):
        scenario = scenarios.load_scenario(
            testlib.get_fixture_path("two_boxes.json"))
        data = exportable.todict(scenario)

        # Names and queries don't change the digest, weights do.
        data["name"] = "renamed"
        data["query"]["goal"] = [2.0, 0.5]
        self.assertEqual(scenarios.parse_scenario(data).digest(),
                         scenario.digest())

        data["weights"] = dict(a=2.0, b=0.0)
        self.assertNotEqual(scenarios.parse_scenario(data).digest(),
                            scenario.digest())
