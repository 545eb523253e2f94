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

import contextlib
import csv
import io
import json
import os
import shutil
import tempfile

from ixg import cli

from ixg_tests import testlib


class CliTest(testlib.IxgTestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def tmp(self, name):
        return os.path.join(self.tmpdir, name)

    def run_cli(self, *argv):
        stdout = io.StringIO()
        stderr = io.StringIO()
        with contextlib.redirect_stdout(stdout), \
                contextlib.redirect_stderr(stderr):
            code = cli.main(list(argv))
        return code, stdout.getvalue(), stderr.getvalue()

    def testPlan(self):
        code, out, _ = self.run_cli(
            "plan", "--scenario", testlib.get_fixture_path("two_boxes.json"),
            "--out", self.tmp("traj.csv"), "--samples", "11",
            "--svg", self.tmp("traj.svg"), "--stats", self.tmp("stats.json"))
        self.assertEqual(code, cli.EXIT_SOLVED)
        self.assertIn("ixgstar: Solved", out)
        self.assertIn("path: 2 0 1 3", out)

        with open(self.tmp("traj.csv")) as fd:
            rows = list(csv.reader(fd))
        self.assertEqual(rows[0], ["t", "x1", "x2"])
        self.assertEqual(len(rows), 12)

        with open(self.tmp("stats.json")) as fd:
            stats = json.load(fd)
        self.assertEqual(stats["status"], "Solved")
        self.assertAlmostEqual(stats["cost"], 2.0, places=4)

        self.assertTrue(os.path.getsize(self.tmp("traj.svg")) > 0)

    def testPlanQuery(self):
        code, out, _ = self.run_cli(
            "plan", "--scenario", testlib.get_fixture_path("two_boxes.json"),
            "--start", "0.5,0.5", "--goal", "1.5,0.5", "--algo", "ixg",
            "--eps", "2")
        self.assertEqual(code, cli.EXIT_SOLVED)
        self.assertIn("ixg: Solved", out)

    def testOracle(self):
        code, out, _ = self.run_cli(
            "plan", "--scenario", testlib.get_fixture_path("two_boxes.json"),
            "--algo", "oracle")
        self.assertEqual(code, cli.EXIT_SOLVED)
        self.assertIn("oracle: Solved", out)

    def testInfeasible(self):
        code, out, _ = self.run_cli(
            "plan", "--scenario", testlib.get_fixture_path("revisit.json"),
            "--no-heuristic")
        self.assertEqual(code, cli.EXIT_INFEASIBLE)
        self.assertIn("Infeasible", out)

    def testCycles(self):
        code, _, _ = self.run_cli(
            "plan", "--scenario", testlib.get_fixture_path("revisit.json"),
            "--allow-cycles", "--max-visits", "2")
        self.assertEqual(code, cli.EXIT_SOLVED)

    def testBudget(self):
        code, _, _ = self.run_cli(
            "plan", "--scenario", testlib.get_fixture_path("maze_5x5.json"),
            "--max-expansions", "1", "--no-upper-bound")
        self.assertEqual(code, cli.EXIT_BUDGET)

    def testSolverStalled(self):
        code, out, _ = self.run_cli(
            "plan", "--scenario", testlib.get_fixture_path("two_boxes.json"),
            "--no-heuristic", "--backend", "always_stalling",
            "--stats", self.tmp("stats.json"))
        self.assertEqual(code, cli.EXIT_SOLVER)
        self.assertIn("ixgstar: SolverStalled", out)

        with open(self.tmp("stats.json")) as fd:
            stats = json.load(fd)
        self.assertTrue(stats["stats"]["stalled"] > 0)

    def testBadInput(self):
        code, _, err = self.run_cli(
            "plan", "--scenario", testlib.get_fixture_path("broken.json"))
        self.assertEqual(code, cli.EXIT_INPUT)
        self.assertIn("broken.json", err)

        code, _, _ = self.run_cli(
            "plan", "--scenario", self.tmp("missing.json"))
        self.assertEqual(code, cli.EXIT_INPUT)

        code, _, _ = self.run_cli(
            "plan", "--scenario", testlib.get_fixture_path("two_boxes.json"),
            "--start", "0.5,0.5")
        self.assertEqual(code, cli.EXIT_INPUT)

        code, _, _ = self.run_cli(
            "plan", "--scenario", testlib.get_fixture_path("two_boxes.json"),
            "--start", "9,9", "--goal", "0.5,0.5")
        self.assertEqual(code, cli.EXIT_INPUT)

        code, _, _ = self.run_cli(
            "plan", "--scenario", testlib.get_fixture_path("two_boxes.json"),
            "--start", "a,b", "--goal", "0.5,0.5")
        self.assertEqual(code, cli.EXIT_INPUT)

    def testUsage(self):
        code, _, err = self.run_cli("plan", "--frobnicate")
        self.assertEqual(code, cli.EXIT_INPUT)
        self.assertIn("--frobnicate", err)

        code, _, _ = self.run_cli()
        self.assertEqual(code, cli.EXIT_INPUT)

    def testSvgNotPlanar(self):
        path = self.tmp("cube.json")
        with open(path, "w") as fd:
            json.dump(dict(dimension=3,
                           sets=[dict(box=dict(lo=[0, 0, 0], hi=[1, 1, 1]))],
                           query=dict(start=[0.2, 0.2, 0.2],
                                      goal=[0.8, 0.8, 0.8])), fd)

        code, _, err = self.run_cli("plan", "--scenario", path,
                                    "--svg", self.tmp("cube.svg"))
        self.assertEqual(code, cli.EXIT_INPUT)
        self.assertIn("dimension", err)

    def testLbgBuild(self):
        scenario = testlib.get_fixture_path("maze_5x5.json")
        cache = self.tmp("maze.lbg")
        code, out, err = self.run_cli("lbg-build", "--scenario", scenario,
                                      "--out", cache, "--lbg-interface",
                                      "chord")
        self.assertEqual(code, cli.EXIT_SOLVED)
        self.assertIn("LBG:", out)
        self.assertIn("not a proven lower bound", err)
        self.assertTrue(os.path.exists(cache))

        code, _, _ = self.run_cli("plan", "--scenario", scenario,
                                  "--lbg", cache, "--lbg-interface", "chord")
        self.assertEqual(code, cli.EXIT_SOLVED)

        # A cache for other parameters is rebuilt, not trusted.
        code, _, err = self.run_cli("plan", "--scenario", scenario,
                                    "--lbg", cache, "-v")
        self.assertEqual(code, cli.EXIT_SOLVED)
        self.assertIn("Rebuilding the LBG", err)

    def testBench(self):
        spec = self.tmp("bench.json")
        with open(spec, "w") as fd:
            json.dump(dict(scenario=os.path.abspath(
                testlib.get_fixture_path("two_boxes.json")),
                queries=2, algorithms=["ixgstar", "oracle"]), fd)

        code, out, _ = self.run_cli("bench", "--spec", spec,
                                    "--out", self.tmp("results.csv"))
        self.assertEqual(code, cli.EXIT_SOLVED)
        self.assertTrue(out.startswith("algorithm"))

        with open(self.tmp("results.csv")) as fd:
            rows = list(csv.DictReader(fd))
        self.assertEqual(len(rows), 4)
