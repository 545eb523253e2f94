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

import datetime
import io
import json
import os
import shutil
import tempfile

import pytz

from ixg import bench
from ixg import errors
from ixg import scenario as scenarios
from ixg import search
from ixg import worlds

from ixg_tests import testlib


def small_maze():
    return scenarios.Scenario(worlds.generate_maze(3, 3, seed=5), 2,
                              generator=("maze", dict(rows=3, cols=3,
                                                      seed=5)),
                              name="3x3 maze")


class BenchSpecTest(testlib.IxgTestCase):
    def testArguments(self):
        with self.assertRaises(errors.IxgArgumentError):
            bench.BenchSpec(small_maze(), algorithms=["dijkstra"])

        with self.assertRaises(errors.IxgArgumentError,
                               lambda e: e.key == "querys"):
            bench.BenchSpec(small_maze(), querys=3)

        with self.assertRaises(errors.IxgKeyError):
            bench.BenchSpec()

    def testCopy(self):
        spec = bench.BenchSpec(small_maze(), queries=7, epsilons=[1, 2])
        copy = bench.BenchSpec(spec, workers=4)
        self.assertEqual(copy.queries, 7)
        self.assertEqual(copy.epsilons, (1.0, 2.0))
        self.assertEqual(copy.workers, 4)
        self.assertEqual(spec.workers, 1)

    def testLoad(self):
        spec = bench.load_bench_spec(
            testlib.get_fixture_path("bench_maze.json"))
        self.assertEqual(spec.scenario,
                         os.path.join("sample_data", "maze_5x5.json"))
        self.assertEqual(spec.algorithms, ("ixg", "ixgstar", "oracle"))
        self.assertEqual(spec.max_expansions, 500)
        self.assertEqual(len(spec.load().sets), 25)

    def testLoadErrors(self):
        tmpdir = tempfile.mkdtemp()
        try:
            path = os.path.join(tmpdir, "spec.json")
            with open(path, "w") as fd:
                fd.write('{"queries": 3}')
            with self.assertRaises(errors.IxgKeyError,
                                   lambda e: e.key == "scenario"):
                bench.load_bench_spec(path)

            with open(path, "w") as fd:
                fd.write('{"queries": }')
            with self.assertRaises(errors.IxgParseError,
                                   lambda e: e.line == 1):
                bench.load_bench_spec(path)
        finally:
            shutil.rmtree(tmpdir)


class RunRecordTest(testlib.IxgTestCase):
    def testRoundTrip(self):
        stamp = datetime.datetime(2026, 1, 2, 3, 4, 5, tzinfo=pytz.utc)
        record = bench.RunRecord(3, [0.1, 0.2], [1.5, 2.5], "ixgstar", 2.0,
                                 search.SOLVED, cost=4.25, wall_time=0.5,
                                 expansions=12, optimized_edges=30,
                                 max_sequence_length=6,
                                 max_decision_vars=57, timestamp=stamp)
        fd = io.StringIO()
        bench.RecordWriter(fd).write(record)
        fd.seek(0)

        records = bench.load_records(fd)
        self.assertEqual(len(records), 1)
        self.assertTrue(records[0].same_outcome(record))
        self.assertEqual(records[0].timestamp, stamp)
        self.assertTrue(records[0].solved)

    def testInfiniteCost(self):
        record = bench.RunRecord(0, [0, 0], [1, 1], "ixg", 1.0,
                                 search.INFEASIBLE)
        row = record.torow()
        self.assertEqual(row["cost"], "inf")
        self.assertEqual(bench.RunRecord.fromrow(row).cost, float("inf"))

    def testSchema(self):
        row = bench.RunRecord(0, [0, 0], [1, 1], "ixg", 1.0,
                              search.SOLVED).torow()
        row["schema"] = "99"
        with self.assertRaises(errors.IxgParseError,
                               lambda e: e.key == "schema"):
            bench.RunRecord.fromrow(row)

        del row["cost"]
        row["schema"] = "1"
        with self.assertRaises(errors.IxgParseError):
            bench.RunRecord.fromrow(row)


class RunBenchTest(testlib.IxgTestCase):
    def setUp(self):
        self.spec = bench.BenchSpec(small_maze(), queries=3, seed=1,
                                    epsilons=[1, 2],
                                    algorithms=["ixg", "ixgstar", "oracle"])

    def testRecords(self):
        out = io.StringIO()
        records = bench.run_bench(self.spec, out=out)

        # Per query: ixg and ixgstar at two epsilons, the oracle once.
        self.assertEqual(len(records), 3 * 5)
        self.assertEqual([r.query for r in records[:5]], [0] * 5)
        self.assertEqual([(r.algorithm, r.epsilon) for r in records[:5]],
                         [("ixg", 1.0), ("ixg", 2.0), ("ixgstar", 1.0),
                          ("ixgstar", 2.0), ("oracle", 1.0)])

        out.seek(0)
        logged = bench.load_records(out)
        self.assertEqual(len(logged), len(records))

        for index in range(3):
            group = dict(((r.algorithm, r.epsilon), r) for r in records
                         if r.query == index)
            truth = group[("oracle", 1.0)]
            self.assertTrue(truth.solved)
            for epsilon in (1.0, 2.0):
                star = group[("ixgstar", epsilon)]
                self.assertTrue(star.cost <=
                                epsilon * truth.cost * (1 + 1e-5) + 1e-6)
            self.assertRelativelyClose(group[("ixgstar", 1.0)].cost,
                                       truth.cost)

    def testDeterministic(self):
        spec = bench.BenchSpec(self.spec, algorithms=["ixgstar"],
                               epsilons=[1])
        first = bench.run_bench(spec)
        second = bench.run_bench(bench.BenchSpec(spec, workers=2))
        self.assertEqual(len(first), 3)
        for a, b in zip(first, second):
            self.assertEqual(a.query, b.query)
            self.assertEqual(a.start, b.start)
            self.assertEqual(a.status, b.status)
            self.assertEqual(a.expansions, b.expansions)
            self.assertRelativelyClose(a.cost, b.cost, rel=1e-6)

    def testSummary(self):
        records = bench.run_bench(self.spec)
        rows = bench.summarize(records)
        self.assertEqual([(r["algorithm"], r["epsilon"]) for r in rows],
                         [("ixg", 1.0), ("ixg", 2.0), ("ixgstar", 1.0),
                          ("ixgstar", 2.0), ("oracle", 1.0)])
        self.assertEqual([r["runs"] for r in rows], [3, 3, 3, 3, 3])
        self.assertEqual(rows[-1]["success_rate"], 100.0)

        text = bench.format_summary(rows)
        self.assertEqual(len(text.splitlines()), 6)
        self.assertTrue(text.startswith("algorithm"))

    def testOracleTooLarge(self):
        spec = bench.BenchSpec(self.spec, algorithms=["oracle"], path_cap=0)
        records = bench.run_bench(spec)
        self.assertEqual([r.status for r in records],
                         [bench.ORACLE_TOO_LARGE] * 3)

    def testSummarizeFailures(self):
        records = [bench.RunRecord(0, [0, 0], [1, 1], "ixg", 1.0,
                                   search.BUDGET_EXHAUSTED)]
        row = bench.summarize(records)[0]
        self.assertEqual(row["success_rate"], 0.0)
        self.assertNotEqual(row["cost"], row["cost"])


class SpecFileTest(testlib.IxgTestCase):
    def testJson(self):
        with open(testlib.get_fixture_path("bench_maze.json")) as fd:
            data = json.load(fd)
        self.assertTrue(set(data) <= set(bench.BenchSpec.FIELDS))
