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
Benchmark sweeps: random queries in one scenario, several planners and
epsilons, one RunRecord per (query, algorithm, epsilon).

Records are appended to a CSV log as they complete and summarized per
algorithm and epsilon:

    spec = bench.BenchSpec("sample_data/maze_5x5.json", queries=10,
                           epsilons=[1, 2, 4])
    records = bench.run_bench(spec)
    print(bench.format_summary(bench.summarize(records)))
"""

import concurrent.futures
import csv
import datetime
import json
import logging
import os
import threading

import numpy as np
import pytz

from dateutil import parser as date_parser

from ixg import errors
from ixg import lbg as lbgs
from ixg import oracle
from ixg import scenario as scenarios
from ixg import search
from ixg import worlds

LOG = logging.getLogger(__name__)

SCHEMA_VERSION = 1

ALGORITHMS = ("ixg", "ixgstar", "oracle")

# Statuses besides the planner's own.
ORACLE_TOO_LARGE = "OracleTooLarge"
SOLVER_STALLED = search.SOLVER_STALLED


class BenchSpec(object):
    """What to run.

    Arguments:
        scenario: Scenario or path to a scenario file.
        queries: Number of random start/goal pairs.
        seed: Seed of the query sampler.
        epsilons: Epsilon values for ixg and ixgstar.
        algorithms: Subset of ALGORITHMS.
        max_expansions, max_time: Budget per run.
        allow_cycles, max_visits: IxG* (and oracle) visit budget.
        interface_cost: LBG interface edge mode.
        workers: Queries run in parallel.
        path_cap: Oracle path cap.

    Passing another BenchSpec as the first argument copies it, with keyword
    arguments overriding.
    """

    scenario = None
    queries = 50
    seed = 0
    epsilons = (1.0,)
    algorithms = ("ixgstar",)
    max_expansions = None
    max_time = None
    allow_cycles = False
    max_visits = 1
    interface_cost = lbgs.INTERFACE_ZERO
    workers = 1
    path_cap = oracle.DEFAULT_PATH_CAP

    FIELDS = ("scenario", "queries", "seed", "epsilons", "algorithms",
              "max_expansions", "max_time", "allow_cycles", "max_visits",
              "interface_cost", "workers", "path_cap")

    def __init__(self, scenario=None, **kwargs):
        super(BenchSpec, self).__init__()

        if isinstance(scenario, BenchSpec):
            # Run as a copy constructor with optional overrides.
            for name in self.FIELDS:
                setattr(self, name, getattr(scenario, name))
        else:
            self.scenario = scenario

        for name, value in kwargs.items():
            if name not in self.FIELDS:
                raise errors.IxgArgumentError(
                    "Unknown bench option %r." % name, key=name)
            if value is not None:
                setattr(self, name, value)

        self.epsilons = tuple(float(e) for e in self.epsilons)
        self.algorithms = tuple(self.algorithms)
        for algorithm in self.algorithms:
            if algorithm not in ALGORITHMS:
                raise errors.IxgArgumentError(
                    "Unknown algorithm %r, expected one of %r." %
                    (algorithm, ALGORITHMS), key="algorithms")

        if self.scenario is None:
            raise errors.IxgKeyError(key="scenario")

    def load(self):
        """The Scenario, reading it from disk if needed."""
        if isinstance(self.scenario, scenarios.Scenario):
            return self.scenario

        return scenarios.load_scenario(self.scenario)

    def __repr__(self):
        return "BenchSpec(%r, queries=%d, %r, eps=%r)" % (
            self.scenario, self.queries, self.algorithms, self.epsilons)


def load_bench_spec(path):
    """Read a bench spec JSON file. A relative scenario path is resolved
    against the spec file's directory."""
    try:
        with open(path, "r") as fd:
            text = fd.read()
        data = json.loads(text)
    except IOError as e:
        raise errors.IxgArgumentError("Cannot read bench spec: %s" % e,
                                      path=path)
    except ValueError as e:
        raise errors.IxgParseError(getattr(e, "msg", str(e)), path=path,
                                   line=getattr(e, "lineno", None),
                                   column=getattr(e, "colno", None))

    if not isinstance(data, dict):
        raise errors.IxgParseError("A bench spec must be a JSON object.",
                                   path=path, line=1, column=1)

    for key in sorted(set(data) - set(BenchSpec.FIELDS)):
        LOG.warning("Ignoring unknown bench spec key %r.", key)
        data.pop(key)

    if "scenario" not in data:
        raise errors.IxgKeyError(path=path, key="scenario")

    scenario_path = data.pop("scenario")
    if not os.path.isabs(scenario_path):
        scenario_path = os.path.join(os.path.dirname(path), scenario_path)

    return BenchSpec(scenario_path, **data)


class RunRecord(object):
    """One planner run. Rows of the result log."""

    FIELDS = ("schema", "timestamp", "query", "start", "goal", "algorithm",
              "epsilon", "status", "cost", "wall_time", "expansions",
              "optimized_edges", "max_sequence_length", "max_decision_vars",
              "lbg_update_time")

    def __init__(self, query, start, goal, algorithm, epsilon, status,
                 cost=float("inf"), wall_time=0.0, expansions=0,
                 optimized_edges=0, max_sequence_length=0,
                 max_decision_vars=0, lbg_update_time=0.0, timestamp=None,
                 schema=SCHEMA_VERSION):
        self.schema = schema
        self.timestamp = timestamp or datetime.datetime.now(pytz.utc)
        self.query = query
        self.start = tuple(start)
        self.goal = tuple(goal)
        self.algorithm = algorithm
        self.epsilon = epsilon
        self.status = status
        self.cost = cost
        self.wall_time = wall_time
        self.expansions = expansions
        self.optimized_edges = optimized_edges
        self.max_sequence_length = max_sequence_length
        self.max_decision_vars = max_decision_vars
        self.lbg_update_time = lbg_update_time

    @classmethod
    def from_result(cls, index, query, result, epsilon):
        stats = result.stats
        return cls(index, query.start.tolist(), query.goal.tolist(),
                   result.algorithm, epsilon, result.status,
                   cost=result.cost, wall_time=stats.wall_time,
                   expansions=stats.expansions,
                   optimized_edges=stats.optimized_edges,
                   max_sequence_length=stats.max_sequence_length,
                   max_decision_vars=stats.max_decision_vars,
                   lbg_update_time=stats.lbg_update_time)

    @property
    def solved(self):
        return self.status == search.SOLVED

    def torow(self):
        return dict(
            schema=self.schema,
            timestamp=self.timestamp.isoformat(),
            query=self.query,
            start=" ".join("%.17g" % x for x in self.start),
            goal=" ".join("%.17g" % x for x in self.goal),
            algorithm=self.algorithm,
            epsilon="%.17g" % self.epsilon,
            status=self.status,
            cost="%.17g" % self.cost,
            wall_time="%.6f" % self.wall_time,
            expansions=self.expansions,
            optimized_edges=self.optimized_edges,
            max_sequence_length=self.max_sequence_length,
            max_decision_vars=self.max_decision_vars,
            lbg_update_time="%.6f" % self.lbg_update_time)

    @classmethod
    def fromrow(cls, row):
        """Parse a CSV row.

        Raises:
            IxgParseError on a schema mismatch or malformed value.
        """
        try:
            schema = int(row["schema"])
            if schema != SCHEMA_VERSION:
                raise errors.IxgParseError(
                    "Result schema %d, expected %d." % (schema,
                                                        SCHEMA_VERSION),
                    key="schema")

            return cls(
                int(row["query"]),
                [float(x) for x in row["start"].split()],
                [float(x) for x in row["goal"].split()],
                row["algorithm"], float(row["epsilon"]), row["status"],
                cost=float(row["cost"]),
                wall_time=float(row["wall_time"]),
                expansions=int(row["expansions"]),
                optimized_edges=int(row["optimized_edges"]),
                max_sequence_length=int(row["max_sequence_length"]),
                max_decision_vars=int(row["max_decision_vars"]),
                lbg_update_time=float(row["lbg_update_time"]),
                timestamp=date_parser.parse(row["timestamp"]),
                schema=schema)
        except (KeyError, ValueError, AttributeError) as e:
            raise errors.IxgParseError("Malformed result row: %s" % e)

    def same_outcome(self, other):
        """Equal except for timing and timestamp."""
        keys = ("query", "start", "goal", "algorithm", "epsilon", "status",
                "cost", "expansions", "optimized_edges",
                "max_sequence_length", "max_decision_vars")
        return all(getattr(self, k) == getattr(other, k) for k in keys)

    def __repr__(self):
        return "RunRecord(%d, %s, eps=%g, %s, cost=%.6g)" % (
            self.query, self.algorithm, self.epsilon, self.status, self.cost)


class RecordWriter(object):
    """Appends RunRecords to a CSV file object, one writer thread at a time.
    """

    def __init__(self, fd, header=True):
        self._lock = threading.Lock()
        self._fd = fd
        self._writer = csv.DictWriter(fd, fieldnames=RunRecord.FIELDS,
                                      lineterminator="\n")
        if header:
            self._writer.writeheader()

    def write(self, record):
        with self._lock:
            self._writer.writerow(record.torow())
            self._fd.flush()


def load_records(fd):
    """Read RunRecords back from a CSV file object written by RecordWriter.
    """
    return [RunRecord.fromrow(row) for row in csv.DictReader(fd)]


def _run_one(spec, bench_scenario, lbg, index, query, algorithm, epsilon):
    config = search.PlannerConfig(
        epsilon=epsilon,
        allow_cycles=spec.allow_cycles,
        max_visits_per_vertex=spec.max_visits,
        order=bench_scenario.order,
        continuity=bench_scenario.continuity,
        weights=bench_scenario.weights,
        velocity_set=bench_scenario.velocity_set,
        max_expansions=spec.max_expansions,
        max_time=spec.max_time)

    graph = bench_scenario.graph
    try:
        if algorithm == "ixg":
            result = search.plan_ixg(graph, lbg, query, config)
        elif algorithm == "ixgstar":
            result = search.plan_ixg_star(graph, lbg, query, config)
        else:
            result = oracle.oracle_enumerate(graph, query,
                                             max_visits=spec.max_visits,
                                             config=config,
                                             path_cap=spec.path_cap)
    except errors.IxgOracleTooLargeError:
        return RunRecord(index, query.start, query.goal, algorithm, epsilon,
                         ORACLE_TOO_LARGE)
    except errors.IxgSolverStalledError as e:
        LOG.warning("Query %d, %s eps=%g: %s", index, algorithm, epsilon, e)
        return RunRecord(index, query.start, query.goal, algorithm, epsilon,
                         SOLVER_STALLED)

    return RunRecord.from_result(index, query, result, epsilon)


def sample_queries(bench_scenario, count, seed):
    rng = np.random.default_rng(seed)
    return [worlds.sample_query(bench_scenario.sets, rng)
            for _ in range(count)]


def run_bench(spec, out=None):
    """Run every (query, algorithm, epsilon) of 'spec'.

    Arguments:
        spec: BenchSpec.
        out: Optional file object; records are appended as CSV as they
            complete.

    Returns:
        List of RunRecord ordered by query, algorithm and epsilon. The
        oracle runs once per query, recorded with epsilon 1.
    """
    bench_scenario = spec.load()
    queries = sample_queries(bench_scenario, spec.queries, spec.seed)

    lbg = None
    if any(a != "oracle" for a in spec.algorithms):
        lbg = lbgs.build_lbg(bench_scenario.graph,
                             weights=bench_scenario.weights,
                             velocity_set=bench_scenario.velocity_set,
                             interface_cost=spec.interface_cost)
        LOG.info("LBG build took %.3fs (not part of the run times).",
                 lbg.build_time)

    writer = RecordWriter(out) if out is not None else None

    def _run_query(index):
        records = []
        for algorithm in spec.algorithms:
            epsilons = (1.0,) if algorithm == "oracle" else spec.epsilons
            for epsilon in epsilons:
                record = _run_one(spec, bench_scenario, lbg, index,
                                  queries[index], algorithm, epsilon)
                if writer is not None:
                    writer.write(record)
                records.append(record)
        return records

    if spec.workers > 1:
        with concurrent.futures.ThreadPoolExecutor(spec.workers) as pool:
            per_query = list(pool.map(_run_query, range(len(queries))))
    else:
        per_query = [_run_query(index) for index in range(len(queries))]

    return [record for records in per_query for record in records]


def summarize(records):
    """Aggregate records per (algorithm, epsilon).

    Returns:
        List of dicts with algorithm, epsilon, runs, success_rate (percent)
        and the means of cost, wall_time and optimized_edges over solved
        runs, in first-seen order.
    """
    groups = {}
    order = []
    for record in records:
        group = (record.algorithm, record.epsilon)
        if group not in groups:
            groups[group] = []
            order.append(group)
        groups[group].append(record)

    rows = []
    for algorithm, epsilon in order:
        group = groups[(algorithm, epsilon)]
        solved = [r for r in group if r.solved]

        def _mean(field):
            if not solved:
                return float("nan")
            return float(np.mean([getattr(r, field) for r in solved]))

        rows.append(dict(algorithm=algorithm, epsilon=epsilon,
                         runs=len(group),
                         success_rate=100.0 * len(solved) / len(group),
                         cost=_mean("cost"), wall_time=_mean("wall_time"),
                         optimized_edges=_mean("optimized_edges"),
                         expansions=_mean("expansions")))

    return rows


def format_summary(rows):
    """Text table of summarize() output."""
    lines = ["%-10s %6s %6s %9s %12s %10s %14s %11s" % (
        "algorithm", "eps", "runs", "success", "cost", "time [s]",
        "# opt. edges", "expansions")]
    for row in rows:
        lines.append("%-10s %6g %6d %8.1f%% %12.6g %10.4f %14.2f %11.2f" % (
            row["algorithm"], row["epsilon"], row["runs"],
            row["success_rate"], row["cost"], row["wall_time"],
            row["optimized_edges"], row["expansions"]))

    return "\n".join(lines)
