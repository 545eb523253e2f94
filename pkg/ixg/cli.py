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
The 'ixg' command.

    ixg plan --scenario maze.json --start 0.5,0.5 --goal 4.5,4.5 \\
        --algo ixgstar --eps 2 --out traj.csv --svg traj.svg
    ixg lbg-build --scenario maze.json --out maze.lbg
    ixg bench --spec bench.json --out results.csv

Exit codes: 0 solved, 1 solver failure, 2 infeasible, 3 budget exhausted,
4 bad input.
"""

from __future__ import print_function

import argparse
import json
import logging
import sys

from ixg import api
from ixg import bench
from ixg import errors
from ixg import lbg as lbgs
from ixg import search
from ixg import trajectory as traj
from ixg import version

from ixg.protocols import exportable

LOG = logging.getLogger(__name__)

EXIT_SOLVED = 0
EXIT_SOLVER = 1
EXIT_INFEASIBLE = 2
EXIT_BUDGET = 3
EXIT_INPUT = 4

STATUS_CODES = {
    search.SOLVED: EXIT_SOLVED,
    search.INFEASIBLE: EXIT_INFEASIBLE,
    search.BUDGET_EXHAUSTED: EXIT_BUDGET,
}


class ArgumentParser(argparse.ArgumentParser):
    """Raises instead of exiting, so usage errors get exit code 4."""

    def error(self, message):
        raise errors.IxgArgumentError("%s: %s" % (self.prog, message))


def point(text):
    """Parse 'x,y[,z...]'."""
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("not a point: %r" % text)


def _add_interface_flags(parser):
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--lbg-zero-interface", dest="interface_cost",
                       action="store_const", const=lbgs.INTERFACE_ZERO,
                       help="Interface edges cost 0 (the default).")
    group.add_argument("--lbg-interface", dest="interface_cost",
                       choices=lbgs.INTERFACE_MODES,
                       help="Interface edge cost mode. 'chord' is not a "
                       "proven lower bound and voids the optimality "
                       "guarantee.")
    parser.set_defaults(interface_cost=lbgs.INTERFACE_ZERO)


def build_parser():
    parser = ArgumentParser(
        prog="ixg",
        description="Plan over graphs of convex sets with IxG and IxG*.")
    parser.add_argument("--version", action="version",
                        version="%(prog)s " + version.get_version())
    parser.add_argument("-v", "--verbose", action="count", default=0)
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    plan = commands.add_parser("plan", help="Solve one query.")
    plan.add_argument("--scenario", required=True)
    plan.add_argument("--start", type=point)
    plan.add_argument("--goal", type=point)
    plan.add_argument("--start-velocity", type=point)
    plan.add_argument("--goal-velocity", type=point)
    plan.add_argument("--algo", default="ixgstar",
                      choices=("ixg", "ixgstar", "oracle"))
    plan.add_argument("--eps", type=float, default=1.0)
    plan.add_argument("--order", type=int)
    plan.add_argument("--continuity", type=int, choices=(0, 1))
    plan.add_argument("--allow-cycles", action="store_true")
    plan.add_argument("--max-visits", type=int, default=None)
    plan.add_argument("--escalate-cycles", action="store_true")
    plan.add_argument("--upper-bound",
                      choices=(search.UPPER_BOUND_TIGHT,
                               search.UPPER_BOUND_PAPER),
                      default=search.UPPER_BOUND_TIGHT)
    plan.add_argument("--no-upper-bound", action="store_true",
                      help="Search IxG* without the IxG upper bound.")
    plan.add_argument("--no-heuristic", action="store_true",
                      help="Use l = 0 instead of the LBG.")
    plan.add_argument("--lbg", metavar="CACHE",
                      help="LBG cache file, read if valid, else written.")
    _add_interface_flags(plan)
    plan.add_argument("--backend")
    plan.add_argument("--max-expansions", type=int)
    plan.add_argument("--max-time", type=float)
    plan.add_argument("--trace", action="store_true",
                      help="Log every expansion to stderr.")
    plan.add_argument("--out", help="Trajectory samples as CSV.")
    plan.add_argument("--samples", type=int, default=100)
    plan.add_argument("--svg", help="Draw the solution (2D only).")
    plan.add_argument("--stats", help="Statistics as JSON.")
    plan.set_defaults(run=run_plan)

    build = commands.add_parser("lbg-build",
                                help="Build and cache the lower bound graph.")
    build.add_argument("--scenario", required=True)
    build.add_argument("--out", required=True)
    build.add_argument("--workers", type=int, default=1)
    _add_interface_flags(build)
    build.set_defaults(run=run_lbg_build)

    sweep = commands.add_parser("bench", help="Run a benchmark spec.")
    sweep.add_argument("--spec", required=True)
    sweep.add_argument("--out", required=True)
    sweep.add_argument("--workers", type=int)
    sweep.set_defaults(run=run_bench)

    return parser


def run_plan(args):
    scenario = api.load(args.scenario)
    if (args.start is None) != (args.goal is None):
        raise errors.IxgArgumentError("Give both --start and --goal.")

    if args.trace:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        search.TRACE.addHandler(handler)
        search.TRACE.setLevel(logging.INFO)

    lbg = None
    if args.no_heuristic:
        lbg = False
    elif args.algo != "oracle":
        lbg = api.build_heuristic(scenario,
                                  interface_cost=args.interface_cost,
                                  cache=args.lbg)

    max_visits = args.max_visits
    if max_visits is None:
        max_visits = 2 if args.allow_cycles else 1

    result = api.plan(
        scenario, start=args.start, goal=args.goal, algorithm=args.algo,
        lbg=lbg, start_velocity=args.start_velocity,
        goal_velocity=args.goal_velocity, max_visits=max_visits,
        epsilon=args.eps, order=args.order, continuity=args.continuity,
        allow_cycles=args.allow_cycles or None,
        max_visits_per_vertex=max_visits,
        escalate_cycles=args.escalate_cycles or None,
        upper_bound_mode=args.upper_bound,
        use_upper_bound=False if args.no_upper_bound else None,
        backend=args.backend, max_expansions=args.max_expansions,
        max_time=args.max_time)

    print("%s: %s" % (result.algorithm, result.status))
    if result:
        print("cost: %.9g" % result.cost)
        print("path: %s" % " ".join(str(v) for v in result.path))

    if args.stats:
        with open(args.stats, "w") as fd:
            json.dump(exportable.todict(result), fd, indent=2,
                      sort_keys=True)

    if result.trajectory is not None and not result.trajectory.is_empty:
        if args.out:
            with open(args.out, "w") as fd:
                traj.export_csv(result.trajectory, fd, n=args.samples)

    if args.svg:
        from ixg.ext import svg
        svg.emit_svg(scenario.graph, result.trajectory, args.svg,
                     query=scenario.query if args.start is None else None,
                     title="%s %s" % (result.algorithm, result.status))

    return STATUS_CODES.get(result.status, EXIT_SOLVER)


def run_lbg_build(args):
    scenario = api.load(args.scenario)
    key = lbgs.cache_key(scenario.digest(), scenario.weights,
                         scenario.velocity_set, args.interface_cost)
    lbg = lbgs.build_lbg(scenario.graph, weights=scenario.weights,
                         velocity_set=scenario.velocity_set,
                         interface_cost=args.interface_cost,
                         workers=args.workers)
    lbgs.save_lbg(lbg, args.out, key=key)

    report = lbgs.size_report(scenario.graph, lbg)
    print("LBG: %d vertices (bound %d), %d edges (bound %d), built in %.3fs" %
          (report["vertices"], report["vertex_bound"], report["edges"],
           report["edge_bound"], lbg.build_time))
    return EXIT_SOLVED


def run_bench(args):
    spec = bench.load_bench_spec(args.spec)
    if args.workers:
        spec = bench.BenchSpec(spec, workers=args.workers)

    with open(args.out, "w") as fd:
        records = bench.run_bench(spec, out=fd)

    print(bench.format_summary(bench.summarize(records)))
    return EXIT_SOLVED


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except errors.IxgArgumentError as e:
        print(e.text, file=sys.stderr)
        return EXIT_INPUT

    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level,
                        format="%(levelname)s %(name)s: %(message)s",
                        force=True)

    try:
        return args.run(args)
    except (errors.IxgArgumentError, errors.IxgParseError,
            errors.IxgQueryOutsideCoverError, errors.IxgEmptySetError,
            errors.IxgUnboundedSetError, errors.IxgUnsupportedDimensionError,
            errors.IxgCacheError, errors.IxgOracleTooLargeError) as e:
        print("ixg: %s" % e, file=sys.stderr)
        return EXIT_INPUT
    except IOError as e:
        print("ixg: %s" % e, file=sys.stderr)
        return EXIT_INPUT
    except errors.IxgSolverStalledError as e:
        print("ixg: %s" % e, file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
