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
IxG convenience API.
"""

import logging
import os

from ixg import errors
from ixg import graph as gcs
from ixg import lbg as lbgs
from ixg import oracle
from ixg import scenario as scenarios
from ixg import search

LOG = logging.getLogger(__name__)

PLANNERS = {
    "ixg": search.plan_ixg,
    "ixgstar": search.plan_ixg_star,
}


def load(path):
    """Read a scenario file. See ixg.scenario for the format."""
    return scenarios.load_scenario(path)


def build_heuristic(scenario, interface_cost=lbgs.INTERFACE_ZERO,
                    cache=None, workers=1):
    """The LBG of 'scenario', optionally through an on-disk cache.

    Arguments:
        scenario: Scenario.
        interface_cost: 'zero' or 'chord'.
        cache: Optional path. An existing cache built for the same scenario
            and parameters is loaded; otherwise the LBG is built and saved
            there.
        workers: Threads solving triplets.

    Returns:
        LowerBoundGraph.
    """
    key = None
    if cache is not None:
        key = lbgs.cache_key(scenario.digest(), scenario.weights,
                             scenario.velocity_set, interface_cost)
        if os.path.exists(cache):
            try:
                return lbgs.load_lbg(cache, key=key)
            except errors.IxgCacheError as e:
                LOG.warning("Rebuilding the LBG: %s", e)

    lbg = lbgs.build_lbg(scenario.graph, weights=scenario.weights,
                         velocity_set=scenario.velocity_set,
                         interface_cost=interface_cost, workers=workers)
    if cache is not None:
        lbgs.save_lbg(lbg, cache, key=key)

    return lbg


def plan(scenario, start=None, goal=None, algorithm="ixgstar", lbg=None,
         start_velocity=None, goal_velocity=None, max_visits=1, **options):
    """Plan from 'start' to 'goal' in 'scenario'.

    Arguments:
        scenario: Scenario (or path to one).
        start, goal: Query points; default to the scenario's query.
        algorithm: 'ixg', 'ixgstar' or 'oracle'.
        lbg: LowerBoundGraph; built from the scenario if not given. Pass
            False for the uninformed heuristic l = 0.
        start_velocity, goal_velocity: Optional boundary velocities.
        max_visits: Oracle visit budget.
        options: PlannerConfig fields. Order, continuity, weights and the
            velocity set default to the scenario's.

    Returns:
        PlanResult.

    Examples:
        result = plan(load("sample_data/maze_5x5.json"), [0.5, 0.5],
                      [4.5, 4.5], epsilon=2)
        if result:
            print(result.cost)
    """
    if not isinstance(scenario, scenarios.Scenario):
        scenario = load(scenario)

    if start is None and goal is None:
        if scenario.query is None:
            raise errors.IxgArgumentError(
                "No query given and %r has none." % scenario)
        query = scenario.query
    else:
        query = gcs.Query(start, goal, start_velocity=start_velocity,
                          goal_velocity=goal_velocity)

    for name in ("order", "continuity", "weights", "velocity_set"):
        if options.get(name) is None:
            options[name] = getattr(scenario, name)
    config = search.PlannerConfig(**options)

    if algorithm == "oracle":
        return oracle.oracle_enumerate(scenario.graph, query,
                                       max_visits=max_visits, config=config)

    planner = PLANNERS.get(algorithm)
    if planner is None:
        raise errors.IxgArgumentError(
            "Unknown algorithm %r, expected one of %r." %
            (algorithm, sorted(PLANNERS) + ["oracle"]), key="algorithm")

    if lbg is None:
        lbg = build_heuristic(scenario)
    elif lbg is False:
        lbg = None

    return planner(scenario.graph, lbg, query, config)
