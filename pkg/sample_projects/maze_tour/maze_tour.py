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
A sample project that uses IxG to tour the corners of a maze.
"""

from __future__ import print_function

import os
import sys
import tempfile


# The API module is the easiest way to use IxG - 'load' reads a scenario,
# 'build_heuristic' builds the lower bound graph and 'plan' runs a query.
from ixg import api

from ixg.ext import svg


# A 5x5 maze, generated from a fixed seed. Every cell is a box, and boxes
# overlap wherever the maze has no wall.
SCENARIO_PATH = os.path.join(os.path.dirname(os.path.realpath(__file__)),
                             "..", "..", "sample_data", "maze_5x5.json")


# Cell centers of the four corners.
CORNERS = [("south west", [0.5, 0.5]), ("south east", [4.5, 0.5]),
           ("north east", [4.5, 4.5]), ("north west", [0.5, 4.5])]


def main(out_dir=None):
    out_dir = out_dir or tempfile.mkdtemp(prefix="maze_tour")
    scenario = api.load(SCENARIO_PATH)

    # The lower bound graph only depends on the maze, so every query below
    # shares it.
    lbg = api.build_heuristic(scenario)
    print("# Lower bound graph: %d vertices, %d edges." % (lbg.num_vertices,
                                                           lbg.num_edges))

    legs = list(zip(CORNERS, CORNERS[1:] + CORNERS[:1]))
    for (origin, start), (destination, goal) in legs:
        print("# From the %s corner to the %s corner." % (origin, destination))

        # A larger epsilon trades cost for fewer expansions. The cost is
        # never more than epsilon times the optimum.
        for epsilon in (1.0, 3.0):
            result = api.plan(scenario, start, goal, lbg=lbg, epsilon=epsilon)
            if not result:
                print("eps=%g: %s" % (epsilon, result.status))
                continue

            print("eps=%g: cost %.4f through %d sets, %d expansions, "
                  "%d optimized edges" % (
                      epsilon, result.cost, len(result.path) - 2,
                      result.stats.expansions, result.stats.optimized_edges))

        path = os.path.join(out_dir, "%s_to_%s.svg" % (
            origin.replace(" ", "_"), destination.replace(" ", "_")))
        svg.emit_svg(scenario.graph, result.trajectory, path, lbg=lbg,
                     title="%s to %s" % (origin, destination))
        print("# Wrote %s\n" % path)


if __name__ == "__main__":
    main(*sys.argv[1:])
