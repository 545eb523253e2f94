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
IxG benchmark suite.

Queries across the 5x5 sample maze at a few suboptimality bounds.
"""

from ixg_tests import benchmark
from ixg_tests import testlib


class MazeCase(benchmark.IxgBenchmarkCase):
    fixture_name = testlib.get_fixture_path("maze_5x5.json")
    start = [0.5, 0.5]
    goal = [4.5, 4.5]


class MazeOptimal(MazeCase):
    name = "maze_ixgstar_eps1"


class MazeBounded(MazeCase):
    name = "maze_ixgstar_eps4"
    options = {"epsilon": 4.0}


class MazeIxg(MazeCase):
    name = "maze_ixg"
    algorithm = "ixg"


class MazeUninformed(MazeCase):
    name = "maze_ixgstar_no_lbg"

    def run(self, scenario, lbg):
        super(MazeUninformed, self).run(scenario, False)
