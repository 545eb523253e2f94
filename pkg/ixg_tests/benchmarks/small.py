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

The oracle against IxG* on the two-box and revisit samples.
"""

from ixg_tests import benchmark
from ixg_tests import testlib


class TwoBoxesOracle(benchmark.IxgBenchmarkCase):
    name = "two_boxes_oracle"
    fixture_name = testlib.get_fixture_path("two_boxes.json")
    algorithm = "oracle"


class RevisitCycles(benchmark.IxgBenchmarkCase):
    name = "revisit_cycles"
    fixture_name = testlib.get_fixture_path("revisit.json")
    options = {"allow_cycles": True, "max_visits_per_vertex": 2}
