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
IxG benchmark helpers.
"""

import cProfile
import io
import pstats

from ixg import api


class IxgBenchmarkCase(object):
    """Profiles one planning query on a sample scenario."""

    __abstract = True

    _profile = None
    _result = None

    name = None
    fixture_name = None
    start = None
    goal = None
    algorithm = "ixgstar"
    options = {}

    def profile(self):
        if not self._profile:
            self.benchmark()

        return self._profile

    def benchmark(self):
        scenario = api.load(self.fixture_name)
        lbg = None
        if self.algorithm != "oracle":
            lbg = api.build_heuristic(scenario)

        profile = cProfile.Profile()
        profile.enable()
        self.run(scenario, lbg)
        profile.disable()

        self._profile = profile
        return profile

    def run(self, scenario, lbg):
        self._result = api.plan(scenario, self.start, self.goal,
                                algorithm=self.algorithm, lbg=lbg,
                                **self.options)

    def result(self):
        self.profile()
        return self._result

    def summary(self):
        return self.full_stats().split("\n")[0].strip()

    def full_stats(self, sortby="cumulative"):
        stream = io.StringIO()
        ps = pstats.Stats(self.profile(), stream=stream).sort_stats(sortby)
        ps.print_stats()
        return stream.getvalue()
