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
IxG coverage tests for protocols.
"""

from ixg import geometry
from ixg import graph as gcs
from ixg import lbg as lbgs
from ixg import scenario as scenarios
from ixg import search
from ixg import trajectory as traj

from ixg.ext import svg  # pylint: disable=unused-import
from ixg.protocols import drawable
from ixg.protocols import exportable

from ixg_tests import testlib


EXPORTED_TYPES = (geometry.ConvexSet, geometry.VelocitySet, gcs.Query,
                  traj.CostWeights, traj.TrajectorySegment, traj.Trajectory,
                  traj.ValidityReport, lbgs.LowerBoundGraph,
                  scenarios.Scenario, search.PlannerStats, search.PlanResult)

DRAWN_TYPES = (geometry.ConvexSet, traj.Trajectory, gcs.GcsGraph,
               lbgs.LowerBoundGraph)


class ProtocolCoverageTest(testlib.IxgTestCase):
    def testExportable(self):
        for cls in EXPORTED_TYPES:
            self.assertIsa(cls, exportable.IExportable)
            self.assertImplemented(for_type=cls, function=exportable.todict)

    def testRoundTrips(self):
        # Everything read back from disk has a fromdict.
        for cls in (geometry.ConvexSet, geometry.VelocitySet, gcs.Query,
                    traj.CostWeights, traj.Trajectory, lbgs.LowerBoundGraph,
                    scenarios.Scenario):
            self.assertImplemented(for_type=cls, function=exportable.fromdict)

    def testDrawable(self):
        for cls in DRAWN_TYPES:
            self.assertIsa(cls, drawable.IDrawable)
            self.assertImplemented(for_type=cls, function=drawable.draw)
