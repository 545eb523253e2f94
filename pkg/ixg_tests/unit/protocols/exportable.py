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

import unittest

from ixg import geometry
from ixg import graph as gcs
from ixg import trajectory as traj

from ixg.protocols import exportable


class ExportableTest(unittest.TestCase):
    def testBuiltins(self):
        self.assertEqual(exportable.todict(None), None)
        self.assertEqual(exportable.todict((1, 2.5, "x")), [1, 2.5, "x"])
        self.assertEqual(exportable.todict({1: [True]}), {"1": [True]})

    def testConvexSet(self):
        cset = geometry.ConvexSet.from_box([0, 0], [2, 1], label="left")
        self.assertEqual(exportable.todict(cset),
                         {"box": {"lo": [0.0, 0.0], "hi": [2.0, 1.0]},
                          "label": "left"})
        self.assertEqual(
            exportable.loads(geometry.ConvexSet, exportable.dumps(cset)), cset)

        triangle = geometry.ConvexSet([[-1, 0], [0, -1], [1, 1]], [0, 0, 1])
        data = exportable.todict(triangle)
        self.assertNotIn("box", data)
        self.assertEqual(exportable.fromdict(geometry.ConvexSet, data),
                         triangle)

    def testVelocitySet(self):
        unbounded = geometry.VelocitySet.unbounded(2)
        self.assertEqual(exportable.todict(unbounded),
                         {"vmax": None, "dim": 2})
        self.assertEqual(
            exportable.fromdict(geometry.VelocitySet,
                                exportable.todict(unbounded)),
            unbounded)

    def testWeightsAndQuery(self):
        weights = traj.CostWeights(1.0, 0.25)
        self.assertEqual(exportable.dumps(weights), '{"a": 1.0, "b": 0.25}')

        query = gcs.Query([0, 0], [1, 1], start_velocity=[0, 0])
        data = exportable.todict(query)
        self.assertNotIn("goal_velocity", data)
        self.assertEqual(exportable.todict(
            exportable.fromdict(gcs.Query, data)), data)

    def testUnsupported(self):
        with self.assertRaises(NotImplementedError):
            exportable.todict(object())

        with self.assertRaises(NotImplementedError):
            exportable.fromdict(dict, {})
