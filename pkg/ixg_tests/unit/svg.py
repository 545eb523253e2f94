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

import io

from ixg import errors
from ixg import geometry
from ixg import graph as gcs
from ixg import lbg as lbgs
from ixg import search
from ixg import trajectory as traj
from ixg import worlds

from ixg.ext import svg

from ixg_tests import testlib


def render(*args, **kwargs):
    fd = io.BytesIO()
    svg.emit_svg(*args, path=fd, **kwargs)
    return fd.getvalue()


class PolygonTest(testlib.IxgTestCase):
    def testBox(self):
        corners = svg.polygon_vertices(testlib.box([0, 0], [2, 1]))
        self.assertPointsAlmostEqual(corners,
                                     [[0, 0], [2, 0], [2, 1], [0, 1]])

    def testTriangle(self):
        triangle = geometry.ConvexSet.from_halfspaces(
            [([0, -1], 0), ([-1, 0], 0), ([1, 1], 4)])
        corners = svg.polygon_vertices(triangle)
        self.assertEqual(len(corners), 3)
        for corner in ([0, 0], [4, 0], [0, 4]):
            self.assertTrue(any(abs(c[0] - corner[0]) < 1e-6 and
                                abs(c[1] - corner[1]) < 1e-6
                                for c in corners))

    def testNotPlanar(self):
        with self.assertRaises(errors.IxgUnsupportedDimensionError,
                               lambda e: e.actual == 3):
            svg.polygon_vertices(testlib.box([0, 0, 0], [1, 1, 1]))


class EmitSvgTest(testlib.IxgTestCase):
    def setUp(self):
        self.graph = gcs.build_graph(testlib.chain_world())
        self.query = gcs.Query([0.5, 0.5], [4.5, 0.5])

    def testWorldOnly(self):
        data = render(self.graph, None)
        self.assertTrue(data.startswith(b"<?xml"))
        self.assertIn(b"<svg", data)

    def testEmptyTrajectory(self):
        data = render(self.graph, traj.Trajectory([]))
        self.assertEqual(data, render(self.graph, None))

    def testDeterministic(self):
        lbg = lbgs.build_lbg(self.graph)
        result = search.plan_ixg_star(self.graph, lbg, self.query)
        first = render(self.graph, result.trajectory, lbg=lbg,
                       query=self.query, title="chain")
        second = render(self.graph, result.trajectory, lbg=lbg,
                        query=self.query, title="chain")
        self.assertEqual(first, second)
        self.assertIn(b"chain", first)

    def testSetList(self):
        self.assertEqual(render(testlib.chain_world(), None),
                         render(self.graph, None))

    def testMaze(self):
        graph = gcs.build_graph(worlds.generate_maze(4, 4, seed=2))
        self.assertIn(b"<svg", render(graph, None,
                                      lbg=lbgs.build_lbg(graph)))

    def testNotPlanar(self):
        cube = [testlib.box([0, 0, 0], [1, 1, 1])]
        with self.assertRaises(errors.IxgUnsupportedDimensionError,
                               lambda e: e.expected == 2):
            render(cube, None)

    def testNothing(self):
        with self.assertRaises(errors.IxgArgumentError):
            render([], None)
