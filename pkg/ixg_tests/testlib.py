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
IxG test helpers.
"""

import os
import subprocess
import unittest

import numpy as np

from ixg import errors
from ixg import geometry
from ixg import graph as gcs
from ixg import protocol
from ixg import trajectory as traj
from ixg import trajopt


# Set IXG_SLOW_TESTS=1 to run the full-size acceptance suites.
SLOW_TESTS = os.environ.get("IXG_SLOW_TESTS") == "1"


def get_fixture_path(name):
    return os.path.join("sample_data", name)


def box(lo, hi, label=None):
    return geometry.ConvexSet.from_box(lo, hi, label=label)


def chain_world():
    """Three boxes A-B-C in a row, overlapping pairwise."""
    return [box([0, 0], [2, 1], "A"), box([1.5, 0], [3.5, 1], "B"),
            box([3, 0], [5, 1], "C")]


def diamond_world():
    """Start box S, goal box G and two routes between them: a short one
    through N and a long one through the detour F."""
    return [box([0, 0], [1, 1], "S"),
            box([0.9, 0], [2.1, 0.8], "N"),
            box([0, 0.9], [1, 4], "F1"),
            box([0, 3.9], [3, 5], "F2"),
            box([2, 0], [3, 5], "G")]


def markov_world():
    """A world where the cheapest way into a set is not the cheapest way
    through it. X is reached more cheaply through A, but the goal high up in
    X is reached more cheaply through B."""
    return [box([-1, -1], [1, 1], "S"),
            box([2, -10], [3, 10], "X"),
            box([0.5, -0.5], [2.5, 0.5], "A"),
            box([0.5, 0.5], [2.5, 6], "B")]


def markov_query():
    return gcs.Query(start=[0, 0], goal=[2.5, 9])


class StallingBackend(trajopt.ClarabelBackend):
    """Clarabel, but programs through any of 'stall_sets' stall.

    With the default, routes through B in markov_world stall.
    """

    name = "stalling"
    stall_sets = frozenset([3])

    def stalls(self, program):
        return bool(self.stall_sets.intersection(program.set_ids))

    def solve(self, problem, warm_start=False, program=None):
        if program is not None and self.stalls(program):
            raise errors.IxgSolverStalledError(
                "Gave up on %r." % (program,), status="user_limit")

        return super(StallingBackend, self).solve(
            problem, warm_start=warm_start, program=program)


class AlwaysStallingBackend(StallingBackend):
    name = "always_stalling"

    def stalls(self, program):
        return True


trajopt.register_backend(StallingBackend.name, StallingBackend)
trajopt.register_backend(AlwaysStallingBackend.name, AlwaysStallingBackend)


class IxgTestCase(unittest.TestCase):
    def runPythonScript(self, script_path, args=()):
        cmd = ["python", os.path.join(os.getcwd(), script_path)]
        cmd.extend(args)
        env = dict(os.environ)
        env["PYTHONPATH"] = os.getcwd()
        proc = subprocess.Popen(args=cmd, env=env,
                                stdout=subprocess.PIPE,
                                stderr=subprocess.PIPE)
        stdout, stderr = proc.communicate()
        err = proc.returncode

        return err, stdout, stderr

    def assertPythonScript(self, script_path, args=()):
        err, stdout, stderr = self.runPythonScript(script_path, args)

        self.assertEqual(err, 0, stderr)
        return stdout, stderr

    def assertImplemented(self, for_type, function):
        self.assertTrue(function.implemented_for_type(for_type),
                        "Multimethod %r is not implemented for %r." %
                        (function, for_type))

    def assertIsa(self, t, p):
        self.assertTrue(protocol.isa(t, p), "%r is not type %r." % (t, p))

    def assertPointsAlmostEqual(self, x, y, tol=1e-6):
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        self.assertEqual(x.shape, y.shape)
        self.assertTrue(np.allclose(x, y, atol=tol, rtol=0),
                        "%r != %r (tol %g)" % (x.tolist(), y.tolist(), tol))

    def assertRelativelyClose(self, x, y, rel=1e-4, abs_tol=1e-6):
        self.assertTrue(abs(x - y) <= max(rel * max(abs(x), abs(y)), abs_tol),
                        "%r and %r differ by more than %g relative." %
                        (x, y, rel))

    def assertValid(self, trajectory, graph, velocity_set=None, query=None,
                    tol=1e-5):
        velocity_set = velocity_set or geometry.VelocitySet.unbounded(
            graph.dim)
        report = traj.validate(trajectory, graph, velocity_set, tol=tol,
                               query=query)
        self.assertTrue(report, "Invalid trajectory: %r" % report)

    def assertRaises(self, error_type, error_f=None):
        class _catcher(object):
            def __init__(self, case):
                self.case = case

            def __enter__(self):
                return self

            def __exit__(self, exc_type, exc_value, tb):
                if exc_value is None:
                    return self.case.fail("Didn't raise %s!" % (error_type,))

                if not issubclass(exc_type, error_type):
                    return self.case.fail("Raised %s when %s was expected."
                                          " Full error: %s." % (
                                              exc_type, error_type, exc_value))

                if callable(error_f) and not error_f(exc_value):
                    return self.case.fail(
                        "Exception %r didn't match control lambda." % exc_value)

                return True

        return _catcher(self)
