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

from ixg import dispatch
from ixg import protocol


@dispatch.multimethod
def lower_bound(obj):
    _ = obj
    raise NotImplementedError()


@dispatch.multimethod
def is_admissible(obj):
    _ = obj
    raise NotImplementedError()


@dispatch.multimethod
def describe(obj):
    _ = obj
    raise NotImplementedError()


class IHeuristic(protocol.Protocol):
    _required_functions = (lower_bound, is_admissible)
    _optional_functions = (describe,)


class ZeroHeuristic(object):
    pass


IHeuristic.implement(for_type=ZeroHeuristic,
                     implementations={
                         lower_bound: lambda h: 0.0,
                         is_admissible: lambda h: True})


class TableHeuristic(object):
    pass


class ProtocolTest(unittest.TestCase):
    def testProtocol(self):
        self.assertTrue(isinstance(ZeroHeuristic(), IHeuristic))
        self.assertTrue(protocol.implements(ZeroHeuristic(), IHeuristic))
        self.assertTrue(protocol.isa(ZeroHeuristic, IHeuristic))
        self.assertEqual(lower_bound(ZeroHeuristic()), 0.0)
        self.assertFalse(protocol.isa(TableHeuristic, IHeuristic))

    def testFunctions(self):
        self.assertEqual(IHeuristic.required(),
                         set([lower_bound, is_admissible]))
        self.assertEqual(IHeuristic.optional(), set([describe]))
        self.assertEqual(len(IHeuristic.functions()), 3)

    def testIncomplete(self):
        class Partial(object):
            pass

        with self.assertRaises(TypeError):
            IHeuristic.implement(for_type=Partial,
                                 implementations={lower_bound: lambda h: 1.0})

        self.assertFalse(protocol.isa(Partial, IHeuristic))

    def testForeignFunction(self):
        @dispatch.multimethod
        def unrelated(obj):
            raise NotImplementedError()

        class Other(object):
            pass

        with self.assertRaises(TypeError):
            IHeuristic.implement(for_type=Other,
                                 implementations={unrelated: lambda h: 1})

    def testArguments(self):
        with self.assertRaises(ValueError):
            IHeuristic.implement(implementations={})

        with self.assertRaises(TypeError):
            protocol.implements(ZeroHeuristic, IHeuristic)

        with self.assertRaises(TypeError):
            protocol.isa(ZeroHeuristic(), IHeuristic)
