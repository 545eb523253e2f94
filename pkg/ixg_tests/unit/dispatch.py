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

import abc
import unittest

from ixg import dispatch

# Type hierarchy to test over.


class Region(object):
    pass


class Bounded(object, metaclass=abc.ABCMeta):
    pass


class Box(Region):
    def describe(self):
        return "axis aligned"


class Cube(Box):
    pass


class Polytope(Region):
    pass


class Ellipsoid(object):
    pass


Bounded.register(Ellipsoid)
Bounded.register(Polytope)


@dispatch.multimethod
def describe(region):
    _ = region
    raise NotImplementedError()


# Register the existing instance method:
describe.implement(for_type=Box, implementation=Box.describe)


# Abstract types should work.
@describe.implementation(for_type=Bounded)
def describe(region):
    _ = region
    return "bounded"


# Concrete types in the MRO beat abstract ones.
@describe.implementation(for_type=Region)
def describe(region):
    _ = region
    return "a region"


@dispatch.multimethod
def volume(region, scale=1.0):
    _ = region
    return 0.0 * scale


@dispatch.class_multimethod
def unit(cls):
    raise NotImplementedError()


unit.implement(for_type=Region, implementation=lambda cls: cls())


class DispatchTest(unittest.TestCase):
    def testDispatch(self):
        self.assertEqual(describe(Box()), "axis aligned")
        self.assertEqual(describe(Cube()), "axis aligned")
        self.assertEqual(describe(Ellipsoid()), "bounded")
        self.assertEqual(describe(Polytope()), "a region")

    def testMissing(self):
        with self.assertRaises(NotImplementedError):
            describe(object())

        with self.assertRaises(TypeError):
            describe(None)

        with self.assertRaises(ValueError):
            describe()

    def testDefault(self):
        self.assertEqual(volume(Box()), 0.0)
        self.assertEqual(volume(Box(), scale=3.0), 0.0)

    def testCacheInvalidation(self):
        @dispatch.multimethod
        def tag(region):
            raise NotImplementedError()

        tag.implement(for_type=Region, implementation=lambda r: "region")
        self.assertEqual(tag(Cube()), "region")
        self.assertFalse(tag.implemented_for_type(Ellipsoid))

        tag.implement(for_types=(Cube, Ellipsoid),
                      implementation=lambda r: "special")
        self.assertEqual(tag(Cube()), "special")
        self.assertEqual(tag(Box()), "region")
        self.assertTrue(tag.implemented_for_type(Ellipsoid))

    def testArguments(self):
        with self.assertRaises(ValueError):
            volume.implement(lambda r: 1.0)

        with self.assertRaises(ValueError):
            volume.implement(lambda r: 1.0, for_type=Box, for_types=(Box,))

        with self.assertRaises(TypeError):
            volume.implement(lambda r: 1.0, for_types=[Box])

    def testClassMultimethod(self):
        self.assertIsInstance(unit(Cube), Cube)

        with self.assertRaises(TypeError):
            unit(Cube())

        with self.assertRaises(NotImplementedError):
            unit(Ellipsoid)
