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
IxG acceptance tests: sequence programs against sampled and brute force
solutions.
"""

import numpy as np

from ixg import geometry
from ixg import trajectory as traj
from ixg import trajopt
from ixg import worlds

from ixg_tests import testlib


PROGRAM_COUNT = 200 if testlib.SLOW_TESTS else 10
SAMPLE_COUNT = 100
GRID_STEPS = 401


def random_program(seed, **kwargs):
    """Two overlapping random boxes, start in the first, goal in the
    second."""
    rng = np.random.default_rng(seed)
    first, second = worlds.generate_box_world(
        ([0, 0], [10, 10]), 2, seed=seed, min_fraction=0.2, max_fraction=0.5,
        overlap_fraction=0.05)
    start = rng.uniform(*first.bounding_box)
    end = rng.uniform(*second.bounding_box)
    return trajopt.SeqProgram([first, second], start=start, end=end, **kwargs)


def overlap_box(program):
    first, second = program.sets
    return (np.maximum(first.bounding_box[0], second.bounding_box[0]),
            np.minimum(first.bounding_box[1], second.bounding_box[1]))


def polyline_cost(program, junction):
    """Cost of constant-velocity straight segments through 'junction'."""
    cost = 0.0
    for a, b in ((program.start, junction), (junction, program.end)):
        delta = np.asarray(b) - np.asarray(a)
        duration = np.max(np.abs(delta) / program.velocity_set.limits)
        cost += (program.weights.a * np.linalg.norm(delta) +
                 program.weights.b * duration)
    return cost


class SolverCorrectnessTest(testlib.IxgTestCase):
    def testBeatsSampledTrajectories(self):
        weights = traj.CostWeights(a=1, b=1)
        velocity_set = geometry.VelocitySet(1.5, dim=2)
        for seed in range(PROGRAM_COUNT):
            program = random_program(seed, order=3, weights=weights,
                                     velocity_set=velocity_set)
            result = trajopt.solve_sequence(program)
            self.assertTrue(result)

            rng = np.random.default_rng(seed + 1000)
            lo, hi = overlap_box(program)
            sampled = min(polyline_cost(program, rng.uniform(lo, hi))
                          for _ in range(SAMPLE_COUNT))
            self.assertLessEqual(traj.cost(result, weights),
                                 sampled + 1e-5 * (1 + sampled))

    def testMatchesWaypointGrid(self):
        weights = traj.CostWeights(a=1, b=0)
        for seed in range(PROGRAM_COUNT):
            program = random_program(seed, order=1, weights=weights)
            result = trajopt.solve_sequence(program)
            self.assertTrue(result)

            lo, hi = overlap_box(program)
            xs, ys = np.meshgrid(np.linspace(lo[0], hi[0], GRID_STEPS),
                                 np.linspace(lo[1], hi[1], GRID_STEPS))
            junctions = np.stack([xs.ravel(), ys.ravel()], axis=1)
            best = np.min(
                np.linalg.norm(junctions - program.start, axis=1) +
                np.linalg.norm(program.end - junctions, axis=1))
            self.assertLessEqual(traj.cost(result, weights), best + 1e-6)
            self.assertRelativelyClose(traj.cost(result, weights), best,
                                       rel=1e-3)
