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
IxG trajectories: piecewise Bezier curves through convex sets.

A TrajectorySegment is a Bezier curve of order r in the normalized parameter
s in [0, 1], traversed in 'duration' seconds while inside one convex set. The
time-domain velocity of a segment is itself a Bezier curve of order r - 1
with control points r * (c[i+1] - c[i]) / duration.

The length L of a trajectory is the sum of control polygon edge lengths, an
upper bound on the arc length that is exact for straight segments.
"""

import csv
import logging

import numpy as np

from ixg import errors
from ixg import geometry

from ixg.protocols import exportable

LOG = logging.getLogger(__name__)

DEFAULT_TOL = 1e-6

# Dense samples per segment checked by validate, on top of control points.
VALIDATE_SAMPLES = 32


class CostWeights(object):
    """Weights of the objective a * L + b * T.

    Arguments:
        a: Weight of the length term, >= 0.
        b: Weight of the duration term, >= 0.
    """

    a = 1.0
    b = 1.0

    def __init__(self, a=1.0, b=1.0):
        a = float(a)
        b = float(b)
        if a < 0 or b < 0 or not a + b > 0:
            raise errors.IxgArgumentError(
                "Cost weights must be >= 0 and not both zero, got a=%r b=%r." %
                (a, b))

        self.a = a
        self.b = b

    def scaled(self, factor):
        return CostWeights(self.a * factor, self.b * factor)

    def __eq__(self, other):
        return (isinstance(other, CostWeights) and
                (self.a, self.b) == (other.a, other.b))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return "CostWeights(a=%r, b=%r)" % (self.a, self.b)


def de_casteljau(points, s):
    """Evaluate the Bezier curve with control 'points' at parameter 's'."""
    points = np.array(points, dtype=float)
    while points.shape[0] > 1:
        points = (1.0 - s) * points[:-1] + s * points[1:]

    return points[0]


class TrajectorySegment(object):
    """One Bezier piece of a trajectory.

    Arguments:
        control_points: (r + 1, d) array-like.
        duration: Traversal time T_k > 0.
        set_id: Id of the graph vertex the segment must stay in.
    """

    control_points = None
    duration = None
    set_id = None

    def __init__(self, control_points, duration, set_id):
        points = np.atleast_2d(np.array(control_points, dtype=float))
        if points.shape[0] < 2:
            raise errors.IxgArgumentError(
                "A segment needs at least 2 control points, got %d." %
                points.shape[0])

        if not np.all(np.isfinite(points)):
            raise errors.IxgArgumentError("Control points must be finite.")

        duration = float(duration)
        if not duration > 0:
            raise errors.IxgArgumentError(
                "Segment duration must be positive, got %r." % duration)

        points.setflags(write=False)
        self.control_points = points
        self.duration = duration
        self.set_id = set_id

    @property
    def order(self):
        return self.control_points.shape[0] - 1

    @property
    def dim(self):
        return self.control_points.shape[1]

    @property
    def start(self):
        return self.control_points[0]

    @property
    def end(self):
        return self.control_points[-1]

    @property
    def length(self):
        return float(np.sum(np.linalg.norm(np.diff(self.control_points,
                                                   axis=0), axis=1)))

    def velocity_points(self):
        """Control points of the time-domain velocity curve."""
        return (self.order * np.diff(self.control_points, axis=0) /
                self.duration)

    def start_velocity(self):
        return self.velocity_points()[0]

    def end_velocity(self):
        return self.velocity_points()[-1]

    def evaluate(self, s):
        return de_casteljau(self.control_points, s)

    def reversed(self):
        return TrajectorySegment(self.control_points[::-1], self.duration,
                                 self.set_id)

    def __repr__(self):
        return "TrajectorySegment(set_id=%r, order=%d, duration=%.6g)" % (
            self.set_id, self.order, self.duration)


class Trajectory(object):
    """Ordered Bezier segments with C^j continuity at the junctions.

    An empty trajectory (no segments) is allowed and has zero cost.
    """

    segments = ()
    continuity_order = 0

    _length = None
    _duration = None

    def __init__(self, segments, continuity_order=0):
        if continuity_order not in (0, 1):
            raise errors.IxgArgumentError(
                "Continuity order must be 0 or 1, got %r." % continuity_order)

        self.segments = tuple(segments)
        self.continuity_order = continuity_order
        self._length = sum(segment.length for segment in self.segments)
        self._duration = sum(segment.duration for segment in self.segments)

    @property
    def length(self):
        return self._length

    @property
    def duration(self):
        return self._duration

    @property
    def set_ids(self):
        return [segment.set_id for segment in self.segments]

    @property
    def is_empty(self):
        return not self.segments

    @property
    def dim(self):
        return self.segments[0].dim if self.segments else None

    @property
    def start(self):
        return self.segments[0].start

    @property
    def end(self):
        return self.segments[-1].end

    def __len__(self):
        return len(self.segments)

    def reversed(self):
        """The same curve traversed backwards in time."""
        return Trajectory([segment.reversed()
                           for segment in reversed(self.segments)],
                          continuity_order=self.continuity_order)

    def concatenate(self, other):
        return Trajectory(self.segments + tuple(other.segments),
                          continuity_order=min(self.continuity_order,
                                               other.continuity_order))

    def __repr__(self):
        return "Trajectory(%d segments, L=%.6g, T=%.6g)" % (
            len(self.segments), self.length, self.duration)


def cost(trajectory, weights):
    """The objective a * L + b * sum(T_k).

    Examples:
        cost(Trajectory([TrajectorySegment([[0, 0], [1, 0]], 3.0, 0)]),
             CostWeights(a=0, b=1))
        # => 3.0
    """
    if trajectory.is_empty:
        return 0.0

    return weights.a * trajectory.length + weights.b * trajectory.duration


def sample(trajectory, n):
    """Evaluate 'trajectory' at n uniformly spaced global times.

    Returns:
        List of (time, point). The first and last points are exactly the
        trajectory's end points.

    Raises:
        IxgArgumentError if n < 2 or the trajectory is empty.
    """
    if n < 2:
        raise errors.IxgArgumentError("Need at least 2 samples, got %r." % n)

    if trajectory.is_empty:
        raise errors.IxgArgumentError("Cannot sample an empty trajectory.")

    starts = np.cumsum([0.0] + [seg.duration for seg in trajectory.segments])
    total = starts[-1]
    samples = []
    for k, t in enumerate(np.linspace(0.0, total, n)):
        if k == 0:
            samples.append((0.0, np.array(trajectory.start)))
            continue

        if k == n - 1:
            samples.append((float(total), np.array(trajectory.end)))
            continue

        index = int(np.searchsorted(starts, t, side="right")) - 1
        index = min(max(index, 0), len(trajectory.segments) - 1)
        segment = trajectory.segments[index]
        s = (t - starts[index]) / segment.duration
        samples.append((float(t), segment.evaluate(min(max(s, 0.0), 1.0))))

    return samples


class Violation(object):
    """One failed check of validate."""

    CONTAINMENT = "containment"
    VELOCITY = "velocity"
    CONTINUITY = "continuity"
    BOUNDARY = "boundary"

    kind = None
    segment = None
    detail = None

    def __init__(self, kind, segment, detail):
        self.kind = kind
        self.segment = segment
        self.detail = detail

    def __repr__(self):
        return "Violation(%s, segment=%r: %s)" % (self.kind, self.segment,
                                                  self.detail)


class ValidityReport(object):
    """Violations found by validate. Truthy when the trajectory is valid."""

    violations = ()

    def __init__(self, violations=()):
        self.violations = tuple(violations)

    @property
    def valid(self):
        return not self.violations

    def __bool__(self):
        return self.valid

    def kinds(self):
        return sorted(set(violation.kind for violation in self.violations))

    def __repr__(self):
        if self.valid:
            return "ValidityReport(valid)"

        return "ValidityReport(%d violations: %s)" % (len(self.violations),
                                                      ", ".join(self.kinds()))


def _close(x, y, tol):
    return float(np.max(np.abs(np.asarray(x) - np.asarray(y)))) <= tol


def validate(trajectory, graph, velocity_set, tol=DEFAULT_TOL, query=None):
    """Check containment, speed limits, continuity and boundary conditions.

    Containment and velocity are checked on control points (sufficient by the
    convex hull property) and containment again on VALIDATE_SAMPLES points per
    segment.

    Arguments:
        trajectory: The Trajectory to check.
        graph: GcsGraph owning the set ids.
        velocity_set: VelocitySet with the speed limits.
        tol: Absolute tolerance.
        query: Optional Query; if given, its start, goal and any boundary
            velocities are checked too.

    Returns:
        ValidityReport, valid iff nothing was violated.

    Raises:
        IxgArgumentError if a segment refers to an unknown set.
    """
    violations = []
    segments = trajectory.segments
    for k, segment in enumerate(segments):
        if not 0 <= segment.set_id < graph.num_vertices:
            raise errors.IxgArgumentError(
                "Segment %d refers to unknown set %r." % (k, segment.set_id))

        cset = graph.vertices[segment.set_id]
        for i, point in enumerate(segment.control_points):
            if not geometry.contains(cset, point, tol=tol):
                violations.append(Violation(
                    Violation.CONTAINMENT, k,
                    "control point %d %r outside set %d" %
                    (i, point.tolist(), segment.set_id)))

        for s in np.linspace(0.0, 1.0, VALIDATE_SAMPLES):
            point = segment.evaluate(s)
            if not geometry.contains(cset, point, tol=tol):
                violations.append(Violation(
                    Violation.CONTAINMENT, k,
                    "sample at s=%.3f outside set %d" % (s, segment.set_id)))
                break

        derivative = segment.order * np.diff(segment.control_points, axis=0)
        bound = velocity_set.limits * segment.duration + tol
        if np.any(np.abs(derivative) > bound):
            violations.append(Violation(
                Violation.VELOCITY, k,
                "velocity control points exceed %r" % velocity_set))

    for k in range(len(segments) - 1):
        before, after = segments[k], segments[k + 1]
        if not _close(before.end, after.start, tol):
            violations.append(Violation(
                Violation.CONTINUITY, k,
                "junction %r != %r" % (before.end.tolist(),
                                       after.start.tolist())))
            continue

        if trajectory.continuity_order >= 1:
            v_out = before.end_velocity()
            v_in = after.start_velocity()
            scale = max(1.0, float(np.max(np.abs(v_out))),
                        float(np.max(np.abs(v_in))))
            if not _close(v_out, v_in, tol * scale):
                violations.append(Violation(
                    Violation.CONTINUITY, k,
                    "velocity jump %r -> %r" % (v_out.tolist(),
                                                v_in.tolist())))

    if query is not None and segments:
        if not _close(trajectory.start, query.start, tol):
            violations.append(Violation(Violation.BOUNDARY, 0,
                                        "does not start at the query start"))

        if not _close(trajectory.end, query.goal, tol):
            violations.append(Violation(Violation.BOUNDARY,
                                        len(segments) - 1,
                                        "does not end at the query goal"))

        for velocity, actual, index in (
                (query.start_velocity, segments[0].start_velocity(), 0),
                (query.goal_velocity, segments[-1].end_velocity(),
                 len(segments) - 1)):
            if velocity is None:
                continue

            scale = max(1.0, float(np.max(np.abs(velocity))))
            if not _close(actual, velocity, tol * scale):
                violations.append(Violation(
                    Violation.BOUNDARY, index,
                    "velocity %r != %r" % (actual.tolist(),
                                           velocity.tolist())))

    return ValidityReport(violations)


def export_csv(trajectory, fd, n=100):
    """Write 'n' samples as CSV with the header t,x1..xd."""
    writer = csv.writer(fd, lineterminator="\n")
    writer.writerow(["t"] + ["x%d" % (i + 1) for i in range(trajectory.dim)])
    for t, point in sample(trajectory, n):
        writer.writerow(["%.9g" % t] + ["%.9g" % x for x in point])


# IExportable implementations:

def _segment_todict(segment):
    return dict(control_points=segment.control_points.tolist(),
                duration=segment.duration,
                set_id=segment.set_id)


def _trajectory_todict(trajectory):
    return dict(continuity_order=trajectory.continuity_order,
                segments=[_segment_todict(s) for s in trajectory.segments])


def _trajectory_fromdict(cls, data):
    return cls([TrajectorySegment(**segment) for segment in data["segments"]],
               continuity_order=data.get("continuity_order", 0))


exportable.IExportable.implement(
    for_type=CostWeights,
    implementations={
        exportable.todict: lambda w: dict(a=w.a, b=w.b),
        exportable.fromdict: lambda cls, data: cls(a=data["a"], b=data["b"])
    }
)


exportable.IExportable.implement(
    for_type=TrajectorySegment,
    implementations={
        exportable.todict: _segment_todict,
        exportable.fromdict: lambda cls, data: cls(**data)
    }
)


exportable.IExportable.implement(
    for_type=Trajectory,
    implementations={
        exportable.todict: _trajectory_todict,
        exportable.fromdict: _trajectory_fromdict
    }
)


exportable.IExportable.implement(
    for_type=ValidityReport,
    implementations={
        exportable.todict: lambda report: dict(
            valid=report.valid,
            violations=[dict(kind=v.kind, segment=v.segment, detail=v.detail)
                        for v in report.violations])
    }
)
