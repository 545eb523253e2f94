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
IxG sequence optimization.

Given a fixed sequence of convex sets Q_1..Q_K, find one Bezier segment per
set minimizing a * L + b * sum(T_k), where:

 - every control point of segment k lies in Q_k,
 - the velocity control points r * (c[i+1] - c[i]) lie in T_k * D for the
   velocity box D,
 - consecutive segments share their junction point (and, with continuity 1,
   their junction velocity),
 - the first and last points satisfy the boundary conditions.

All of it is a second-order cone program in the control points and
durations. With continuity 1 every segment shares one duration variable,
which keeps the velocity matching linear.

Solving goes through cvxpy; the solver backend is picked by name from a
registry (see register_backend).
"""

import abc
import logging
import threading

import cvxpy as cp
import numpy as np

from ixg import errors
from ixg import geometry
from ixg import trajectory as traj

LOG = logging.getLogger(__name__)

# Durations below this are clamped after the solve.
MIN_DURATION = 1e-9

# Boundary points this far outside their set still count as inside.
BOUNDARY_TOL = 1e-6


class SolverBackend(object, metaclass=abc.ABCMeta):
    """Binds the sequence program to a concrete conic solver."""

    BACKENDS = {}

    name = None
    solver = None
    options = {}

    @classmethod
    def register_backend(cls, subcls, shorthand=None):
        cls.register(subcls)

        if shorthand is None:
            shorthand = subcls.name

        cls.BACKENDS[shorthand] = subcls

    @classmethod
    def get_backend(cls, shorthand):
        return cls.BACKENDS.get(shorthand)

    @property
    def available(self):
        return self.solver in cp.installed_solvers()

    def solve(self, problem, warm_start=False, program=None):
        """Solve 'problem', built from the SeqProgram 'program'."""
        return problem.solve(solver=self.solver, warm_start=warm_start,
                             **self.options)

    def __repr__(self):
        return "%s(%r)" % (type(self).__name__, self.name)


class ClarabelBackend(SolverBackend):
    """Interior point; the default."""
    name = "clarabel"
    solver = cp.CLARABEL


class ScsBackend(SolverBackend):
    """Operator splitting (ADMM on the homogeneous embedding)."""
    name = "scs"
    solver = cp.SCS
    options = dict(max_iters=20000, eps_abs=1e-6, eps_rel=1e-6)


class EcosBackend(SolverBackend):
    name = "ecos"
    solver = cp.ECOS


DEFAULT_BACKEND = "clarabel"


def register_backend(shorthand, backend_cls):
    SolverBackend.register_backend(backend_cls, shorthand=shorthand)


def get_backend(shorthand=None):
    """Instantiate the backend registered as 'shorthand'.

    Raises:
        IxgArgumentError if there is no such backend or its solver isn't
            installed.
    """
    shorthand = shorthand or DEFAULT_BACKEND
    backend_cls = SolverBackend.get_backend(shorthand)
    if backend_cls is None:
        raise errors.IxgArgumentError(
            "Unknown solver backend %r. Registered: %s." %
            (shorthand, ", ".join(sorted(SolverBackend.BACKENDS))),
            key=shorthand)

    backend = backend_cls()
    if not backend.available:
        raise errors.IxgArgumentError(
            "Solver backend %r needs %s, which cvxpy can't find." %
            (shorthand, backend.solver), key=shorthand)

    return backend


for _backend in (ClarabelBackend, ScsBackend, EcosBackend):
    register_backend(_backend.name, _backend)


class SolveCounter(object):
    """Thread-safe count of sequence solves and of their largest size."""

    calls = 0
    max_sequence_length = 0
    max_decision_vars = 0

    def __init__(self):
        self._lock = threading.Lock()

    def record(self, program):
        with self._lock:
            self.calls += 1
            self.max_sequence_length = max(self.max_sequence_length,
                                           len(program))
            self.max_decision_vars = max(self.max_decision_vars,
                                         program.num_decision_vars)

    def __repr__(self):
        return "SolveCounter(calls=%d)" % self.calls


class SeqProgram(object):
    """A sequence optimization problem.

    Arguments:
        sets: The convex sets Q_1..Q_K, in order. Consecutive repeats are
            collapsed.
        set_ids: Vertex ids of 'sets' (defaults to 0..K-1).
        start, end: Boundary condition for the first/last point. Either a
            point (fixed), a ConvexSet (free inside that region) or None
            (free inside the first/last set).
        start_velocity, end_velocity: Optional velocity boundary conditions.
        order: Bezier order r >= 1.
        continuity: 0 or 1.
        weights: CostWeights.
        velocity_set: VelocitySet; None means no speed limit.
        warm_start: Optional Trajectory whose segments line up with a prefix
            of the sequence.

    Passing another SeqProgram as 'sets' copies it; keyword arguments that
    are not None override the copied values:

        SeqProgram(program, continuity=0)
    """

    sets = ()
    set_ids = ()
    start = None
    end = None
    start_velocity = None
    end_velocity = None
    order = 3
    continuity = 0
    weights = None
    velocity_set = None
    warm_start = None

    def __init__(self, sets, set_ids=None, start=None, end=None,
                 start_velocity=None, end_velocity=None, order=None,
                 continuity=None, weights=None, velocity_set=None,
                 warm_start=None):
        super(SeqProgram, self).__init__()

        if isinstance(sets, SeqProgram):
            # Run as a copy constructor with optional overrides.
            source = sets
            sets = source.sets
            set_ids = set_ids if set_ids is not None else source.set_ids
            for name in ("start", "end", "start_velocity", "end_velocity",
                         "order", "continuity", "weights", "velocity_set",
                         "warm_start"):
                setattr(self, name, getattr(source, name))

        sets = list(sets)
        if not sets:
            raise errors.IxgArgumentError("Sequence program needs a set.")

        if set_ids is None:
            set_ids = list(range(len(sets)))
        set_ids = list(set_ids)
        if len(set_ids) != len(sets):
            raise errors.IxgArgumentError(
                "Got %d sets but %d set ids." % (len(sets), len(set_ids)))

        collapsed_sets = []
        collapsed_ids = []
        for set_id, cset in zip(set_ids, sets):
            if collapsed_ids and collapsed_ids[-1] == set_id:
                continue
            collapsed_ids.append(set_id)
            collapsed_sets.append(cset)

        self.sets = tuple(collapsed_sets)
        self.set_ids = tuple(collapsed_ids)

        dim = self.sets[0].dim
        for cset in self.sets:
            if cset.dim != dim:
                raise errors.IxgArgumentError(
                    "Mixed dimensions in sequence program: R^%d and R^%d." %
                    (dim, cset.dim))

        if start is not None:
            self.start = self._boundary(start, dim)
        if end is not None:
            self.end = self._boundary(end, dim)
        if start_velocity is not None:
            self.start_velocity = geometry.as_point(start_velocity, dim=dim)
        if end_velocity is not None:
            self.end_velocity = geometry.as_point(end_velocity, dim=dim)
        if order is not None:
            self.order = int(order)
        if continuity is not None:
            self.continuity = int(continuity)
        if weights is not None:
            self.weights = weights
        if velocity_set is not None:
            self.velocity_set = velocity_set
        if warm_start is not None:
            self.warm_start = warm_start

        if self.weights is None:
            self.weights = traj.CostWeights()

        if self.velocity_set is None:
            self.velocity_set = geometry.VelocitySet.unbounded(dim)
        elif self.velocity_set.dim != dim:
            raise errors.IxgArgumentError(
                "Velocity set is in R^%d, sequence in R^%d." %
                (self.velocity_set.dim, dim))

        if self.order < 1:
            raise errors.IxgArgumentError("Order must be >= 1, got %r." %
                                          self.order)

        if self.continuity not in (0, 1):
            raise errors.IxgArgumentError(
                "Continuity must be 0 or 1, got %r." % self.continuity)

    @staticmethod
    def _boundary(value, dim):
        if isinstance(value, geometry.ConvexSet):
            if value.dim != dim:
                raise errors.IxgArgumentError(
                    "Boundary region is in R^%d, sequence in R^%d." %
                    (value.dim, dim))
            return value

        return geometry.as_point(value, dim=dim)

    @classmethod
    def from_graph(cls, graph, set_ids, **kwargs):
        """Program over the sets 'set_ids' of 'graph'.

        Raises:
            IxgArgumentError if consecutive sets are not joined by an edge.
        """
        set_ids = list(set_ids)
        for u, v in zip(set_ids, set_ids[1:]):
            if u != v and not graph.has_edge(u, v):
                raise errors.IxgArgumentError(
                    "Sets %d and %d are not connected by an edge." % (u, v))

        return cls([graph.vertices[v] for v in set_ids], set_ids=set_ids,
                   **kwargs)

    def copy(self, **overrides):
        return SeqProgram(self, **overrides)

    @property
    def dim(self):
        return self.sets[0].dim

    def __len__(self):
        return len(self.sets)

    @property
    def num_decision_vars(self):
        durations = 1 if self.continuity == 1 else len(self.sets)
        return len(self.sets) * (self.order + 1) * self.dim + durations

    def dump(self):
        """Human readable description, for debugging."""
        lines = ["SeqProgram over %d sets %r, order %d, continuity %d" %
                 (len(self.sets), list(self.set_ids), self.order,
                  self.continuity),
                 "weights: a=%r b=%r" % (self.weights.a, self.weights.b),
                 "velocity limits: %r" % (self.velocity_set.limits.tolist(),)]

        for name in ("start", "end"):
            value = getattr(self, name)
            if value is None:
                lines.append("%s: free" % name)
            elif isinstance(value, geometry.ConvexSet):
                lines.append("%s: inside %r" % (name, value))
            else:
                lines.append("%s: %r" % (name, value.tolist()))

        for name in ("start_velocity", "end_velocity"):
            value = getattr(self, name)
            if value is not None:
                lines.append("%s: %r" % (name, value.tolist()))

        for set_id, cset in zip(self.set_ids, self.sets):
            lines.append("set %r %s:" % (set_id, cset.label or ""))
            for normal, offset in cset.halfspaces:
                lines.append("  %r . x <= %r" % (normal.tolist(),
                                                 float(offset)))

        return "\n".join(lines)

    def __repr__(self):
        return "SeqProgram(%r, order=%d, continuity=%d)" % (
            list(self.set_ids), self.order, self.continuity)


class Infeasible(object):
    """Falsy result of solve_sequence when the program has no solution.

    The violated constraint class is found on first access to
    'constraint_class' by re-solving with constraint classes dropped one
    after another: velocity boundary conditions, then continuity, then speed
    limits. Whatever is left is containment.
    """

    BOUNDARY = "boundary"
    VELOCITY_BOUNDARY = "velocity_boundary"
    CONTINUITY = "continuity"
    VELOCITY = "velocity"
    CONTAINMENT = "containment"

    program = None
    status = None

    _constraint_class = None
    _backend = None

    def __init__(self, program, status, constraint_class=None,
                 backend=None):
        self.program = program
        self.status = status
        self._constraint_class = constraint_class
        self._backend = backend

    def __bool__(self):
        return False

    @property
    def constraint_class(self):
        if self._constraint_class is None:
            self._constraint_class = self._diagnose()

        return self._constraint_class

    def _diagnose(self):
        program = self.program
        relaxations = []
        if (program.start_velocity is not None or
                program.end_velocity is not None):
            relaxed = SeqProgram(program.sets, set_ids=program.set_ids,
                                 start=program.start, end=program.end,
                                 order=program.order,
                                 continuity=program.continuity,
                                 weights=program.weights,
                                 velocity_set=program.velocity_set)
            relaxations.append((self.VELOCITY_BOUNDARY, relaxed))
        else:
            relaxed = program

        if relaxed.continuity == 1:
            relaxed = relaxed.copy(continuity=0)
            relaxations.append((self.CONTINUITY, relaxed))

        if relaxed.velocity_set.is_bounded:
            relaxed = relaxed.copy(
                velocity_set=geometry.VelocitySet.unbounded(program.dim))
            relaxations.append((self.VELOCITY, relaxed))

        for constraint_class, relaxed in relaxations:
            if solve_sequence(relaxed, backend=self._backend):
                return constraint_class

        return self.CONTAINMENT

    def __repr__(self):
        return "Infeasible(%r, status=%r)" % (list(self.program.set_ids),
                                              self.status)


def _boundary_outside(value, cset):
    if value is None or isinstance(value, geometry.ConvexSet):
        return False

    return not geometry.contains(cset, value, tol=BOUNDARY_TOL)


def _point_constraints(point, cset):
    A = cset.A
    b = cset.b
    return [A @ point <= b]


def _apply_warm_start(program, points, duration_vars):
    """Seed variable values from the matching prefix of the warm start."""
    warm = program.warm_start
    if warm is None:
        return False

    matched = []
    for k, segment in enumerate(warm.segments[:len(program)]):
        if (segment.set_id != program.set_ids[k] or
                segment.order != program.order or
                segment.dim != program.dim):
            break

        points[k].value = np.array(segment.control_points)
        matched.append(segment.duration)

    if not matched:
        LOG.debug("Warm start %r doesn't match %r.", warm, program)
        return False

    if program.continuity == 1:
        duration_vars[0].value = matched[0]
    else:
        matched += [matched[-1]] * (len(program) - len(matched))
        duration_vars[0].value = np.array(matched)

    return True


def _build_problem(program):
    """The cvxpy problem, its control point variables and durations."""
    K = len(program)
    r = program.order
    d = program.dim
    weights = program.weights
    limits = program.velocity_set.limits
    limited = np.nonzero(np.isfinite(limits))[0]

    points = [cp.Variable((r + 1, d)) for _ in range(K)]
    if program.continuity == 1:
        shared = cp.Variable(nonneg=True)
        duration_vars = [shared]
        durations = [shared] * K
    else:
        all_durations = cp.Variable(K, nonneg=True)
        duration_vars = [all_durations]
        durations = [all_durations[k] for k in range(K)]

    constraints = []
    for k, cset in enumerate(program.sets):
        constraints.append(points[k] @ cset.A.T <=
                           np.tile(cset.b, (r + 1, 1)))

        if limited.size:
            velocity = r * cp.diff(points[k], axis=0)
            bound = np.tile(limits[limited], (r, 1))
            constraints.append(velocity[:, limited] <= durations[k] * bound)
            constraints.append(-velocity[:, limited] <= durations[k] * bound)

    for k in range(K - 1):
        constraints.append(points[k][r] == points[k + 1][0])
        if program.continuity == 1:
            constraints.append(points[k][r] - points[k][r - 1] ==
                               points[k + 1][1] - points[k + 1][0])

    for value, point in ((program.start, points[0][0]),
                         (program.end, points[-1][r])):
        if value is None:
            continue
        if isinstance(value, geometry.ConvexSet):
            constraints.extend(_point_constraints(point, value))
        else:
            constraints.append(point == value)

    if program.start_velocity is not None:
        constraints.append(r * (points[0][1] - points[0][0]) ==
                           durations[0] * program.start_velocity)

    if program.end_velocity is not None:
        constraints.append(r * (points[-1][r] - points[-1][r - 1]) ==
                           durations[-1] * program.end_velocity)

    length = sum(cp.sum(cp.norm(cp.diff(p, axis=0), 2, axis=1))
                 for p in points)
    objective = weights.a * length + weights.b * sum(durations)

    problem = cp.Problem(cp.Minimize(objective), constraints)
    return problem, points, duration_vars, durations


def solve_sequence(program, backend=None, counter=None):
    """Solve the sequence program.

    Arguments:
        program: SeqProgram.
        backend: Backend shorthand or instance (default clarabel).
        counter: Optional SolveCounter to record the call in.

    Returns:
        Trajectory if a solution was found, else an Infeasible (falsy).

    Raises:
        IxgSolverStalledError if the solver gives up without a verdict.
    """
    if not isinstance(backend, SolverBackend):
        backend = get_backend(backend)

    if counter is not None:
        counter.record(program)

    if (_boundary_outside(program.start, program.sets[0]) or
            _boundary_outside(program.end, program.sets[-1])):
        return Infeasible(program, status="boundary",
                          constraint_class=Infeasible.BOUNDARY,
                          backend=backend)

    for velocity in (program.start_velocity, program.end_velocity):
        if velocity is not None and not program.velocity_set.contains(
                velocity, tol=BOUNDARY_TOL):
            return Infeasible(program, status="velocity_boundary",
                              constraint_class=Infeasible.VELOCITY_BOUNDARY,
                              backend=backend)

    problem, points, duration_vars, durations = _build_problem(program)
    warm = _apply_warm_start(program, points, duration_vars)

    try:
        backend.solve(problem, warm_start=warm, program=program)
    except cp.error.SolverError as e:
        raise errors.IxgSolverStalledError(
            "Solver %r failed on %r: %s" % (backend.name, program, e),
            status="solver_error")

    status = problem.status
    LOG.debug("Solved %r: %s (%r)", program, status, problem.value)
    if status in (cp.INFEASIBLE, cp.INFEASIBLE_INACCURATE):
        return Infeasible(program, status=status, backend=backend)

    if status not in (cp.OPTIMAL, cp.OPTIMAL_INACCURATE):
        raise errors.IxgSolverStalledError(
            "Solver %r stopped on %r with status %r." %
            (backend.name, program, status), status=status)

    segments = []
    for k, set_id in enumerate(program.set_ids):
        duration = max(float(durations[k].value), MIN_DURATION)
        segments.append(traj.TrajectorySegment(points[k].value, duration,
                                               set_id))

    return traj.Trajectory(segments, continuity_order=program.continuity)
