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
IxG geometry: bounded convex polytopes in H-representation.

A ConvexSet is {x | A x <= b}. Axis-aligned boxes remember their bounds, which
lets membership, overlap and intersection skip the LP entirely; the maze and
box-world generators only ever produce boxes.

Every LP here (Chebyshev ball, feasibility, bounding box) goes through
scipy's HiGHS solver.
"""

import logging

import numpy as np

from scipy import optimize

from ixg import errors

from ixg.protocols import exportable

LOG = logging.getLogger(__name__)

# Feasibility tolerance shared by all LPs in this module.
ABS_TOL = 1e-9


def as_point(coords, dim=None):
    """Return 'coords' as a 1-D float array, checking it is finite.

    Raises:
        IxgArgumentError if the point has non-finite entries or the wrong
            dimension.
    """
    point = np.asarray(coords, dtype=float).ravel()
    if not np.all(np.isfinite(point)):
        raise errors.IxgArgumentError("Point %r has non-finite entries." %
                                      (coords,))

    if dim is not None and point.shape[0] != dim:
        raise errors.IxgArgumentError(
            "Point %r has dimension %d, expected %d." %
            (coords, point.shape[0], dim))

    return point


def _frozen(array):
    array.setflags(write=False)
    return array


class ConvexSet(object):
    """Bounded convex polytope {x | normal_i . x <= offset_i}.

    Arguments:
        normals: (m, d) array-like of halfspace normals. Must be finite and
            nonzero.
        offsets: (m,) array-like of halfspace offsets.
        label: Optional string, used in logs and drawings.

    Instances are immutable; derived quantities (Chebyshev ball, bounding
    box) are computed lazily and cached.
    """

    A = None
    b = None
    label = None

    _box = None
    _cheby = None
    _bbox = None

    def __init__(self, normals, offsets, label=None, _box=None):
        A = np.atleast_2d(np.asarray(normals, dtype=float))
        b = np.asarray(offsets, dtype=float).ravel()

        if A.ndim != 2 or A.shape[0] != b.shape[0] or A.shape[1] < 1:
            raise errors.IxgArgumentError(
                "Halfspace normals %r and offsets %r don't line up." %
                (A.shape, b.shape))

        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
            raise errors.IxgArgumentError("Halfspaces must be finite.")

        if np.any(np.linalg.norm(A, axis=1) == 0.0):
            raise errors.IxgArgumentError("Halfspace normals must be nonzero.")

        self.A = _frozen(A)
        self.b = _frozen(b)
        self.label = label

        if _box is not None:
            lo, hi = _box
            self._box = (_frozen(np.array(lo, dtype=float)),
                         _frozen(np.array(hi, dtype=float)))
            self._bbox = self._box

    @classmethod
    def from_box(cls, lo, hi, label=None):
        """Axis-aligned box [lo, hi].

        Raises:
            IxgEmptySetError if lo > hi on some axis.
        """
        lo = as_point(lo)
        hi = as_point(hi, dim=lo.shape[0])
        if np.any(hi < lo - ABS_TOL):
            raise errors.IxgEmptySetError(
                "Box with lo %r above hi %r is empty." % (lo.tolist(),
                                                          hi.tolist()))

        hi = np.maximum(hi, lo)
        eye = np.eye(lo.shape[0])
        return cls(np.vstack([eye, -eye]), np.concatenate([hi, -lo]),
                   label=label, _box=(lo, hi))

    @classmethod
    def from_halfspaces(cls, halfspaces, label=None):
        """Build from a list of (normal, offset) pairs."""
        halfspaces = list(halfspaces)
        if not halfspaces:
            raise errors.IxgArgumentError("A polytope needs halfspaces.")

        normals = [normal for normal, _ in halfspaces]
        offsets = [offset for _, offset in halfspaces]
        return cls(normals, offsets, label=label)

    @classmethod
    def from_point(cls, point, label=None):
        """The singleton {point}, used for query start and goal vertices."""
        point = as_point(point)
        return cls.from_box(point, point, label=label)

    @property
    def dim(self):
        return self.A.shape[1]

    @property
    def halfspaces(self):
        return [(normal, offset) for normal, offset in zip(self.A, self.b)]

    @property
    def box(self):
        """(lo, hi) for axis-aligned boxes, else None."""
        return self._box

    @property
    def is_box(self):
        return self._box is not None

    @property
    def is_singleton(self):
        return self.is_box and np.all(self._box[0] == self._box[1])

    @property
    def bounding_box(self):
        """(lo, hi) of the tightest enclosing box.

        Raises:
            IxgUnboundedSetError if the polytope is unbounded along an axis.
            IxgEmptySetError if the polytope is empty.
        """
        if self._bbox is None:
            self._bbox = _bounding_box_lp(self.A, self.b)

        return self._bbox

    @property
    def chebyshev(self):
        """Cached (center, radius); see chebyshev_center."""
        if self._cheby is None:
            self._cheby = chebyshev_center(self)

        return self._cheby

    def check(self):
        """Certify nonemptiness and boundedness, raising otherwise."""
        _ = self.chebyshev
        _ = self.bounding_box
        return self

    def contains(self, point, tol=0.0):
        return contains(self, point, tol=tol)

    def slack(self, point):
        """Smallest distance from 'point' to a facet plane, signed.

        Positive inside, negative outside (then a lower bound on the distance
        to the set).
        """
        point = as_point(point, dim=self.dim)
        norms = np.linalg.norm(self.A, axis=1)
        return float(np.min((self.b - self.A.dot(point)) / norms))

    def __repr__(self):
        if self.is_box:
            return "ConvexSet(box=%r..%r%s)" % (
                self._box[0].tolist(), self._box[1].tolist(),
                ", label=%r" % self.label if self.label else "")

        return "ConvexSet(%d halfspaces in R^%d%s)" % (
            self.A.shape[0], self.dim,
            ", label=%r" % self.label if self.label else "")

    def __eq__(self, other):
        if not isinstance(other, ConvexSet):
            return False

        return (self.label == other.label and
                self.A.shape == other.A.shape and
                np.array_equal(self.A, other.A) and
                np.array_equal(self.b, other.b))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.A.tobytes(), self.b.tobytes(), self.label))


class VelocitySet(object):
    """Axis-aligned velocity box [-vmax, vmax]^d.

    Arguments:
        vmax: Scalar or per-axis positive limit. float('inf') disables the
            limit along that axis.
        dim: Dimension, required when vmax is a scalar.
    """

    limits = None

    def __init__(self, vmax, dim=None):
        limits = np.asarray(vmax, dtype=float).ravel()
        if limits.shape[0] == 1 and dim is not None:
            limits = np.repeat(limits, dim)
        elif dim is not None and limits.shape[0] != dim:
            raise errors.IxgArgumentError(
                "vmax %r doesn't match dimension %d." % (vmax, dim))

        if np.any(np.isnan(limits)) or np.any(limits <= 0.0):
            raise errors.IxgArgumentError("vmax must be positive, got %r." %
                                          (vmax,))

        self.limits = _frozen(limits)

    @classmethod
    def unbounded(cls, dim):
        return cls(float("inf"), dim=dim)

    @property
    def dim(self):
        return self.limits.shape[0]

    @property
    def is_bounded(self):
        return bool(np.all(np.isfinite(self.limits)))

    @property
    def vmax(self):
        """Scalar limit if all axes agree, else the per-axis list."""
        if np.all(self.limits == self.limits[0]):
            return float(self.limits[0])

        return self.limits.tolist()

    def contains(self, velocity, tol=0.0):
        velocity = as_point(velocity, dim=self.dim)
        return bool(np.all(np.abs(velocity) <= self.limits + tol))

    def min_time(self, displacement):
        """Least time to cover 'displacement' within the speed limits."""
        displacement = np.abs(as_point(displacement, dim=self.dim))
        with np.errstate(divide="ignore", invalid="ignore"):
            times = np.where(np.isfinite(self.limits),
                             displacement / self.limits, 0.0)
        return float(np.max(times)) if times.size else 0.0

    def __repr__(self):
        return "VelocitySet(vmax=%r)" % (self.vmax,)

    def __eq__(self, other):
        return (isinstance(other, VelocitySet) and
                np.array_equal(self.limits, other.limits))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.limits.tobytes())


def _check_dims(a, b):
    if a.dim != b.dim:
        raise errors.IxgArgumentError(
            "Dimension mismatch: %r is in R^%d but %r is in R^%d." %
            (a, a.dim, b, b.dim))


def contains(cset, point, tol=0.0):
    """True iff normal . point <= offset + tol for every halfspace.

    Raises:
        IxgArgumentError on dimension mismatch or negative tol.
    """
    if tol < 0:
        raise errors.IxgArgumentError("Tolerance must be >= 0, got %r." % tol)

    point = as_point(point, dim=cset.dim)
    return bool(np.all(cset.A.dot(point) <= cset.b + tol))


def _normalized(A, b):
    norms = np.linalg.norm(A, axis=1)
    return A / norms[:, None], b / norms


def _chebyshev_lp(A, b, r_max=None):
    """Solve max r s.t. a_i x + r <= b_i (unit normals), r >= 0.

    Returns:
        (center, radius).

    Raises:
        IxgEmptySetError if infeasible; IxgUnboundedSetError if unbounded.
    """
    A, b = _normalized(A, b)
    m, d = A.shape
    c = np.zeros(d + 1)
    c[-1] = -1.0
    A_ub = np.hstack([A, np.ones((m, 1))])
    bounds = [(None, None)] * d + [(0.0, r_max)]

    res = optimize.linprog(c, A_ub=A_ub, b_ub=b, bounds=bounds,
                           method="highs")
    if res.status == 2:
        raise errors.IxgEmptySetError("Polytope is empty.")

    if res.status == 3:
        raise errors.IxgUnboundedSetError("Polytope is unbounded.")

    if res.status != 0:
        raise errors.IxgSolverStalledError(
            "Chebyshev LP failed: %s" % res.message, status=res.status)

    return res.x[:d], max(float(res.x[-1]), 0.0)


def _bounding_box_lp(A, b):
    d = A.shape[1]
    lo = np.empty(d)
    hi = np.empty(d)
    for axis in range(d):
        for sign, out in ((1.0, lo), (-1.0, hi)):
            c = np.zeros(d)
            c[axis] = sign
            res = optimize.linprog(c, A_ub=A, b_ub=b,
                                   bounds=[(None, None)] * d, method="highs")
            if res.status == 2:
                raise errors.IxgEmptySetError("Polytope is empty.")

            if res.status == 3:
                raise errors.IxgUnboundedSetError(
                    "Polytope is unbounded along axis %d." % axis)

            out[axis] = res.x[axis]

    return _frozen(lo), _frozen(hi)


def _box_overlap(a, b):
    lo = np.maximum(a.box[0], b.box[0])
    hi = np.minimum(a.box[1], b.box[1])
    return lo, hi


def chebyshev_center(cset):
    """Center and radius of the largest ball inscribed in 'cset'.

    Examples:
        chebyshev_center(ConvexSet.from_box([0, 0], [2, 2]))
        # => (array([1., 1.]), 1.0)

    Raises:
        IxgEmptySetError if the polytope is infeasible.
        IxgUnboundedSetError if the LP is unbounded.
    """
    if cset.is_box:
        lo, hi = cset.box
        return (lo + hi) / 2.0, float(np.min(hi - lo) / 2.0)

    return _chebyshev_lp(cset.A, cset.b)


def intersects(a, b, margin=0.0):
    """True iff a and b share a ball of radius >= margin.

    margin=0 is closed-set intersection, so facet-touching sets overlap.

    Raises:
        IxgArgumentError on dimension mismatch or negative margin.
    """
    _check_dims(a, b)
    if margin < 0:
        raise errors.IxgArgumentError("Margin must be >= 0, got %r." % margin)

    if a.is_box and b.is_box:
        lo, hi = _box_overlap(a, b)
        radius = np.min(hi - lo) / 2.0
        return bool(radius >= margin - ABS_TOL / 2.0)

    # Cheap rejection on bounding boxes before the LP.
    a_lo, a_hi = a.bounding_box
    b_lo, b_hi = b.bounding_box
    if np.any(np.minimum(a_hi, b_hi) - np.maximum(a_lo, b_lo) <
              2 * margin - ABS_TOL):
        return False

    try:
        _, radius = _chebyshev_lp(np.vstack([a.A, b.A]),
                                  np.concatenate([a.b, b.b]),
                                  r_max=margin)
    except errors.IxgEmptySetError:
        return False

    return radius >= margin - ABS_TOL


def intersection(a, b, label=None):
    """The polytope a ∩ b.

    Boxes intersect to boxes. General polytopes get both halfspace lists
    with duplicate rows removed.

    Raises:
        IxgEmptyIntersectionError if a and b don't intersect.
    """
    _check_dims(a, b)
    if a.is_box and b.is_box:
        lo, hi = _box_overlap(a, b)
        if np.any(hi < lo - ABS_TOL):
            raise errors.IxgEmptyIntersectionError(
                "%r and %r don't intersect." % (a, b))
        return ConvexSet.from_box(lo, np.maximum(hi, lo), label=label)

    if not intersects(a, b, 0.0):
        raise errors.IxgEmptyIntersectionError(
            "%r and %r don't intersect." % (a, b))

    A, rhs = _normalized(np.vstack([a.A, b.A]), np.concatenate([a.b, b.b]))
    rows = np.round(np.hstack([A, rhs[:, None]]), 12)
    _, keep = np.unique(rows, axis=0, return_index=True)
    keep = np.sort(keep)
    return ConvexSet(A[keep], rhs[keep], label=label)


def sample_points(cset, count, rng, margin=0.0, max_tries=100000):
    """Rejection-sample 'count' points at least 'margin' inside 'cset'.

    Arguments:
        rng: A numpy Generator.

    Raises:
        IxgEmptySetError if too few samples landed inside.
    """
    lo, hi = cset.bounding_box
    points = []
    tries = 0
    while len(points) < count and tries < max_tries:
        tries += 1
        candidate = rng.uniform(lo, hi)
        if cset.slack(candidate) >= margin:
            points.append(candidate)

    if len(points) < count:
        raise errors.IxgEmptySetError(
            "Only sampled %d of %d points inside %r." % (len(points), count,
                                                         cset))

    return points


# IExportable implementations:

def _convex_set_todict(cset):
    if cset.is_box:
        data = {"box": {"lo": cset.box[0].tolist(), "hi": cset.box[1].tolist()}}
    else:
        data = {"normals": cset.A.tolist(), "offsets": cset.b.tolist()}

    if cset.label is not None:
        data["label"] = cset.label

    return data


def _convex_set_fromdict(cls, data):
    label = data.get("label")
    if "box" in data:
        return cls.from_box(data["box"]["lo"], data["box"]["hi"], label=label)

    return cls(data["normals"], data["offsets"], label=label)


def _velocity_set_fromdict(cls, data):
    vmax = data["vmax"]
    if vmax is None:
        vmax = float("inf")
    return cls(vmax, dim=data.get("dim"))


exportable.IExportable.implement(
    for_type=ConvexSet,
    implementations={
        exportable.todict: _convex_set_todict,
        exportable.fromdict: _convex_set_fromdict
    }
)


exportable.IExportable.implement(
    for_type=VelocitySet,
    implementations={
        exportable.todict: lambda v: {
            "vmax": v.vmax if v.is_bounded else None, "dim": v.dim},
        exportable.fromdict: _velocity_set_fromdict
    }
)
