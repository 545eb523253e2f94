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
Scenario files.

A scenario is a JSON object describing a world and the problem parameters:

    {
        "name": "small maze",
        "dimension": 2,
        "generator": {"maze": {"rows": 5, "cols": 5, "seed": 7}},
        "weights": {"a": 1.0, "b": 1.0},
        "velocity": {"vmax": 1.0},
        "order": 3,
        "continuity": 0,
        "query": {"start": [0.5, 0.5], "goal": [4.5, 4.5]}
    }

Instead of "generator", a scenario can list its sets explicitly under "sets",
each either {"box": {"lo": [...], "hi": [...]}} or {"normals": [[...]],
"offsets": [...]}, with an optional "label". "dimension" and one of "sets" or
"generator" are required; unknown keys are logged and ignored.

The generator object has a single key, the generator name ("maze",
"boxworld", "random" or "revisit"), mapping to its parameters:

    "generator": {"boxworld": {"bounds": [[0, 0], [10, 10]], "n_boxes": 20,
                               "seed": 3}}
"""

import hashlib
import json
import logging
import re

from ixg import errors
from ixg import geometry
from ixg import graph as gcs
from ixg import trajectory as traj
from ixg import worlds

from ixg.protocols import exportable

LOG = logging.getLogger(__name__)

KNOWN_KEYS = frozenset(("name", "dimension", "sets", "generator", "margin",
                        "weights", "velocity", "order", "continuity",
                        "query"))


class Scenario(object):
    """A world plus the parameters of the problem posed in it.

    Arguments:
        sets: List of ConvexSet (materialized from the generator, if any).
        dimension: Dimension of every set.
        generator: Optional (name, params) the sets came from. Saved instead
            of the sets so generated scenarios stay small.
        margin: Overlap margin for build_graph.
        weights: CostWeights.
        velocity_set: VelocitySet (unbounded if not given).
        order, continuity: Defaults for the sequence programs.
        query: Optional Query.
        name: Display name.
        source: Path the scenario was read from.
    """

    name = None
    dimension = None
    sets = ()
    generator = None
    margin = gcs.DEFAULT_MARGIN
    weights = None
    velocity_set = None
    order = 3
    continuity = 0
    query = None
    source = None

    _graph = None

    def __init__(self, sets, dimension, generator=None,
                 margin=gcs.DEFAULT_MARGIN, weights=None, velocity_set=None,
                 order=3, continuity=0, query=None, name=None, source=None):
        self.sets = tuple(sets)
        self.dimension = dimension
        self.generator = generator
        self.margin = margin
        self.weights = weights or traj.CostWeights()
        self.velocity_set = (velocity_set or
                             geometry.VelocitySet.unbounded(dimension))
        self.order = order
        self.continuity = continuity
        self.query = query
        self.name = name
        self.source = source

    @property
    def graph(self):
        """The (unwired) GcsGraph over the sets, built on first use."""
        if self._graph is None:
            self._graph = gcs.build_graph(self.sets, margin=self.margin)

        return self._graph

    def digest(self):
        """Hash of everything that determines the graph and the costs."""
        data = exportable.todict(self)
        data.pop("name", None)
        data.pop("query", None)
        data["sets"] = [exportable.todict(cset) for cset in self.sets]
        text = json.dumps(data, sort_keys=True)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    def __repr__(self):
        return "Scenario(%r, %d sets in R^%d)" % (self.name, len(self.sets),
                                                  self.dimension)


def _locate(text, key):
    """(line, column) of the first occurrence of '"key"' in 'text'."""
    if text is None:
        return None, None

    match = re.search(r'"%s"\s*:' % re.escape(key), text)
    if match is None:
        return None, None

    line = text.count("\n", 0, match.start()) + 1
    column = match.start() - (text.rfind("\n", 0, match.start()) + 1) + 1
    return line, column


def _error(cls, message, key, path, text):
    line, column = _locate(text, key)
    return cls(message, path=path, line=line, column=column, key=key)


def _require(data, key, path, text):
    if key not in data:
        raise errors.IxgKeyError(path=path, key=key)

    return data[key]


def _parse_sets(data, dimension, path, text):
    raw = data["sets"]
    if not isinstance(raw, list):
        raise _error(errors.IxgParseError, "'sets' must be a list.", "sets",
                     path, text)

    sets = []
    for i, item in enumerate(raw):
        try:
            cset = exportable.fromdict(geometry.ConvexSet, item)
        except (KeyError, TypeError, ValueError) as e:
            raise _error(errors.IxgParseError,
                         "Set %d is malformed: %s" % (i, e), "sets", path,
                         text)

        if cset.dim != dimension:
            raise _error(errors.IxgParseError,
                         "Set %d is in R^%d, the scenario in R^%d." %
                         (i, cset.dim, dimension), "sets", path, text)
        sets.append(cset)

    return sets


def _parse_generator(data, dimension, path, text):
    spec = data["generator"]
    if isinstance(spec, dict) and "name" in spec:
        # Older files spell it {"name": ..., "params": {...}}.
        name, params = spec["name"], spec.get("params")
    elif isinstance(spec, dict) and len(spec) == 1:
        (name, params), = spec.items()
    else:
        raise _error(errors.IxgParseError,
                     "'generator' must be an object with a single key naming "
                     "the generator, e.g. {\"maze\": {...}}.",
                     "generator", path, text)

    if params is None:
        params = {}
    elif not isinstance(params, dict):
        raise _error(errors.IxgParseError,
                     "Parameters of generator %r must be an object." %
                     (name,), "generator", path, text)
    params = dict(params)
    try:
        sets = worlds.generate(name, **params)
    except TypeError as e:
        raise _error(errors.IxgParseError,
                     "Bad parameters for generator %r: %s" % (name, e),
                     "generator", path, text)
    except errors.IxgArgumentError as e:
        raise _error(errors.IxgParseError, e.text, "generator", path, text)

    if sets and sets[0].dim != dimension:
        raise _error(errors.IxgParseError,
                     "Generator %r makes sets in R^%d, the scenario is in "
                     "R^%d." % (name, sets[0].dim, dimension), "dimension",
                     path, text)

    return sets, (name, params)


def parse_scenario(data, path=None, text=None):
    """Build a Scenario from decoded JSON.

    Raises:
        IxgKeyError naming a missing required key.
        IxgParseError for malformed values.
    """
    if not isinstance(data, dict):
        raise errors.IxgParseError("A scenario must be a JSON object.",
                                   path=path, line=1, column=1)

    for key in sorted(set(data) - KNOWN_KEYS):
        line, _ = _locate(text, key)
        LOG.warning("Ignoring unknown scenario key %r%s.", key,
                    " on line %d" % line if line else "")

    dimension = _require(data, "dimension", path, text)
    if not isinstance(dimension, int) or dimension < 1:
        raise _error(errors.IxgParseError,
                     "'dimension' must be a positive integer, got %r." %
                     (dimension,), "dimension", path, text)

    generator = None
    if "sets" in data:
        sets = _parse_sets(data, dimension, path, text)
    elif "generator" in data:
        sets, generator = _parse_generator(data, dimension, path, text)
    else:
        raise errors.IxgKeyError(
            "A scenario needs 'sets' or 'generator'.", path=path, key="sets")

    if not sets:
        raise _error(errors.IxgParseError, "The scenario has no sets.",
                     "sets", path, text)

    try:
        weights = None
        if "weights" in data:
            weights = exportable.fromdict(traj.CostWeights, data["weights"])

        velocity_set = None
        velocity = data.get("velocity")
        if velocity is not None:
            if not isinstance(velocity, dict):
                raise _error(errors.IxgParseError,
                             "'velocity' must be an object like "
                             "{\"vmax\": 1.0}, got %r." % (velocity,),
                             "velocity", path, text)
            vmax = velocity.get("vmax")
            velocity_set = geometry.VelocitySet(
                float("inf") if vmax is None else vmax, dim=dimension)

        query = None
        if data.get("query") is not None:
            query = exportable.fromdict(gcs.Query, data["query"])
    except (KeyError, TypeError, ValueError) as e:
        raise errors.IxgParseError("Malformed scenario parameter: %s" % e,
                                   path=path)

    return Scenario(sets, dimension, generator=generator,
                    margin=data.get("margin", gcs.DEFAULT_MARGIN),
                    weights=weights, velocity_set=velocity_set,
                    order=data.get("order", 3),
                    continuity=data.get("continuity", 0),
                    query=query, name=data.get("name"), source=path)


def loads_scenario(text, path=None):
    """Parse scenario JSON text.

    Raises:
        IxgParseError with the line and column of a syntax error.
    """
    try:
        data = json.loads(text)
    except ValueError as e:
        raise errors.IxgParseError(getattr(e, "msg", str(e)), path=path,
                                   line=getattr(e, "lineno", None),
                                   column=getattr(e, "colno", None))

    return parse_scenario(data, path=path, text=text)


def load_scenario(path):
    """Read the scenario file at 'path'."""
    try:
        with open(path, "r") as fd:
            text = fd.read()
    except IOError as e:
        raise errors.IxgArgumentError("Cannot read scenario: %s" % e,
                                      path=path)

    scenario = loads_scenario(text, path=path)
    LOG.info("Loaded %r from %s.", scenario, path)
    return scenario


def save_scenario(scenario, path):
    with open(path, "w") as fd:
        fd.write(exportable.dumps(scenario, indent=2))
        fd.write("\n")


# IExportable implementations:

def _scenario_todict(scenario):
    data = dict(dimension=scenario.dimension,
                margin=scenario.margin,
                weights=exportable.todict(scenario.weights),
                order=scenario.order,
                continuity=scenario.continuity)

    if scenario.name is not None:
        data["name"] = scenario.name

    if scenario.generator is not None:
        name, params = scenario.generator
        data["generator"] = {name: dict(params)}
    else:
        data["sets"] = [exportable.todict(cset) for cset in scenario.sets]

    if scenario.velocity_set.is_bounded:
        data["velocity"] = dict(vmax=scenario.velocity_set.vmax)

    if scenario.query is not None:
        data["query"] = exportable.todict(scenario.query)

    return data


exportable.IExportable.implement(
    for_type=Scenario,
    implementations={
        exportable.todict: _scenario_todict,
        exportable.fromdict: lambda cls, data: parse_scenario(data)
    }
)
