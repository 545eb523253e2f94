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

"""IxG export protocol.

Types that can be written to scenario files, the LBG cache or stats JSON
implement 'todict', returning plain JSON-compatible data, and 'fromdict',
which rebuilds an instance from that data.
"""

import json

from ixg import dispatch
from ixg import protocol

# Declarations:
# pylint: disable=unused-argument


@dispatch.multimethod
def todict(obj):
    raise NotImplementedError()


@dispatch.class_multimethod
def fromdict(cls, data):
    raise NotImplementedError()


def dumps(obj, **kwargs):
    """Serialize an IExportable to JSON text with sorted keys."""
    kwargs.setdefault("sort_keys", True)
    return json.dumps(todict(obj), **kwargs)


def loads(cls, text):
    return fromdict(cls, json.loads(text))


class IExportable(protocol.Protocol):
    _required_functions = (todict,)
    _optional_functions = (fromdict,)


# Default implementations:

IExportable.implement(
    for_types=(int, float, str, bool, type(None)),
    implementations={
        todict: lambda x: x
    }
)


IExportable.implement(
    for_types=(list, tuple),
    implementations={
        todict: lambda xs: [todict(x) for x in xs]
    }
)


IExportable.implement(
    for_type=dict,
    implementations={
        todict: lambda d: dict((str(k), todict(v)) for k, v in d.items())
    }
)
