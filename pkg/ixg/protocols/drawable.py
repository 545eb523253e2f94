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

"""IxG drawing protocol.

'draw' renders an object onto a matplotlib Axes. Implementations for the
planner's types live in ixg.ext.svg.
"""

from ixg import dispatch
from ixg import protocol

# Declarations:
# pylint: disable=unused-argument


@dispatch.multimethod
def draw(obj, ax, **style):
    """Draw 'obj' on the matplotlib Axes 'ax'.

    Arguments:
        obj: Anything implementing IDrawable.
        ax: A matplotlib Axes.
        style: Keyword overrides passed on to matplotlib artists.
    """
    raise NotImplementedError()


class IDrawable(protocol.Protocol):
    _required_functions = (draw,)
