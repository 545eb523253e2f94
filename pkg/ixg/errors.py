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
IxG errors.
"""


class IxgError(Exception):
    """Base class of every error raised by the planner.

    Errors can carry a location: the file they relate to ('path'), a position
    in it ('line', 'column') and the offending key. All of these are optional
    and only show up in str() when they were set.
    """
    message = None
    path = None
    line = None
    column = None
    key = None

    def __init__(self, message=None, path=None, line=None, column=None,
                 key=None):
        super(IxgError, self).__init__(message)

        self.message = message

        if path is not None:
            self.path = path

        if line is not None:
            self.line = line

        if column is not None:
            self.column = column

        if key is not None:
            self.key = key

    @property
    def text(self):
        return self.message

    @property
    def location(self):
        """Human readable location, like 'maze.json:3:14', or None."""
        if self.path is None and self.line is None:
            return None

        location = self.path or "<input>"
        if self.line is not None:
            location = "%s:%d" % (location, self.line)
            if self.column is not None:
                location = "%s:%d" % (location, self.column)

        return location

    def __str__(self):
        location = self.location
        if location:
            return "%s (%s) at %s" % (type(self).__name__, self.text, location)

        return "%s (%s)" % (type(self).__name__, self.text)

    def __repr__(self):
        return "%s(message=%r, path=%r, line=%r, key=%r)" % (
            type(self).__name__, self.message, self.path, self.line, self.key)


class IxgArgumentError(IxgError, ValueError):
    pass


class IxgEmptySetError(IxgError):
    pass


class IxgEmptyIntersectionError(IxgEmptySetError):
    pass


class IxgUnboundedSetError(IxgError):
    pass


class IxgQueryOutsideCoverError(IxgError):
    endpoint = None

    @property
    def text(self):
        if self.message:
            return self.message

        return "The %s point is not inside any convex set." % self.endpoint

    def __init__(self, *args, **kwargs):
        self.endpoint = kwargs.pop("endpoint", None)
        super(IxgQueryOutsideCoverError, self).__init__(*args, **kwargs)


class IxgSolverStalledError(IxgError):
    status = None

    def __init__(self, *args, **kwargs):
        self.status = kwargs.pop("status", None)
        super(IxgSolverStalledError, self).__init__(*args, **kwargs)


class IxgOracleTooLargeError(IxgError):
    cap = None

    def __init__(self, *args, **kwargs):
        self.cap = kwargs.pop("cap", None)
        super(IxgOracleTooLargeError, self).__init__(*args, **kwargs)


class IxgParseError(IxgError):
    pass


class IxgKeyError(IxgParseError, KeyError):
    @property
    def text(self):
        if self.message:
            return self.message

        if self.key:
            return "Missing required key %r." % self.key

        return None

    def __str__(self):
        # KeyError would otherwise repr() the message.
        return IxgError.__str__(self)


class IxgStateError(IxgError):
    pass


class IxgUnsupportedDimensionError(IxgError):
    expected = None
    actual = None

    @property
    def text(self):
        if self.message:
            return self.message

        if self.expected and self.actual:
            return "Expected dimension %r, got %r instead." % (self.expected,
                                                               self.actual)

        return None

    def __init__(self, *args, **kwargs):
        self.expected = kwargs.pop("expected", None)
        self.actual = kwargs.pop("actual", None)

        super(IxgUnsupportedDimensionError, self).__init__(*args, **kwargs)


class IxgCacheError(IxgError):
    pass
