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
IxG multimethod dispatch.

Exporters and renderers are declared once as multimethods and implemented
next to the types they handle (geometry, trajectories, lower bound graphs),
which keeps file formats and drawing out of the numerical modules.

Resolution walks the MRO of the dispatch type and takes the first class with
a registered implementation. If none matches, abstract base classes the type
was registered with (abc.ABCMeta.register) are tried in registration order.
"""

import functools
import threading


def _first_arg_type(args, kwargs):
    _ = kwargs
    if not args:
        raise ValueError(
            "Multimethods must be passed at least one positional arg.")

    return type(args[0])


def _first_arg_class(args, kwargs):
    _ = kwargs
    if not args:
        raise ValueError(
            "Multimethods must be passed at least one positional arg.")

    if not isinstance(args[0], type):
        raise TypeError(
            "class_multimethod must be called with a type, not instance.")

    return args[0]


def _as_types(for_type, for_types):
    if for_type is not None and for_types is not None:
        raise ValueError("Cannot pass both for_type and for_types.")

    if for_type is not None:
        return (for_type,)

    if for_types is None:
        raise ValueError("Must pass either for_type or for_types.")

    if not isinstance(for_types, tuple):
        raise TypeError("for_types must be passed as a tuple of "
                        "types (classes).")

    return for_types


class multimethod(object):
    """A function whose implementation is picked by the type of an argument.

    Arguments:
        func: The decorated declaration. It runs when no implementation
            matches; raising NotImplementedError there means "no default".
        dispatch_function: Optional (args, kwargs) -> type. Defaults to the
            type of the first positional argument.

    Examples:
        @multimethod
        def todict(obj):
            raise NotImplementedError()

        todict.implement(for_type=CostWeights,
                         implementation=lambda w: {"a": w.a, "b": w.b})

        todict(CostWeights(1.0, 0.5))  # => {"a": 1.0, "b": 0.5}
    """

    is_multimethod = True

    def __init__(self, func, dispatch_function=None):
        self.func = func
        self.dispatch_function = dispatch_function or _first_arg_type
        self._registry = {}
        self._resolved = {}
        self._lock = threading.Lock()
        functools.update_wrapper(self, func)

    @property
    def func_name(self):
        return self.func.__name__

    @property
    def implementations(self):
        """(type, implementation) pairs in registration order."""
        return list(self._registry.items())

    def __repr__(self):
        return "multimethod(%s)" % self.func_name

    def __call__(self, *args, **kwargs):
        dispatch_type = self.dispatch_function(args, kwargs)
        implementation = self.resolve(dispatch_type)
        if implementation is not None:
            return implementation(*args, **kwargs)

        try:
            return self.func(*args, **kwargs)
        except NotImplementedError:
            if dispatch_type is type(None):
                raise TypeError("%r was passed None for first argument." %
                                self.func_name)

            raise NotImplementedError(
                "Multimethod %r has no implementation for %r. It is "
                "implemented for %r." % (self.func_name, dispatch_type,
                                         list(self._registry)))

    def resolve(self, dispatch_type):
        """The implementation used for 'dispatch_type', or None."""
        try:
            return self._resolved[dispatch_type]
        except KeyError:
            pass

        with self._lock:
            implementation = self._resolve(dispatch_type)
            self._resolved[dispatch_type] = implementation
            return implementation

    def _resolve(self, dispatch_type):
        mro = getattr(dispatch_type, "__mro__", (dispatch_type, object))
        for cls in mro:
            if cls in self._registry:
                return self._registry[cls]

        for cls, implementation in self._registry.items():
            if issubclass(dispatch_type, cls):
                return implementation

        return None

    def implemented_for_type(self, dispatch_type):
        return self.resolve(dispatch_type) is not None

    def implement(self, implementation, for_type=None, for_types=None):
        """Register 'implementation' for one or more types.

        Arguments:
            implementation: Callable taking the same arguments as the
                declaration. Unbound methods are accepted.
            for_type: A type.
            for_types: A tuple of types, instead of for_type.

        Raises:
            ValueError or TypeError for bad arguments.
        """
        types = _as_types(for_type, for_types)
        implementation = getattr(implementation, "__func__", implementation)

        with self._lock:
            for cls in types:
                self._registry[cls] = implementation
            self._resolved.clear()

    def implementation(self, for_type=None, for_types=None):
        """Decorator form of implement.

        Example:
            @draw.implementation(for_type=ConvexSet)
            def draw(cset, ax, **style):
                ...
        """
        types = _as_types(for_type, for_types)

        def _decorator(implementation):
            self.implement(implementation, for_types=types)
            return self

        return _decorator


def class_multimethod(func):
    """A multimethod dispatching on a class passed as the first argument.

    Used for alternate constructors: fromdict(ConvexSet, data).
    """
    return multimethod(func, dispatch_function=_first_arg_class)
