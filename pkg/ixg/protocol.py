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
IxG protocols.

A protocol is a named group of multimethods (see ixg.dispatch). Once every
required multimethod is implemented for a type, the type is registered with
the protocol and isinstance(obj, Protocol) holds for its instances.

The planner uses two protocols, both under ixg.protocols:

 - IExportable: todict/fromdict, used by the scenario files, the LBG cache,
   stats JSON and run records.
 - IDrawable: draw, used by the SVG renderer.
"""

import abc


def implements(obj, protocol):
    """Does the instance 'obj' participate in 'protocol'?"""
    if isinstance(obj, type):
        raise TypeError("implements takes an instance, got the type %r." %
                        (obj,))

    return isinstance(obj, protocol)


def isa(cls, protocol):
    """Does the type 'cls' participate in 'protocol'?"""
    if not isinstance(cls, type):
        raise TypeError("isa takes a type, got %r." % (cls,))

    if not isinstance(protocol, type):
        raise TypeError("isa takes a Protocol as second argument, got an "
                        "instance of %r." % type(protocol))

    return issubclass(cls, protocol)


def _collect(cls, attribute):
    functions = set()
    for klass in cls.__mro__:
        functions.update(klass.__dict__.get(attribute, ()))

    return functions


class Protocol(object, metaclass=abc.ABCMeta):
    """Interface made of multimethods.

    Subclasses list their multimethods in '_required_functions' and
    '_optional_functions'; both are inherited by sub-protocols.
    """

    _required_functions = ()
    _optional_functions = ()

    @classmethod
    def required(cls):
        return _collect(cls, "_required_functions")

    @classmethod
    def optional(cls):
        return _collect(cls, "_optional_functions")

    @classmethod
    def functions(cls):
        return cls.required() | cls.optional()

    @classmethod
    def implemented(cls, for_type):
        """Register 'for_type' once it implements every required function.

        Raises:
            TypeError naming the first missing function.
        """
        missing = sorted(func.func_name for func in cls.required()
                         if not func.implemented_for_type(for_type))
        if missing:
            raise TypeError("%r cannot participate in %s: %s not "
                            "implemented." % (for_type, cls.__name__,
                                              ", ".join(missing)))

        cls.register(for_type)

    @classmethod
    def implement(cls, implementations, for_type=None, for_types=None):
        """Implement the protocol for one or more types.

        Arguments:
            implementations: Dict of multimethod -> callable.
            for_type: A type.
            for_types: A tuple of types, instead of for_type.

        Raises:
            ValueError for bad arguments, TypeError if a function is not part
            of the protocol or a required one is left out.

        Example:
            IExportable.implement(
                for_type=CostWeights,
                implementations={
                    exportable.todict: lambda w: dict(a=w.a, b=w.b)
                })
        """
        if for_type is not None and for_types is not None:
            raise ValueError("Cannot pass both for_type and for_types.")
        types = (for_type,) if for_type is not None else for_types
        if not types:
            raise ValueError("Must pass either for_type or for_types.")

        known = cls.functions()
        foreign = [func for func in implementations if func not in known]
        if foreign:
            raise TypeError("%s is not part of the protocol %s." % (
                getattr(foreign[0], "func_name", repr(foreign[0])),
                cls.__name__))

        for type_ in types:
            for func, implementation in implementations.items():
                func.implement(for_type=type_, implementation=implementation)

            cls.implemented(for_type=type_)
