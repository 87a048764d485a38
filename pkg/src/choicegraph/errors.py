"""Exception hierarchy shared by every module."""


class ChoiceGraphError(Exception):
    """Base class for all errors raised by this package."""


# graph construction and queries
class DuplicateVertex(ChoiceGraphError):
    pass


class UnknownEndpoint(ChoiceGraphError):
    pass


class SelfLoop(ChoiceGraphError):
    pass


class UnknownVertex(ChoiceGraphError):
    pass


class EmptyGraph(ChoiceGraphError):
    pass


class DomainMismatch(ChoiceGraphError):
    """A colouring is not total on the vertex or edge set it is used with."""


class TooLarge(ChoiceGraphError):
    """An instance exceeds a configured size cap."""


# family constructions
class InvalidSpec(ChoiceGraphError):
    pass


class InvalidSets(ChoiceGraphError):
    pass


# transfers
class VariantMismatch(ChoiceGraphError):
    pass


class SpecMismatch(ChoiceGraphError):
    pass


class NotProperResult(ChoiceGraphError):
    pass


class NotProperInput(ChoiceGraphError):
    pass


class UnsupportedPair(ChoiceGraphError):
    pass


class PropertyLost(ChoiceGraphError):
    pass


# choice engine
class NotKAcceptable(ChoiceGraphError):
    pass


class ChoiceUndefined(ChoiceGraphError):
    pass


class NotInjective(ChoiceGraphError):
    pass


class SizeOrder(ChoiceGraphError):
    pass


# reductions
class ColourNotInImage(ChoiceGraphError):
    pass


class SameColour(ChoiceGraphError):
    pass


class DifferentBase(ChoiceGraphError):
    pass


class PropertyNotSatisfied(ChoiceGraphError):
    pass


class ChainInvariantError(ChoiceGraphError):
    """Internal comparator invariant violated; indicates a bug, not bad input."""


# oracles
class K1K2Component(ChoiceGraphError):
    pass
