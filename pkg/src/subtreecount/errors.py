"""Exception types shared by every module in this package."""


class SubtreeCountError(Exception):
    """Base class for all errors raised by this library."""


class ParseError(SubtreeCountError):
    """Malformed textual input (edge list, polynomial text or JSON)."""


class NotATree(SubtreeCountError):
    """Edge data does not describe a tree (cycle, disconnection, duplicate)."""


class UnknownVertex(SubtreeCountError):
    """A vertex label is not present in the tree."""


class SameVertex(SubtreeCountError):
    """Two anchor vertices were required to be distinct but are equal."""


class NotPendant(SubtreeCountError):
    """remove_leaf was asked to take out a vertex of degree != 1."""


class LengthMismatch(SubtreeCountError):
    """Weight vectors of incompatible lengths were combined."""


class NegativeCoefficient(SubtreeCountError):
    """Polynomial subtraction would produce a negative coefficient."""


class KTooSmall(SubtreeCountError):
    """The degree bound k is below the minimum the operation supports."""


class TooLarge(SubtreeCountError):
    """Input exceeds the size bound of the brute-force oracle."""
