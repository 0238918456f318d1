"""Exception hierarchy shared by all modules.

The CLI maps the three top-level families onto exit codes:
``ParseError`` -> 1, ``ValidationError`` -> 2, ``PreconditionError`` -> 3.
"""


class HypermapError(Exception):
    """Base class for every error raised by this package."""


class ParseError(HypermapError, ValueError):
    """Malformed cycle notation or hypermap file."""


class ValidationError(HypermapError, ValueError):
    """A constructed object violates its defining invariants."""


class GroundSetMismatch(ValidationError):
    pass


class NotTransitive(ValidationError):
    """The two permutations generate an intransitive group."""


class PreconditionError(HypermapError, ValueError):
    """An operation was called on input outside its domain."""


class NotDisconnecting(PreconditionError):
    """The transposition connects the hyperedge permutation."""


class Isthmus(PreconditionError):
    """Hyperdeletion would leave an intransitive pair."""


class Disconnects(PreconditionError):
    """Hypercontraction would leave an intransitive pair."""


class NotAMap(PreconditionError):
    pass


class NotSpanning(PreconditionError):
    """The permutation is not a spanning structure of the required kind."""


class IllegalMerge(PreconditionError):
    pass


class IllegalSplit(PreconditionError):
    pass


class SplitLeavesCycle(IllegalSplit):
    pass


class SplitDisconnects(IllegalSplit):
    pass


class IncoherentTree(PreconditionError):
    """A labeled plane tree does not match the vertex-edge labeling of its map."""
