"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class LexSearchError(ValueError):
    """Base class for all contract and input errors raised by lexsearch."""


class EmptyInput(LexSearchError):
    pass


class SelfLoop(LexSearchError):
    def __init__(self, token):
        super().__init__(f"self-loop on vertex {token!r}")
        self.token = token


class Disconnected(LexSearchError):
    def __init__(self, token_a, token_b):
        super().__init__(
            f"graph is disconnected: {token_a!r} and {token_b!r} lie in different components"
        )
        self.tokens = (token_a, token_b)


class InvalidOrder(LexSearchError):
    """A sequence is not a permutation of the vertex set."""


class StartNotInGraph(LexSearchError):
    pass


class VertexNotInGroundSet(LexSearchError):
    pass


class NotASearchOrder(LexSearchError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex!r} has no neighbour earlier in the order")
        self.vertex = vertex


class NotASpanningTree(LexSearchError):
    pass


class RhoDoesNotEndAtStart(LexSearchError):
    pass


class NotDfsLtree(LexSearchError):
    pass


class InvalidBeta(LexSearchError):
    pass


class NotChordal(LexSearchError):
    """Raised when an operation needs a chordal graph.

    ``cycle`` holds a chordless cycle (vertex ids, length >= 4) found in the
    input graph.
    """

    def __init__(self, cycle):
        self.cycle = list(cycle)
        super().__init__(f"graph is not chordal; chordless cycle {self.cycle}")


class GraphTooLarge(LexSearchError):
    pass


class InvalidParameters(LexSearchError):
    pass


class ParseError(LexSearchError):
    pass
