"""Exception hierarchy shared by every cfclab module."""


class CfcError(ValueError):
    """Base class for all cfclab errors."""


class CycleDetected(CfcError):
    pass


class Disconnected(CfcError):
    pass


class SelfLoop(CfcError):
    pass


class DuplicateEdge(CfcError):
    pass


class BadLabel(CfcError):
    pass


class BadEdgeIndex(CfcError):
    pass


class SameVertex(CfcError):
    pass


class TrivialTree(CfcError):
    pass


class CoverageError(CfcError):
    pass


class NotALeaf(CfcError):
    pass


class NotASubtree(CfcError):
    pass


class TooLarge(CfcError):
    pass


class BadParams(CfcError):
    pass


class NoConstruction(CfcError):
    pass


class FormatError(CfcError):
    pass


class BudgetExceeded(CfcError):
    """Search ran out of nodes; carries the bracket established so far."""

    def __init__(self, lower: int, upper: int, nodes: int):
        super().__init__(f"node budget exhausted after {nodes} nodes; value in [{lower}, {upper}]")
        self.lower = lower
        self.upper = upper
        self.nodes = nodes
