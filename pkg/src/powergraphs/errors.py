"""Exception hierarchy shared by all modules."""


class PowerGraphError(Exception):
    """Base class for every error raised by the package."""


class InputError(PowerGraphError):
    """Bad user input: malformed files, invalid specs, non-groups."""


class NotAGroup(InputError):
    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        msg = reason if not detail else f"{reason}: {detail}"
        super().__init__(msg)


class ParseError(InputError):
    pass


class InvalidSpec(InputError):
    pass


class CapExceeded(PowerGraphError):
    """A configured size cap was exceeded."""


class OrderCapExceeded(CapExceeded):
    pass


class AnalysisCapExceeded(CapExceeded):
    pass


class GraphError(PowerGraphError):
    pass


class EmptyGraph(GraphError):
    pass


class MissingEdge(GraphError):
    pass


class MissingVertex(GraphError):
    pass


class CompleteGraph(GraphError):
    pass


class TrivialGraph(GraphError):
    pass


class DisconnectedGraph(GraphError):
    pass
