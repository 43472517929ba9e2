"""Exception types shared across the package."""


class DfvsError(Exception):
    """Base class for all errors raised by dfvskit."""


class GraphInputError(DfvsError, ValueError):
    """Malformed graph input (bad endpoint, bad file line, bad parameter)."""


class ContractError(DfvsError, ValueError):
    """A caller violated an operation precondition (e.g. hint is not a dfvs)."""


class CyclicGraphError(DfvsError):
    """Raised by topological_order when the view still contains a cycle."""
