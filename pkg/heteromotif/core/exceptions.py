class HeteroMotifError(Exception):
    """Base class for every error raised by heteromotif."""


class GraphFormatError(HeteroMotifError, ValueError):
    """
    Raised when an input graph or type file can't be turned into a
    valid ``HeteroGraph``. The path and line number are kept when known
    so that command-line users can find the offending line.
    """

    def __init__(self, msg, path=None, line=None):
        self.path = path
        self.line = line
        if path is not None and line is not None:
            msg = f"{path}:{line}: {msg}"
        elif path is not None:
            msg = f"{path}: {msg}"
        super().__init__(msg)


class ContractViolation(HeteroMotifError, ValueError):
    """Raised when a function is called with arguments outside its domain."""


class InternalConsistencyError(HeteroMotifError, RuntimeError):
    """
    Raised when a count fails one of the identities it must satisfy,
    eg a negative derived orbit count or an edge-summed graphlet count
    that isn't divisible by the graphlet's edge count. These signal a
    bug in the counting code and are never clamped or ignored.
    """


class OracleCapExceeded(HeteroMotifError):
    def __init__(self, num_nodes, cap):
        msg = (
            "The brute-force oracle is limited to graphs with at most %s "
            "nodes, this graph has %s. Raise ORACLE_MAX_NODES if you really "
            "want to run it." % (cap, num_nodes)
        )
        super().__init__(msg)
