"""Exception hierarchy shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for every error raised deliberately by tanglekit."""


class GroundSetLimitError(ToolkitError):
    """A requested operation exceeds the hard size limit that keeps it tractable.

    Exhaustive routines in this package walk all 2**n subsets of the ground
    set, so each entry point refuses sizes where that walk would be hopeless
    rather than silently running forever.
    """

    def __init__(self, operation: str, size: int, limit: int):
        self.operation = operation
        self.size = size
        self.limit = limit
        super().__init__(
            f"{operation}: ground set size {size} exceeds the supported "
            f"limit of {limit}"
        )


class FunctionAxiomError(ToolkitError):
    """A set function failed symmetry, submodularity or range validation.

    Carries the offending subsets (as bitmasks) so callers can report a
    concrete witness instead of a bare failure.
    """

    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        self.witness = witness
        super().__init__(message)


class SchemaError(ToolkitError):
    """A JSON document does not match the expected on-disk schema."""


class FilterBaseError(ToolkitError):
    """A family offered as a filter base fails FB1 or FB2.

    The failing AxiomResult travels with the exception so the caller can show
    which pair of members has no common lower bound.
    """

    def __init__(self, message: str, result):
        self.result = result
        super().__init__(message)


class SearchBudgetError(ToolkitError):
    """A search request exceeds the configured instance-size budget."""
