class ToolkitError(Exception):
    """Base class for all errors raised by the toolkit."""
    pass


class InvalidComplexError(ToolkitError, ValueError):
    """Error raised when input does not describe a valid complex or subset."""
    pass


class SimplexNotFoundError(ToolkitError, KeyError):
    """Error raised when a simplex is not a member of the host complex."""
    pass


class TopologyLimitExceeded(ToolkitError):
    """Error raised when open-set enumeration passes its limit."""

    def __init__(self, limit: int, partial_count: int):
        self.limit = limit
        self.partial_count = partial_count
        super().__init__(
            f"Topology enumeration exceeded the limit of {limit:,} open sets "
            f"({partial_count:,} found so far)"
        )


class BudgetExceededError(ToolkitError):
    """Error raised when a search or computation runs out of budget."""

    def __init__(self, what: str, spent, budget):
        self.what = what
        self.spent = spent
        self.budget = budget
        super().__init__(f"{what}: budget of {budget} exhausted (spent {spent})")


class UnsupportedOrderError(ToolkitError, ValueError):
    """Error raised for a characteristic order outside the supported range."""
    pass


class NotLocallyInjectiveError(ToolkitError, ValueError):
    """Error raised when a function takes equal values on adjacent vertices."""
    pass


class MapError(ToolkitError, ValueError):
    """Error raised for maps that are not total or not continuous."""
    pass


class ComplexParseError(ToolkitError):
    """Error raised when a complex, graph or map file cannot be parsed."""
    pass
