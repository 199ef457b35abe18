"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Raised when input parameters violate a documented precondition."""


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration exceeds its node budget.

    Distinguishable from a completed enumeration: the generator raises
    instead of returning.
    """

    def __init__(self, budget, nodes):
        super().__init__(f"node budget exceeded ({nodes} nodes, budget {budget})")
        self.budget = budget
        self.nodes = nodes


class InternalCheckError(RuntimeError):
    """A cross-validation invariant failed; indicates a defect, not bad input."""
