"""Exception hierarchy shared by all modules."""


class NoetherError(Exception):
    """Base class for all library errors."""


class ParseError(NoetherError):
    """Input text failed to parse; carries position information when known."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class DomainError(NoetherError):
    """A precondition on mathematical inputs was violated."""


class ValidationError(NoetherError):
    """Structured input (tables, digraphs, sheaf data) violates an invariant."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceBudgetError(NoetherError):
    """A computation exceeded a configured budget; names the budget."""

    def __init__(self, budget_name, limit, message=None):
        super().__init__(message or f"budget '{budget_name}' exceeded (limit {limit})")
        self.budget_name = budget_name
        self.limit = limit


class BoundExceededError(ResourceBudgetError):
    """Exhaustive enumeration would exceed the configured size bound."""


class CapabilityError(NoetherError):
    """The requested exact computation is outside this implementation's scope."""


class OracleError(NoetherError):
    """A sheaf oracle violated the presheaf law; carries the witnessing pair."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
