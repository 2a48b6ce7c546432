"""Exception hierarchy shared by every chernforge module."""


class ChernForgeError(Exception):
    """Base class for all chernforge errors.

    Errors collect a context trail (construction steps or recipe positions)
    while they propagate, so the CLI can say where a failure happened.
    """

    def __init__(self, message):
        super().__init__(message)
        self.message = message
        self.context = []

    def add_context(self, step):
        """Prepend a step to the context trail and return self for re-raising."""
        self.context.insert(0, step)
        return self

    def __str__(self):
        if not self.context:
            return self.message
        return f"{' > '.join(self.context)}: {self.message}"


class DomainError(ChernForgeError, ValueError):
    """Input outside the domain of a topological operation."""


class IntegralityError(DomainError):
    """A quantity that must be an integer (Todd genus, parity) is not."""


class ConstraintViolation(DomainError):
    """Realization targets violate the admissibility bound."""

    def __init__(self, message, max_admissible):
        super().__init__(message)
        self.max_admissible = max_admissible


class RingError(DomainError):
    """Invalid ring presentation or degree mismatch in ring arithmetic."""


class PolicyRejection(ChernForgeError):
    """The anti-self-dual metric policy refuses a construction."""


class RecipeSyntaxError(ChernForgeError):
    """Recipe text that cannot be parsed or type-checked."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self):
        text = super().__str__()
        if self.line is None:
            return text
        return f"line {self.line}, column {self.column}: {text}"
