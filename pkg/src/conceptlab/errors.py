"""Exception taxonomy shared across the package.

Plain argument misuse raises ValueError; the classes below mark outcomes
that callers (and the CLI exit-code contract) treat differently:
budget overruns are recoverable, contract violations are red alerts.
"""


class ConceptLabError(Exception):
    """Base class for package-specific errors."""


class BudgetError(ConceptLabError):
    """A resource guard tripped (search space or sample count too large).

    May carry a partial report in ``report`` when the operation produced one
    before running out of budget.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ContractViolationError(ConceptLabError):
    """A certified property failed to hold; this should never happen on
    valid inputs and indicates either corrupted inputs or a real bug."""


class RealizabilityError(ConceptLabError):
    """A compression routine was fed a sample the class cannot realize."""


class ConvergenceError(ConceptLabError):
    """An iterative scheme exceeded its round cap without converging."""
