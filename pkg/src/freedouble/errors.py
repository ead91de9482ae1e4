class BudgetError(RuntimeError):
    """A computation hit a configured size or depth budget."""
