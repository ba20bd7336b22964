"""Exception types shared by all equidim modules."""


class EquidimError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(EquidimError):
    """Invalid graph construction or violated operation precondition."""


class BudgetError(EquidimError):
    """Instance is too large for the exact search budget."""
