"""Exception hierarchy.

Three families matter to callers: bad input, exhausted exploration budgets,
and guards against combinatorial blow-up.  The CLI maps them to exit codes
2, 3 and 4 respectively.
"""


class BetanumError(Exception):
    """Base class for all errors raised by this package."""


class InputError(BetanumError):
    """Invalid argument or precondition violation (CLI exit code 2)."""


class ZeroLeadingCoefficient(InputError):
    pass


class NonSquareFreePolynomial(InputError):
    pass


class NoRootAboveOne(InputError):
    pass


class ContextMismatch(InputError):
    pass


class OutOfRangeX(InputError):
    pass


class ValueOutOfRange(InputError):
    pass


class UndeterminedInput(InputError):
    pass


class UnboundedEmbedding(InputError):
    """A unit-modulus conjugate makes the requested embedding bound infinite."""


class MalformedJson(InputError):
    pass


class BudgetError(BetanumError):
    """An exploration budget was exhausted (CLI exit code 3)."""


class ZNotFiniteWithinBudget(BudgetError):
    pass


class GuardError(BetanumError):
    """A size guard refused to start a too-large computation (CLI exit code 4)."""


class SearchSpaceTooLarge(GuardError):
    pass


class ExplosionGuard(GuardError):
    pass
