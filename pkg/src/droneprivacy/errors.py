"""Exception types shared across the package."""


class UnknownIdError(ValueError):
    """A route references a vendor or customer id that the scenario does not define."""


class GuardError(RuntimeError):
    """An exhaustive operation refused to run because the instance exceeds its size guard."""
