"""Exception types shared across the package.

The CLI maps these onto exit codes: ContractViolation -> 1, IngestionError -> 2.
"""


class ContractViolation(ValueError):
    """An operation was called with arguments that break its contract."""


class NonFiniteError(ContractViolation):
    """A NaN or infinity reached a numerical primitive."""

    def __init__(self, where, detail=""):
        self.where = where
        msg = f"non-finite value in {where}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class IngestionError(IOError):
    """A file could not be read or did not match its declared format."""
