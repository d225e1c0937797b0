"""Exception types shared across the package."""


class WeilmotiveError(Exception):
    pass


class ValidationError(WeilmotiveError):
    """Invalid input: bad curve parameters, ramified or bad-reduction prime, ..."""


class ResourceLimitError(WeilmotiveError):
    """A computation would exceed a configured size bound."""

    def __init__(self, message, required=None, limit=None):
        super().__init__(message)
        self.required = required
        self.limit = limit
