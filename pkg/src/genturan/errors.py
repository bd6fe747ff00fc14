class GenTuranError(Exception):
    pass


class PreconditionError(GenTuranError, ValueError):
    """An operation was called outside its documented domain.

    ``condition`` names the violated precondition so callers (and the CLI)
    can report which rule failed.
    """

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        self.detail = detail
        super().__init__(f"{condition}: {detail}" if detail else condition)


class LimitExceededError(GenTuranError):
    """Exhaustive search requested beyond its configured size limit."""
