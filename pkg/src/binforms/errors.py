"""Shared exception types."""


class PreconditionError(ValueError):
    """An operation was called outside its documented domain.

    The CLI maps this to exit status 1 with a machine-readable payload;
    any other exception escaping to the top level is a bug (exit status 2).
    """

    def __init__(self, message: str, **context):
        super().__init__(message)
        self.context = context

    def payload(self) -> dict:
        return {"error": "precondition", "message": str(self), **self.context}
