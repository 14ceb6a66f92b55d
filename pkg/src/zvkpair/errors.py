"""Exception hierarchy shared by the whole package."""


class ZvkError(ValueError):
    """Base class for input and precondition failures."""


class MalformedWordError(ZvkError):
    pass


class IndexRangeError(ZvkError):
    """A generator or braid index falls outside the allowed range."""


class StrandMismatchError(ZvkError):
    pass


class SchemaError(ZvkError):
    """A JSON document does not follow the expected layout.

    The message names the offending field (and row, when there is one).
    """
