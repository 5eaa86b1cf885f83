"""Exception types shared by all homkit modules."""


class HomkitError(Exception):
    """Base class for all errors raised by homkit."""


class InputError(HomkitError, ValueError):
    """A precondition on user-supplied data was violated.

    The CLI maps this to exit status 2 (validation failure); everything
    else is treated as an internal error (exit status 1).
    """


class InternalCheckError(HomkitError):
    """A self-verification that should hold by theorem failed.

    Raised e.g. when a UCT report or a Pimsner-Voiculescu sequence fails
    its own exactness certificate; indicates a bug, not bad input.
    """
