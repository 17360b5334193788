"""Exception types shared across the package."""


class ResourceGuardError(RuntimeError):
    """Raised when an exact operation would exceed its configured size guard.

    CLI maps this to exit code 2 (guard tripped), distinct from ordinary
    errors (exit code 1).
    """
