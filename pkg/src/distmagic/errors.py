class InputError(ValueError):
    """Raised when a caller-supplied parameter, file, or labeling is rejected.

    The CLI maps this (and only this) to exit status 2.
    """
