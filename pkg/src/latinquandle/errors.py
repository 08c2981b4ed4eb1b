"""Exception types raised across the package."""


class QuandleError(Exception):
    pass


class SizeMismatchError(QuandleError, ValueError):
    pass


class ParseError(QuandleError, ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class NotLatinError(QuandleError, ValueError):
    pass


class NotAGroupError(QuandleError, ValueError):
    pass


class PreconditionError(QuandleError, ValueError):
    pass


class TooLargeError(QuandleError, ValueError):
    pass


class RecoveryError(QuandleError):
    pass
