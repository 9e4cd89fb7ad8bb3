"""Exception types shared across the codec modules."""


class CodecError(ValueError):
    """Base class for codec failures."""


class CodebookError(CodecError):
    """Label alphabet or code lookup failure."""


class NotDecodableError(CodecError):
    """The input network is not in the image of the encoder being inverted."""


class ParseError(CodecError):
    """Text document rejected; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
