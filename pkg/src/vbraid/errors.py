"""Exception types shared across the package."""


class VBraidError(Exception):
    pass


class ParseError(VBraidError, ValueError):
    pass


class UnknownToken(ParseError):
    pass


class IndexOutOfRange(ParseError):
    pass


class EmptyIndex(ParseError):
    pass


class StrandCountMismatch(VBraidError, ValueError):
    pass


class PatternMismatch(VBraidError, ValueError):
    pass


class InapplicableSite(VBraidError, ValueError):
    pass


class NotPure(VBraidError, ValueError):
    pass


class MalformedRotation(VBraidError, ValueError):
    pass


class AmbiguousDistinguished(VBraidError, RuntimeError):
    pass
