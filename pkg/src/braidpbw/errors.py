"""Exception types raised by braidpbw."""


class BraidPBWError(Exception):
    """Base class for errors raised by this package."""


class DivisionByZero(BraidPBWError, ZeroDivisionError):
    pass


class EvenOrderNeedsExtension(BraidPBWError, ValueError):
    pass


class FieldMismatch(BraidPBWError, ValueError):
    pass


class GenSetMismatch(BraidPBWError, ValueError):
    pass


class AmbientMismatch(BraidPBWError, ValueError):
    pass


class ParseError(BraidPBWError, ValueError):
    pass


class NotSubmodule(BraidPBWError):
    """A relation is moved outside the relation space by the Hopf action."""

    def __init__(self, generator, label, residue):
        self.generator = generator
        self.label = label
        self.residue = residue
        super().__init__(
            f"{generator} . {label} is not in the relation space (residue {residue})"
        )


class NotKEigenvector(BraidPBWError):
    def __init__(self, vector):
        self.vector = vector
        super().__init__(f"{vector} is not a K-eigenvector with eigenvalue a power of q")


class AssociativityFailure(BraidPBWError):
    def __init__(self, triple, left, right):
        self.triple = triple
        self.left = left
        self.right = right
        super().__init__(
            f"overlap {triple} resolves to {left} and {right}"
        )


class NotModuleMap(BraidPBWError):
    def __init__(self, generator, argument, left, right):
        self.generator = generator
        self.argument = argument
        self.left = left
        self.right = right
        super().__init__(
            f"map does not commute with {generator} on {argument}: {left} != {right}"
        )


class BoundExceeded(BraidPBWError, ValueError):
    pass


class UnknownExample(BraidPBWError, KeyError):
    pass


class BadParams(BraidPBWError, ValueError):
    pass
