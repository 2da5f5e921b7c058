"""Exception hierarchy. Every validation error carries the offending witness."""


class FinlocError(Exception):
    pass


class CapExceeded(FinlocError):
    def __init__(self, needed, cap):
        super().__init__(f"enumeration needs {needed} candidates, cap is {cap}")
        self.needed = needed
        self.cap = cap


class ValidationError(FinlocError):
    """Base class for axiom violations; ``witness`` names the offending elements."""

    def __init__(self, *witness, message=None):
        self.witness = witness
        text = message or f"{type(self).__name__}{witness}"
        super().__init__(text)


# order_core
class NotReflexive(ValidationError):
    pass


class NotAntisymmetric(ValidationError):
    pass


class NotTransitive(ValidationError):
    pass


class NotMonotone(ValidationError):
    pass


# lattice_core
class NoMeet(ValidationError):
    pass


class NoJoin(ValidationError):
    pass


class NoTop(ValidationError):
    pass


class NoBot(ValidationError):
    pass


class NotDistributive(ValidationError):
    pass


class NotLatticeHom(ValidationError):
    pass


# frame_ops
class NotJoinPreserving(ValidationError):
    pass


class NotFrameHom(ValidationError):
    pass


# nuclei
class NotInflationary(ValidationError):
    pass


class NotMeetPreserving(ValidationError):
    pass


class NotIdempotent(ValidationError):
    pass


# spectrum / patch / scott
class IsoFailure(ValidationError):
    pass


class NotSpectral(ValidationError):
    pass


class NotStone(ValidationError):
    pass


class UPFailure(ValidationError):
    pass


class NotPointed(ValidationError):
    pass


class NotBoundedComplete(ValidationError):
    pass


class BijectionFailure(ValidationError):
    pass


class ParseError(FinlocError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
