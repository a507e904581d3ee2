"""Exception types raised by the library.

Every error derives from :class:`TnormError` (itself a ``ValueError``) so the
CLI can map the whole family onto a single exit code.
"""


class TnormError(ValueError):
    """Base class for input and precondition failures."""

    def as_dict(self):
        return {"type": type(self).__name__, "message": str(self)}


class InvalidCharacter(TnormError):
    def __init__(self, position, char=None):
        self.position = position
        self.char = char
        super().__init__(f"invalid character {char!r} at position {position}")

    def as_dict(self):
        return {**super().as_dict(), "position": self.position}


class InvalidTwistSyntax(TnormError):
    def __init__(self, position, detail):
        self.position = position
        super().__init__(f"twist word syntax error at position {position}: {detail}")

    def as_dict(self):
        return {**super().as_dict(), "position": self.position}


class EmptyRelator(TnormError):
    def __init__(self):
        super().__init__("relator is empty")


class NotCyclicallyReduced(TnormError):
    def __init__(self, word):
        self.word = word
        super().__init__(f"relator {word!r} is not reduced and cyclically reduced")


class UnsupportedGenerator(TnormError):
    def __init__(self, generator):
        self.generator = generator
        super().__init__(f"relator uses generator {generator!r}; only x and y are allowed")


class NonzeroExponentSum(TnormError):
    def __init__(self, generator, total):
        self.generator = generator
        self.total = total
        super().__init__(
            f"exponent sum of {generator} is {total}, not 0 (first Betti number is not 2)"
        )

    def as_dict(self):
        return {**super().as_dict(), "generator": self.generator, "sum": self.total}


class TrivialRelator(TnormError):
    def __init__(self, twists=None):
        self.twists = twists
        super().__init__("the image curve projects to the trivial word")


class ZeroClass(TnormError):
    def __init__(self):
        super().__init__("the zero class has no fiberedness verdict")


class EmptyPolytope(TnormError):
    def __init__(self):
        super().__init__("marked polytope has no vertices")


class InvalidParameter(TnormError):
    def __init__(self, parameter):
        self.parameter = parameter
        super().__init__(f"family parameter must be a positive integer, got {parameter!r}")


class InvalidFamily(TnormError):
    def __init__(self, family):
        self.family = family
        super().__init__(f"no vertex-count formula for family {family!r}")


class InvalidClass(TnormError):
    def __init__(self, text):
        super().__init__(f"cannot parse cohomology class {text!r}; expected 'p,q' with rationals")


class CheckFailed(Exception):
    """Raised by family sweeps when a structural check does not hold."""

    def __init__(self, n, detail):
        self.n = n
        self.detail = detail
        super().__init__(f"check failed at n={n}: {detail}")
