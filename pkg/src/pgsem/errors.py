"""Exception hierarchy shared by all pgsem modules."""


class PgsemError(Exception):
    """Base class for all errors raised by this package."""


# -- type syntax and algebra ------------------------------------------------

class UnknownBasicType(PgsemError):
    pass


class MalformedToken(PgsemError):
    pass


class AdjointOrderOverflow(PgsemError):
    pass


class InvalidDiagram(PgsemError):
    pass


# -- tensors ----------------------------------------------------------------

class SemiringMismatch(PgsemError):
    pass


class ShapeMismatch(PgsemError):
    pass


class AxisMismatch(PgsemError):
    pass


class DimMismatch(PgsemError):
    pass


class IndexOutOfRange(PgsemError):
    pass


class RankError(PgsemError):
    pass


class NotRealSemiring(PgsemError):
    pass


class ZeroVector(PgsemError):
    pass


# -- lexicon files ----------------------------------------------------------

class SchemaError(PgsemError):
    pass


class DuplicateBasicType(PgsemError):
    pass


class InvalidScalarForSemiring(PgsemError):
    pass


# -- sentence analysis ------------------------------------------------------

class UnknownWord(PgsemError):
    def __init__(self, token):
        super().__init__("unknown word: %r" % (token,))
        self.token = token


class NoReduction(PgsemError):
    pass


class ModeUnsupported(PgsemError):
    pass
