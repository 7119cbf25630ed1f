"""Exception hierarchy. Every error raised on bad input derives from NcMinorsError."""


class NcMinorsError(Exception):
    pass


class ParentMismatch(NcMinorsError):
    pass


class AssociativityViolation(NcMinorsError):
    def __init__(self, i, j, l):
        super().__init__(f"(b{i} b{j}) b{l} != b{i} (b{j} b{l})")
        self.indices = (i, j, l)


class UnitViolation(NcMinorsError):
    def __init__(self, i):
        super().__init__(f"unit axiom fails on basis element {i}")
        self.index = i


class PossiblyInfiniteDimensional(NcMinorsError):
    def __init__(self, cap):
        super().__init__(f"path quotient not closed by length {cap}")
        self.cap = cap


class InvalidPresentation(NcMinorsError):
    pass


class NonBasicTop(NcMinorsError):
    pass


class NotIdempotent(NcMinorsError):
    pass


class ZeroIdempotent(NcMinorsError):
    pass


class NotAnIdeal(NcMinorsError):
    pass


class NotMonomorphism(NcMinorsError):
    pass


class QuotientNotSemisimple(NcMinorsError):
    pass


class ActionsDoNotCommute(NcMinorsError):
    pass


class NotAModule(NcMinorsError):
    pass


class CapExceeded(NcMinorsError):
    pass


class EmptyComposition(NcMinorsError):
    pass


class InvalidCurve(NcMinorsError):
    pass


class CurveMismatch(NcMinorsError):
    pass


class ChainMismatch(NcMinorsError):
    pass


class DivisorViolation(NcMinorsError):
    pass


class PointNotSpecial(NcMinorsError):
    pass


class TiltingObstruction(NcMinorsError):
    pass


class InvalidWeights(NcMinorsError):
    pass


class RepeatedLambda(NcMinorsError):
    pass


class NotCanonicalShape(NcMinorsError):
    def __init__(self, message, witness=None):
        super().__init__(message if witness is None else f"{message} [{witness}]")
        self.witness = witness


class ParseError(NcMinorsError):
    def __init__(self, path, line, column, rule):
        super().__init__(f"{path}:{line}:{column}: {rule}")
        self.path = path
        self.line = line
        self.column = column
        self.rule = rule
