# coding=utf-8


class CarnotError(Exception):
    '''base of all validation failures'''
    pass


class StratificationError(CarnotError):
    pass


class JacobiError(CarnotError):
    pass


class UnsupportedStep(CarnotError):
    pass


class ShapeMismatch(CarnotError):
    pass


class NonpositiveScale(CarnotError):
    pass


class UnknownName(CarnotError):
    pass


class TooManyPoints(CarnotError):
    pass


class EmptyCloud(CarnotError):
    pass


class ScaleOutOfRange(CarnotError):
    pass


class InvalidParams(CarnotError):
    pass


class InvalidAlpha(InvalidParams):
    pass


class InvalidExponents(InvalidParams):
    pass


class ZeroMassCube(CarnotError):
    pass


class ScaleMismatch(CarnotError):
    pass


class DegenerateParams(CarnotError):
    pass


class ZeroMeasure(CarnotError):
    pass


class NoConvergence(CarnotError):
    '''iteration cap reached; .result holds the last iterate'''

    def __init__(self, msg, result=None):
        CarnotError.__init__(self, msg)
        self.result = result


class Diverged(Exception):
    '''solver blow-up; .diagnostics holds the iteration record'''

    def __init__(self, msg, diagnostics=None):
        Exception.__init__(self, msg)
        self.diagnostics = diagnostics


class EnoughIterations(Exception):
    '''stop signal of utils.baseClasses.Iteratives'''

    def __init__(self, reason):
        Exception.__init__(self, reason)
        self.reason = reason
