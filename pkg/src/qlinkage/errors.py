"""Exception hierarchy shared by every module of the engine."""


class EngineError(Exception):
    """Base class for domain errors; the CLI maps these to exit code 1."""


class ParseError(EngineError, ValueError):
    pass


class NotFiniteType(EngineError):
    pass


class OrbitCapExceeded(EngineError):
    pass


class MorphismCapExceeded(EngineError):
    pass


class AmbiguousLongest(EngineError):
    pass


class InfiniteBound(EngineError):
    pass


class NonUnique(EngineError):
    pass


class NotTypical(EngineError):
    pass


class WrongAtypicality(EngineError):
    pass


class NotStandardType(EngineError):
    pass


class PresentationMismatch(EngineError):
    pass


class HalfIntegerResult(EngineError):
    pass


class NoSuchM(EngineError):
    pass


class PreconditionUnmet(EngineError):
    pass
