class GeometryError(Exception):
    pass


class DegenerateInput(GeometryError, ValueError):
    pass


class NotConvex(GeometryError, ValueError):
    pass


class BadIndex(GeometryError, IndexError):
    pass


class InternalInconsistency(GeometryError, ArithmeticError):
    """A result that is impossible in exact arithmetic; signals numeric trouble."""


class EmptyInput(GeometryError, ValueError):
    pass


class ClockUnavailable(GeometryError, RuntimeError):
    pass
