"""Exception types shared across the package."""


class PastingError(Exception):
    """Base class. `info` is a JSON-able payload used by the CLI."""

    def __init__(self, message, **info):
        super().__init__(message)
        self.info = info

    def as_json(self):
        out = {"error": type(self).__name__, "message": str(self)}
        out.update(self.info)
        return out


class InvalidHypergraph(PastingError):
    pass


class DanglingBorder(InvalidHypergraph):
    pass


class DimensionMismatch(InvalidHypergraph):
    pass


class DuplicateId(InvalidHypergraph):
    pass


class DimensionUnderflow(PastingError):
    pass


class DimensionZero(PastingError):
    pass


class PreconditionFailed(PastingError):
    pass


class NotComposable(PastingError):
    pass


class NotACell(PastingError):
    pass


class NotGlueable(PastingError):
    pass


class IsAtom(PastingError):
    pass


class AxiomViolation(PastingError):
    pass


class CapExceeded(PastingError):
    pass


class IllTyped(PastingError):
    pass


class NotWhiskeringShape(PastingError):
    pass


class CyclicOrder(PastingError):
    pass


class UnknownFixture(PastingError):
    pass
