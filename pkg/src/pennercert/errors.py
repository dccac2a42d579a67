"""Exception hierarchy shared by all modules."""


class PennerCertError(Exception):
    """Base class for every error raised by this package."""


class ParseError(PennerCertError, ValueError):
    pass


class NonSquare(PennerCertError, ValueError):
    pass


class NegativeEntry(PennerCertError, ValueError):
    pass


class IndexOutOfRange(PennerCertError, IndexError):
    pass


class EmptySet(PennerCertError, ValueError):
    pass


class NotAComponent(PennerCertError, ValueError):
    pass


class NotIrreducible(PennerCertError, ValueError):
    pass


class NonPositiveWitness(PennerCertError, ValueError):
    pass


class Acyclic(PennerCertError, ValueError):
    """No strongly connected component carries a cycle; the spectral radius is 0."""


class GapNotReached(PennerCertError, RuntimeError):
    """Refinement hit its iteration cap before the requested gap.

    ``interval`` holds the best (still sound) enclosure found so far.
    """

    def __init__(self, message, interval=None, iterations=None):
        super().__init__(message)
        self.interval = interval
        self.iterations = iterations


class LeadingEigenvalueNotAboveOne(PennerCertError, ValueError):
    pass


class DimensionMismatch(PennerCertError, ValueError):
    pass


class NonPositiveChi(PennerCertError, ValueError):
    pass


class NonPositive(PennerCertError, ValueError):
    pass


class DimensionTooSmall(PennerCertError, ValueError):
    pass


class UnknownSymbol(PennerCertError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class EigenvectorMismatch(PennerCertError, ArithmeticError):
    pass
