class Zeta8RankError(Exception):
    """Base class for input errors raised by this package."""


class DomainError(Zeta8RankError, ValueError):
    pass


class RangeError(Zeta8RankError, ValueError):
    pass


class NotSquarefree(Zeta8RankError, ValueError):
    def __init__(self, n: int, p: int):
        super().__init__(f"{n} is not squarefree ({p}^2 divides it)")
        self.n = n
        self.p = p


class CapacityError(Zeta8RankError):
    """A computation would exceed its configured enumeration bound."""


class FormulaInconsistency(Zeta8RankError, ArithmeticError):
    """A class number product formula produced a non-integer."""


class NotCovered(Zeta8RankError):
    """Inputs fall outside the families where a closed formula is proved."""


class TheoremCheckError(Zeta8RankError, AssertionError):
    """The closed-form case analysis disagrees with the symbol-matrix computation."""
