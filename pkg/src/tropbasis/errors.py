"""Exception hierarchy. Every domain error carries a stable ``code`` for CLI reports."""


class TropError(Exception):
    code = "error"

    def __init__(self, message="", **details):
        super().__init__(message or self.code)
        self.details = details

    def to_dict(self):
        return {"code": self.code, "message": str(self), "details": self.details}


class ComparabilityViolation(TropError):
    code = "comparability_violation"


class EliminationViolation(TropError):
    code = "elimination_violation"


class GroundSetTooLarge(TropError):
    code = "ground_set_too_large"


class IntersectionNotSingleton(TropError):
    code = "intersection_not_singleton"


class NotSubfamily(TropError):
    code = "not_subfamily"


class SearchBudgetExceeded(TropError):
    code = "search_budget_exceeded"


class GraphError(TropError):
    code = "invalid_graph"


class NotThreeEdgeConnected(TropError):
    code = "not_three_edge_connected"


class NotABond(TropError):
    code = "not_a_bond"


class DimensionMismatch(TropError):
    code = "dimension_mismatch"


class NotSquare(TropError):
    code = "not_square"


class SizeBudgetExceeded(TropError):
    code = "size_budget_exceeded"


class PluckerCoordinateZero(TropError):
    code = "plucker_coordinate_zero"


class DivisionByZeroSeries(TropError, ZeroDivisionError):
    code = "division_by_zero_series"


class PrecisionExhausted(TropError):
    code = "precision_exhausted"


class TooManyMinors(TropError):
    code = "too_many_minors"


class NotExcluded(TropError):
    code = "not_excluded"


class NotInSpace(TropError):
    code = "not_in_space"
