"""Exception hierarchy for fell_lab. Everything raised on purpose derives from FellLabError."""


class FellLabError(Exception):
    """Base class for all library errors."""


class DomainError(FellLabError, ValueError):
    """A coordinate or base point lies outside the parameter domain of its chart."""


class CoverageError(FellLabError):
    """A sample point of X is not contained in any chart of a cover."""


class InvalidWedgeError(FellLabError):
    """A wedge point has a non-singleton orbit or sits on a branch class."""


class BranchLookupError(FellLabError, LookupError):
    """The requested branch class is not part of the model."""


class ParameterError(FellLabError, ValueError):
    """A numeric parameter is outside its documented range."""


class MissingSampleError(FellLabError, KeyError):
    """A grid element was evaluated at a base point it has no value for."""


class IncompatibilityError(FellLabError):
    """Two elements (or an element and a builtin) live over different models."""


class RegionError(FellLabError):
    """A region is not a compact open subset of X."""


class NonHausdorffRegionError(RegionError):
    """A region meets a branch class in a way that makes it non-Hausdorff."""


class InvarianceError(FellLabError):
    """A sub-model is not invariant under the groupoid of its parent."""


class ValidationError(FellLabError, ValueError):
    """Malformed input data: shapes, incidence tables, invariant factors."""


class UnsupportedInputError(FellLabError):
    """Input that is well formed but outside what the solver supports (e.g. torsion)."""


class ScenarioError(FellLabError):
    """Unknown scenario name or invalid scenario parameters."""
