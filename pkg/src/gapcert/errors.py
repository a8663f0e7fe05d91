"""Exception types raised across the library.

Every precondition failure derives from ValueError so callers (and the
command line driver) can distinguish bad inputs from genuine numerical
breakdown, which is signalled by RootCountMismatch.
"""


class ParseError(ValueError):
    """Malformed matrix or block-matrix text input."""


class NotFinite(ValueError):
    """Input contains NaN or infinite entries."""


class NotSymmetric(ValueError):
    """Matrix exceeds the symmetry tolerance."""


class NotPSD(ValueError):
    """Symmetric matrix has an eigenvalue below the semidefinite tolerance."""


class NotDefinite(ValueError):
    """Block that must be positive definite is singular or indefinite."""


class Singular(ValueError):
    """Matrix is singular to working precision."""


class BNotInvertible(Singular):
    """Off-diagonal block is not square, so it cannot be inverted."""


class UnboundedRelativeBound(ValueError):
    """Relative bound is infinite because the coupling block is rank deficient."""


class DimensionMismatch(ValueError):
    """Null spaces of the two diagonal blocks have different dimensions."""


class B22Singular(Singular):
    """Restriction of B between the null spaces of A and C is singular."""


class BothSemidefiniteSingular(ValueError):
    """Both blocks have smallest eigenvalue zero, so the radius vanishes."""


class NegativeDiscriminant(ValueError):
    """Closed-form quartic discriminant is negative; parameter set inconsistent."""


class DegenerateDirection(ValueError):
    """Rayleigh discriminant vanishes along the sampled direction."""


class NABViolated(ValueError):
    """Null spaces of A and B^T intersect nontrivially."""


class RankDeficient(ValueError):
    """Block lacks the full rank the estimate requires."""


class EtaOutOfRange(ValueError):
    """Relative perturbation size must lie in [0, 1)."""


class OutOfRegime(ValueError):
    """Parameter outside the regime where the estimate is defined."""


class RootCountMismatch(RuntimeError):
    """Secular root sweep did not locate the expected number of roots."""
