"""Exception hierarchy shared by every module.

Each class carries an ``exit_code`` so the CLI can map failures onto its
documented return codes without a lookup table.
"""


class QESError(Exception):
    """Base class for all engine errors."""

    exit_code = 2


class InvalidInputError(QESError, ValueError):
    """Malformed or out-of-range input (non-finite roots, bad parameters)."""

    exit_code = 2


class NotQESError(QESError):
    """The operator does not preserve the polynomial space of degree n."""

    exit_code = 2


class DegenerateSpectrumError(QESError):
    """Eigenvectors of the algebraized operator are ill-conditioned."""

    exit_code = 3


class DegreeDropError(QESError):
    """An eigenvector cannot be normalized to a monic polynomial of degree n."""

    exit_code = 3


class PoleError(QESError):
    """Evaluation point coincides with a root or other singular location.

    Attributes
    ----------
    index : int or None
        Index of the offending root when known.
    location : complex or None
        The singular location.
    """

    exit_code = 1

    def __init__(self, message, index=None, location=None):
        super().__init__(message)
        self.index = index
        self.location = location


class SingularWeightError(PoleError):
    """P4 vanishes at a Bethe root."""


class CollisionError(QESError):
    """Two Bethe roots merged during refinement."""

    exit_code = 3


class BranchError(QESError):
    """A square root of a negative P4 was requested in real mode."""

    exit_code = 1


class DomainError(QESError):
    """Point outside the physical domain of the case."""

    exit_code = 2


class AlgebraicOnlyError(QESError):
    """x-space quantity requested for a case supported only in z."""

    exit_code = 2
