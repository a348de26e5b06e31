"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class AppellF2Error(Exception):
    """Base class for all errors raised by :mod:`appellf2`."""


class PoleError(AppellF2Error, ArithmeticError):
    """A gamma function or Pochhammer symbol was evaluated at a pole."""


class LogarithmicCaseError(AppellF2Error, ArithmeticError):
    """Parameters hit a non-generic (logarithmic) configuration.

    The encoded formulas are only valid for generic parameters.  This is
    raised when a gamma coefficient or a series denominator becomes infinite.
    """


class DomainError(AppellF2Error, ValueError):
    """Input outside the domain of an operation."""


class SingularCurveError(DomainError):
    """Evaluation point lies on (or too close to) a singular curve."""


class NoValidSeriesError(DomainError):
    """No encoded representation converges at the requested point."""


class OutOfROCError(DomainError):
    """A representation was forced at a point outside its region of convergence."""


class StencilDomainError(DomainError):
    """A finite-difference stencil leaves the region where it can be evaluated."""


class UnknownIdError(AppellF2Error, KeyError):
    """Unknown representation identifier."""


class ZeroTermError(AppellF2Error, ArithmeticError):
    """Term ratio requested at a term that vanishes identically."""


class NonConvergenceError(AppellF2Error, ArithmeticError):
    """Partial sums did not reach the requested precision."""


class SeriesOverflowError(AppellF2Error, OverflowError):
    """Partial sums or terms exceeded the representable range."""
