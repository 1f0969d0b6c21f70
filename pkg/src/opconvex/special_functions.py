"""Evaluation of the divergence generator families and their representing densities.

Two one-parameter families are supported:

* ``f(x) = (x**a - a*(x-1) - 1) / (a*(a-1))`` for order ``a`` in [-1, 2],
  a nonnegative convex function vanishing to second order at x = 1, with
  logarithmic limits at a = 0 and a = 1;
* ``h(x) = (x**a - 1) / (a*(1-a))`` for order ``a`` in (-1, 1), monotone
  increasing, equal to ``log x`` at a = 0.

Both admit integral representations against beta-type densities
``c * t**p * (1-t)**q`` on [0, 1]; ``density_params`` returns the exponents
and the normalization constant.  Evaluation near x = 1 switches to a
truncated binomial series of ``f(x)/(x-1)**2`` to avoid cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from .errors import DomainError, PointMassMeasure

__all__ = [
    "Family",
    "DivergenceSpec",
    "RepresentingDensity",
    "eval_f_alpha",
    "eval_f_alpha_normalized",
    "eval_h_alpha",
    "density_params",
    "scale_constant",
]

SERIES_RADIUS = 0.25
SERIES_TERMS = 24


class Family(Enum):
    F_ALPHA = "f"
    H_ALPHA = "h"


@dataclass(frozen=True)
class DivergenceSpec:
    """A member of one of the two families, identified by its order alpha."""

    alpha: float
    family: Family = Family.F_ALPHA

    def __post_init__(self):
        a = self.alpha
        if not math.isfinite(a):
            raise DomainError(f"alpha must be finite, got {a}")
        if self.family is Family.F_ALPHA and not (-1.0 <= a <= 2.0):
            raise DomainError(f"f-family requires alpha in [-1, 2], got {a}")
        if self.family is Family.H_ALPHA and not (-1.0 < a < 1.0):
            raise DomainError(f"h-family requires alpha in (-1, 1), got {a}")


@dataclass(frozen=True)
class RepresentingDensity:
    """Beta-type density ``normalization * t**exponent_at_zero * (1-t)**exponent_at_one``."""

    exponent_at_zero: float
    exponent_at_one: float
    normalization: float

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return (self.normalization * np.power(t, self.exponent_at_zero)
                * np.power(1.0 - t, self.exponent_at_one))


def scale_constant(alpha: float) -> float:
    """Normalization Z(a) = a*(a-1)*pi / sin((a-1)*pi), with Z -> 1 as a -> 0 or 1.

    The representing density of the f-family is t**(1-a) * (1-t)**a / Z(a);
    this is the constant consistent with the integral reconstruction of f
    (checked numerically in the test suite).
    """
    if alpha in (0.0, 1.0):
        return 1.0
    return alpha * (alpha - 1.0) * math.pi / math.sin((alpha - 1.0) * math.pi)


@lru_cache(maxsize=256)
def _series_coefficients(alpha: float) -> np.ndarray:
    """Taylor coefficients of f(x)/(x-1)**2 about x = 1, SERIES_TERMS of them."""
    c = np.empty(SERIES_TERMS)
    if alpha == 1.0:
        for j in range(SERIES_TERMS):
            c[j] = (-1.0) ** j / ((j + 2.0) * (j + 1.0))
    elif alpha == 0.0:
        for j in range(SERIES_TERMS):
            c[j] = (-1.0) ** j / (j + 2.0)
    else:
        c[0] = 0.5
        for j in range(SERIES_TERMS - 1):
            c[j + 1] = c[j] * (alpha - (j + 2.0)) / (j + 3.0)
    return c


def _check_x(x: np.ndarray):
    if np.any(~(x > 0.0)):
        raise DomainError("x must be strictly positive")


def _f_normalized_array(alpha: float, x: np.ndarray) -> np.ndarray:
    s = x - 1.0
    out = np.empty_like(x)
    near = np.abs(s) < SERIES_RADIUS
    if near.any():
        c = _series_coefficients(alpha)
        sn = s[near]
        acc = np.full_like(sn, c[-1])
        for j in range(SERIES_TERMS - 2, -1, -1):
            acc = acc * sn + c[j]
        out[near] = acc
    far = ~near
    if far.any():
        xf = x[far]
        sf = s[far]
        if alpha == 1.0:
            val = xf * np.log(xf) - xf + 1.0
        elif alpha == 0.0:
            val = xf - 1.0 - np.log(xf)
        elif alpha == 2.0:
            val = 0.5 * sf * sf
        elif alpha == -1.0:
            val = sf * sf / (2.0 * xf)
        else:
            val = (np.power(xf, alpha) - alpha * sf - 1.0) / (alpha * (alpha - 1.0))
        out[far] = val / (sf * sf)
    return out


def _dispatch(spec_or_alpha, family: Family):
    if isinstance(spec_or_alpha, DivergenceSpec):
        if spec_or_alpha.family is not family:
            raise DomainError(f"expected a {family.value}-family spec")
        return spec_or_alpha.alpha
    return DivergenceSpec(float(spec_or_alpha), family).alpha


def eval_f_alpha_normalized(spec, x):
    """f(x)/(x-1)**2, with the removable singularity at x = 1 filled by series.

    The value at x = 1 is exactly 1/2.  Accepts a scalar or an ndarray.
    """
    alpha = _dispatch(spec, Family.F_ALPHA)
    arr = np.asarray(x, dtype=float)
    _check_x(arr)
    out = _f_normalized_array(alpha, np.atleast_1d(arr))
    return out.reshape(arr.shape) if arr.shape else float(out[0])


def eval_f_alpha(spec, x):
    """The convex generator f(x); nonnegative, f(1) = 0 exactly."""
    alpha = _dispatch(spec, Family.F_ALPHA)
    arr = np.asarray(x, dtype=float)
    _check_x(arr)
    a1 = np.atleast_1d(arr)
    s = a1 - 1.0
    out = _f_normalized_array(alpha, a1) * s * s
    return out.reshape(arr.shape) if arr.shape else float(out[0])


def eval_h_alpha(spec, x):
    """The monotone function h(x); h(1) = 0, equal to log x at order 0.

    Uses expm1/log1p so the relative accuracy is uniform near x = 1.
    """
    alpha = _dispatch(spec, Family.H_ALPHA)
    arr = np.asarray(x, dtype=float)
    _check_x(arr)
    a1 = np.atleast_1d(arr)
    lx = np.log1p(a1 - 1.0)
    if alpha == 0.0:
        out = lx
    else:
        out = np.expm1(alpha * lx) / (alpha * (1.0 - alpha))
    return out.reshape(arr.shape) if arr.shape else float(out[0])


def eval_h_alpha_normalized(spec, x):
    """h(x)/(x-1) with the removable singularity at x = 1 filled (value h'(1))."""
    alpha = _dispatch(spec, Family.H_ALPHA)
    arr = np.asarray(x, dtype=float)
    _check_x(arr)
    a1 = np.atleast_1d(arr)
    s = a1 - 1.0
    lx = np.log1p(s)
    tiny = np.abs(s) < 1e-8
    if alpha == 0.0:
        with np.errstate(invalid="ignore", divide="ignore"):
            out = np.where(tiny, 1.0 - s / 2.0, lx / s)
    else:
        with np.errstate(invalid="ignore", divide="ignore"):
            out = np.where(tiny, (1.0 + (alpha - 1.0) * s / 2.0) / (1.0 - alpha),
                           np.expm1(alpha * lx) / (alpha * (1.0 - alpha) * s))
    return out.reshape(arr.shape) if arr.shape else float(out[0])


def density_params(spec) -> RepresentingDensity:
    """Exponents and normalization of the representing beta-type density.

    For the f-family the orders -1 and 2 have purely atomic measures
    (mass 1/2 at t = 1 and t = 0 respectively); a ``PointMassMeasure``
    carrying those atoms is raised so callers can special-case them.
    """
    if not isinstance(spec, DivergenceSpec):
        raise DomainError("density_params expects a DivergenceSpec")
    a = spec.alpha
    if spec.family is Family.F_ALPHA:
        if a == 2.0:
            raise PointMassMeasure("order 2: measure is (1/2) * delta_0", [(0.0, 0.5)])
        if a == -1.0:
            raise PointMassMeasure("order -1: measure is (1/2) * delta_1", [(1.0, 0.5)])
        return RepresentingDensity(1.0 - a, a, 1.0 / scale_constant(a))
    if a == 0.0:
        return RepresentingDensity(0.0, 0.0, 1.0)
    return RepresentingDensity(-a, a, math.sin(a * math.pi) / (a * (1.0 - a) * math.pi))
