"""Non-normalized C1 cubic B-spline basis D_1..D_{2n+2} and spline functions.

Each pair D_{2k-1}, D_{2k} (k = 1..n+1) is supported on [x_{k-2}, x_k] and
is evaluated through explicit per-interval coefficients in powers of the
truncated functions (x_k - t)_+ and (x_{k-1} - t)_+.  Interior basis
functions integrate to 1/4; with the phantom-knot reflection the boundary
integrals are 1/16 and 3/16.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

import numpy as np

from .knots import KnotSequence


class IndexOutOfRange(IndexError):
    """Basis or coefficient index outside its valid range."""


@dataclass(frozen=True)
class BasisCoefficients:
    """Coefficients of the basis pair D_{2k-1}, D_{2k} at index k.

    a, b, c multiply the odd member; alpha, beta, gamma, eta the even one.
    All are quotients of powers of h_{k-1}, h_k and reproduce bit-for-bit
    from the knot sequence.
    """

    a: float
    b: float
    c: float
    alpha: float
    beta: float
    gamma: float
    eta: float


def coefficients(ks: KnotSequence, k: int) -> BasisCoefficients:
    """Coefficient table for basis pair index k = 1..n+1."""
    if not 1 <= k <= ks.n + 1:
        raise IndexOutOfRange(f"coefficient index {k} outside 1..{ks.n + 1}")
    hp = ks.h(k - 1)
    hk = ks.h(k)
    s = hk + hp
    return BasisCoefficients(
        a=1.0 / (hk * hk * s * s),
        b=(2.0 * hk - hp) / (hp ** 3 * hk * hk),
        c=-3.0 / (hp * hp * hk),
        alpha=(-3.0 * hk - 2.0 * hp) / (s * s * hk ** 3),
        beta=3.0 / (s * hk * hk),
        gamma=(2.0 * hp - hk) / (hp * hp * hk ** 3),
        eta=3.0 / (hp * hk * hk),
    )


def eval_D(ks: KnotSequence, j: int, t):
    """Value of D_j at t (scalar or array), zero outside [x_{k-2}, x_k].

    Truncated powers are clamped before cubing, with right-continuity at
    breakpoints; the basis is C1 so the one-sided choice is unobservable.
    """
    if not 1 <= j <= 2 * ks.n + 2:
        raise IndexOutOfRange(f"basis index {j} outside 1..{2 * ks.n + 2}")
    k = (j + 1) // 2
    cf = coefficients(ks, k)
    xk = ks.knot(k)
    xkm1 = ks.knot(k - 1)
    left = ks.knot(k - 2)
    t_arr = np.asarray(t, dtype=float)
    u = np.maximum(xk - t_arr, 0.0)
    v = np.maximum(xkm1 - t_arr, 0.0)
    if j % 2 == 1:
        val = cf.a * u ** 3 + cf.b * v ** 3 + cf.c * v * v
    else:
        val = cf.alpha * u ** 3 + cf.beta * u * u + cf.gamma * v ** 3 + cf.eta * v * v
    val = np.where(t_arr < left, 0.0, val)
    return float(val) if np.isscalar(t) or t_arr.ndim == 0 else val


def integral_D(ks: KnotSequence, j: int) -> float:
    """Exact integral of D_j over [a, b]: 1/16, 3/16 or 1/4."""
    top = 2 * ks.n + 2
    if not 1 <= j <= top:
        raise IndexOutOfRange(f"basis index {j} outside 1..{top}")
    if j in (1, top):
        return 1.0 / 16.0
    if j in (2, top - 1):
        return 3.0 / 16.0
    return 0.25


def bezier_difference_controls(ks: KnotSequence, k: int) -> tuple[float, float, float, float]:
    """Bernstein controls of D_{2k-1} - D_{2k} on [x_{k-2}, x_{k-1}].

    The first two controls vanish identically; stretching makes the last
    one nonnegative, which forces strict positivity of the difference on
    the open interval.
    """
    if not 2 <= k <= ks.n + 1:
        raise IndexOutOfRange(f"control index {k} outside 2..{ks.n + 1}")
    x0 = ks.knot(k - 2)
    x1 = ks.knot(k - 1)
    x2 = ks.knot(k)
    w = x2 - x0
    return (0.0, 0.0, 1.0 / w, (x2 - 2.0 * x1 + x0) / (w * w))


@dataclass(frozen=True)
class SplineFunction:
    """Member of the C1 cubic spline space as coordinates over D_1..D_{2n+2}."""

    knots: KnotSequence
    coeffs: tuple[float, ...]

    def __post_init__(self):
        dim = 2 * self.knots.n + 2
        if len(self.coeffs) != dim:
            raise ValueError(f"need {dim} coefficients, got {len(self.coeffs)}")

    def __call__(self, t: float) -> float:
        return eval_spline(self, t)

    def to_json(self) -> str:
        import json
        return json.dumps({
            "knots": {"a": self.knots.a, "b": self.knots.b,
                      "knots": list(self.knots.knots)},
            "coeffs": list(self.coeffs),
        })


def eval_spline(s: SplineFunction, t: float) -> float:
    """Evaluate the spline at scalar t via its four locally supported basis functions."""
    ks = s.knots
    # interval index k with t in [x_{k-1}, x_k)
    k = bisect_right(ks.knots, t)
    k = min(max(k, 1), ks.n)
    total = 0.0
    for j in range(2 * k - 1, 2 * k + 3):
        c = s.coeffs[j - 1]
        if c != 0.0:
            total += c * eval_D(ks, j, t)
    return total


def exact_integral(s: SplineFunction) -> float:
    """Integral over [a, b] by linearity over the closed-form basis integrals."""
    return sum(c * integral_D(s.knots, j)
               for j, c in enumerate(s.coeffs, start=1))
