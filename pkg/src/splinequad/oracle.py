"""Independent ground truth: random splines, reference integration, remainders.

Nothing here touches the rule-construction recursion; exactness tests
compare two fully independent computation paths.  Reference integration is
composite Gauss-Legendre per knot interval, which with p points per piece
is exact for piecewise polynomials of degree 2p - 1 (so p = 2 already
covers the spline space).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .basis import SplineFunction
from .knots import KnotSequence
from .rule import QuadratureRule, apply

# 64-bit linear congruential generator (Knuth's MMIX constants), fixed so
# seeded draws reproduce across implementations.
_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_LCG_MASK = (1 << 64) - 1

DEFAULT_PER_PIECE_POINTS = 5


def _lcg_uniforms(seed: int, count: int) -> list[float]:
    """count uniforms in [-1, 1) from the seeded 64-bit LCG."""
    state = seed & _LCG_MASK
    out = []
    for _ in range(count):
        state = (_LCG_MULT * state + _LCG_INC) & _LCG_MASK
        out.append(2.0 * ((state >> 11) * 2.0 ** -53) - 1.0)
    return out


def random_spline(knots: KnotSequence, seed: int) -> SplineFunction:
    """Spline with coefficients drawn uniformly from [-1, 1), deterministic per seed."""
    dim = 2 * knots.n + 2
    return SplineFunction(knots=knots, coeffs=tuple(_lcg_uniforms(seed, dim)))


@dataclass(frozen=True)
class ReferenceIntegral:
    value: float
    method: str


def reference_integral(f: Callable[[float], float], knots: KnotSequence,
                       per_piece_points: int = DEFAULT_PER_PIECE_POINTS) -> ReferenceIntegral:
    """Composite Gauss-Legendre over the knot intervals."""
    if per_piece_points < 2:
        raise ValueError("need at least 2 points per piece")
    xs, ws = np.polynomial.legendre.leggauss(per_piece_points)
    total = 0.0
    for lo, hi in zip(knots.knots[:-1], knots.knots[1:]):
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        total += half * sum(w * f(mid + half * x) for x, w in zip(xs, ws))
    return ReferenceIntegral(value=total, method="piecewise_gauss")


def remainder(f: Callable[[float], float], rule: QuadratureRule,
              per_piece_points: int = DEFAULT_PER_PIECE_POINTS) -> float:
    """Brute-force remainder: reference integral minus the rule's value."""
    ref = reference_integral(f, rule.knots, per_piece_points)
    return ref.value - apply(rule, f)
