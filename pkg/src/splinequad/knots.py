"""Symmetrically stretched knot sequences and the standard generating families.

A sequence x_0 < x_1 < ... < x_n on [a, b] qualifies when it is symmetric
about the midpoint and the interval lengths h_k = x_k - x_{k-1} are
non-decreasing toward the middle of the domain.  Two phantom knots are
attached outside [a, b] by reflection: x_{-1} = 2 x_0 - x_1 and
x_{n+1} = 2 x_n - x_{n-1}.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

# Relative tolerances (in units of b - a) for the symmetry and stretching
# checks.  Transcendental knot families (Chebyshev, Legendre roots) are
# symmetric analytically but not bit-exactly before symmetrization.
SYM_TOL = 1e-12
STRETCH_TOL = 1e-12

_NEWTON_MAX_ITER = 100
_NEWTON_RESIDUAL = 1e-14


class KnotError(ValueError):
    """A proposed knot sequence fails validation."""


class NotIncreasing(KnotError):
    """Knots are not strictly increasing."""


class NotSymmetric(KnotError):
    """Knots are not symmetric about the domain midpoint."""


class NotStretched(KnotError):
    """Interval lengths decrease toward the middle on the left half."""


class InvalidRatio(ValueError):
    """Geometric ratio q < 1 would violate the stretching condition."""


class ConvergenceFailure(RuntimeError):
    """Root iteration did not converge within the iteration cap."""


@dataclass(frozen=True)
class KnotSequence:
    """Validated symmetric stretched breakpoints on [a, b].

    Immutable after construction; generators and :func:`validate` are the
    only intended constructors.
    """

    a: float
    b: float
    knots: tuple[float, ...]

    @property
    def n(self) -> int:
        """Number of knot intervals."""
        return len(self.knots) - 1

    @property
    def extended_left(self) -> float:
        return 2.0 * self.knots[0] - self.knots[1]

    @property
    def extended_right(self) -> float:
        return 2.0 * self.knots[-1] - self.knots[-2]

    @property
    def intervals(self) -> tuple[float, ...]:
        """Interval lengths h_k = x_k - x_{k-1} for k = 1..n."""
        return tuple(self.knots[k] - self.knots[k - 1] for k in range(1, len(self.knots)))

    def knot(self, k: int) -> float:
        """Knot x_k for k = -1..n+1, phantom knots included."""
        if k == -1:
            return self.extended_left
        if k == self.n + 1:
            return self.extended_right
        if 0 <= k <= self.n:
            return self.knots[k]
        raise IndexError(f"knot index {k} outside -1..{self.n + 1}")

    def h(self, k: int) -> float:
        """Interval length x_k - x_{k-1} for k = 0..n+1.

        h_0 = h_1 and h_{n+1} = h_n by the phantom-knot reflection.
        """
        if not 0 <= k <= self.n + 1:
            raise IndexError(f"interval index {k} outside 0..{self.n + 1}")
        return self.knot(k) - self.knot(k - 1)

    def to_json(self) -> str:
        return json.dumps({"a": self.a, "b": self.b, "knots": list(self.knots)})

    @classmethod
    def from_json(cls, text: str) -> "KnotSequence":
        obj = json.loads(text)
        return validate(obj["knots"], obj["a"], obj["b"])


def validate(knots, a: float, b: float,
             sym_tol: float = SYM_TOL,
             stretch_tol: float = STRETCH_TOL) -> KnotSequence:
    """Check the stretched-sequence conditions and build a KnotSequence.

    Raises NotIncreasing, NotSymmetric or NotStretched naming the first
    offending index.
    """
    xs = [float(x) for x in knots]
    if len(xs) < 2:
        raise KnotError("need at least two knots")
    if not (a < b):
        raise KnotError(f"empty domain [{a}, {b}]")
    if xs[0] != a or xs[-1] != b:
        raise KnotError("first/last knot must equal the domain endpoints")
    n = len(xs) - 1
    width = b - a
    for k in range(n):
        if not xs[k] < xs[k + 1]:
            raise NotIncreasing(f"x_{k} = {xs[k]} >= x_{k + 1} = {xs[k + 1]}")
    for k in range(n + 1):
        defect = abs((xs[k] - a) - (b - xs[n - k]))
        if defect > sym_tol * width:
            raise NotSymmetric(
                f"knot {k} breaks symmetry: |(x_{k} - a) - (b - x_{n - k})| = {defect:.3e}")
    for k in range(n // 2):
        slack = xs[k] - 2.0 * xs[k + 1] + xs[k + 2]
        if slack < -stretch_tol * width:
            raise NotStretched(
                f"stretching fails at k = {k}: "
                f"h_{k + 2} - h_{k + 1} = {slack:.3e} < 0")
    return KnotSequence(a=a, b=b, knots=tuple(xs))


def _symmetrized(xs: list[float], a: float, b: float) -> list[float]:
    """Average mirrored knots so symmetry holds exactly in floating point."""
    n = len(xs) - 1
    out = list(xs)
    mid = 0.5 * (a + b)
    for k in range((n + 1) // 2):
        left = 0.5 * (xs[k] + (a + b - xs[n - k]))
        out[k] = left
        out[n - k] = a + b - left
    if n % 2 == 0:
        out[n // 2] = mid
    out[0], out[n] = a, b
    return out


def gen_uniform(n: int, a: float, b: float) -> KnotSequence:
    """n + 1 equally spaced knots on [a, b]."""
    if n < 1:
        raise KnotError(f"need n >= 1 intervals, got {n}")
    xs = [a + (b - a) * k / n for k in range(n + 1)]
    return validate(_symmetrized(xs, a, b), a, b)


def gen_geometric(N: int, q: float, a: float, b: float) -> KnotSequence:
    """N internal knots with interval lengths growing geometrically by q.

    Left-half lengths are h_1, q h_1, q^2 h_1, ... toward the midpoint and
    mirrored on the right.  For an odd interval count the middle interval
    continues the ratio once more (q^m h_1 for n = 2m + 1).
    """
    if N < 0:
        raise KnotError(f"need N >= 0 internal knots, got {N}")
    if q < 1.0:
        raise InvalidRatio(f"ratio q = {q} < 1 violates stretching")
    n = N + 1
    m, odd = divmod(n, 2)
    left = [q ** i for i in range(m)]
    lens = left + ([q ** m] if odd else []) + left[::-1]
    total = sum(lens)
    xs = [a]
    acc = 0.0
    for ln in lens:
        acc += ln
        xs.append(a + (b - a) * acc / total)
    xs[-1] = b
    return validate(_symmetrized(xs, a, b), a, b)


def gen_chebyshev(N: int, a: float, b: float) -> KnotSequence:
    """Internal knots at the N Chebyshev roots mapped from [-1, 1] to [a, b]."""
    if N < 1:
        raise KnotError(f"need N >= 1 internal knots, got {N}")
    roots = [-math.cos((2 * k - 1) * math.pi / (2 * N)) for k in range(1, N + 1)]
    xs = [a] + [a + (b - a) * 0.5 * (r + 1.0) for r in roots] + [b]
    return validate(_symmetrized(xs, a, b), a, b)


def _legendre_value_derivative(N: int, x: float) -> tuple[float, float]:
    """P_N(x) and P_N'(x) from the three-term recurrence."""
    p_prev, p = 1.0, x
    for k in range(2, N + 1):
        p_prev, p = p, ((2 * k - 1) * x * p - (k - 1) * p_prev) / k
    if N == 1:
        return x, 1.0
    dp = N * (x * p - p_prev) / (x * x - 1.0)
    return p, dp


def legendre_roots(N: int) -> list[float]:
    """Roots of the degree-N Legendre polynomial in (-1, 1), ascending.

    Safeguarded Newton iteration on the recurrence evaluation, started from
    the cosine asymptotic estimates; converged to |P_N| < 1e-14.
    """
    roots = []
    for k in range(1, N + 1):
        x = math.cos(math.pi * (4 * k - 1) / (4 * N + 2))
        for _ in range(_NEWTON_MAX_ITER):
            p, dp = _legendre_value_derivative(N, x)
            if abs(p) < _NEWTON_RESIDUAL:
                break
            step = p / dp
            x -= step
            x = min(1.0, max(-1.0, x))
        else:
            raise ConvergenceFailure(
                f"Legendre root {k}/{N} did not reach |P_N| < {_NEWTON_RESIDUAL}")
        roots.append(x)
    roots.sort()
    return roots


def gen_legendre(N: int, a: float, b: float) -> KnotSequence:
    """Internal knots at the N Legendre roots mapped from [-1, 1] to [a, b]."""
    if N < 1:
        raise KnotError(f"need N >= 1 internal knots, got {N}")
    roots = legendre_roots(N)
    xs = [a] + [a + (b - a) * 0.5 * (r + 1.0) for r in roots] + [b]
    return validate(_symmetrized(xs, a, b), a, b)
