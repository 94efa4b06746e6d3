"""Explicit recursion for the (n+1)-node Gaussian rule on C1 cubic splines.

The first node and weight are closed-form (theta_1 = 3 h_1 / 4,
omega_1 = 16 h_1 / 27).  Interior nodes follow from a two-term recurrence
driven by the partial exactness residuals A_k, B_k; the midpoint closes
even interval counts, and a cubic equation in the middle interval closes
odd ones.  The right half is produced by exact reflection.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .basis import coefficients
from .knots import KnotSequence, validate


class DomainTooSmall(ValueError):
    """Too few intervals for the recursion (n < 2)."""


class RecursionBreakdown(RuntimeError):
    """Recurrence produced an out-of-range offset or singular denominator."""


class NoRootInInterval(RecursionBreakdown):
    """Middle-interval cubic has no real root inside (0, h_m)."""


@dataclass(frozen=True)
class RecursionState:
    """Running quantities after node k: offsets and exactness residuals.

    rho = theta + h_{k+1} always; A and B use the coefficient table at
    index k + 1.
    """

    k: int
    theta: float
    rho: float
    A: float
    B: float


@dataclass(frozen=True)
class QuadratureRule:
    """Ordered nodes and positive weights, exact on the spline space."""

    knots: KnotSequence
    nodes: tuple[float, ...]
    weights: tuple[float, ...]

    @property
    def a(self) -> float:
        return self.knots.a

    @property
    def b(self) -> float:
        return self.knots.b

    @property
    def parity(self) -> str:
        """Parity of the interval count n = len(nodes) - 1."""
        return "even" if (len(self.nodes) - 1) % 2 == 0 else "odd"

    def to_json(self) -> str:
        fmt = lambda v: float(f"{v:.17g}")
        return json.dumps({
            "knots": [fmt(x) for x in self.knots.knots],
            "nodes": [fmt(t) for t in self.nodes],
            "weights": [fmt(w) for w in self.weights],
        })

    def to_csv(self) -> str:
        lines = ["i,tau,omega"]
        for i, (t, w) in enumerate(zip(self.nodes, self.weights), start=1):
            lines.append(f"{i},{t:.17g},{w:.17g}")
        return "\n".join(lines) + "\n"


def _state_from(ks: KnotSequence, k: int, tau: float, omega: float) -> RecursionState:
    """Residuals A_k, B_k recomputed fresh from their defining expressions."""
    cf = coefficients(ks, k + 1)
    theta = ks.knot(k) - tau
    rho = ks.knot(k + 1) - tau
    A = 0.25 - omega * (cf.a * rho ** 3 + cf.b * theta ** 3 + cf.c * theta * theta)
    B = 0.25 - omega * (cf.alpha * rho ** 3 + cf.beta * rho * rho
                        + cf.gamma * theta ** 3 + cf.eta * theta * theta)
    return RecursionState(k=k, theta=theta, rho=rho, A=A, B=B)


def first_node(ks: KnotSequence) -> tuple[RecursionState, float, float]:
    """Closed-form first node: tau_1 = x_1 - 3 h_1 / 4, omega_1 = 16 h_1 / 27."""
    if ks.n < 2:
        raise DomainTooSmall("recursion needs n >= 2; use classical_two_point for n = 1")
    h1 = ks.h(1)
    theta = 0.75 * h1
    tau = ks.knot(1) - theta
    omega = (16.0 / 27.0) * h1
    return _state_from(ks, 1, tau, omega), tau, omega


def step(state: RecursionState, ks: KnotSequence) -> tuple[RecursionState, float, float]:
    """Advance one interval: node i+1 from the residuals after node i."""
    i = state.k
    cf = coefficients(ks, i + 1)
    denom = cf.a * state.B - cf.alpha * state.A
    if denom == 0.0:
        raise RecursionBreakdown(f"singular recurrence denominator at step {i}")
    theta = state.A * cf.beta / denom
    h_next = ks.h(i + 1)
    if not 0.0 < theta < h_next * (1.0 + 1e-12):
        raise RecursionBreakdown(
            f"offset {theta} outside (0, {h_next}) at step {i}; "
            "knot sequence is not stretched")
    # Deep near-uniform recursions drive theta toward h faster than doubles
    # resolve; an ulp of overshoot would drop the node below its interval.
    theta = min(theta, h_next)
    omega = state.A / (cf.a * theta ** 3)
    tau = ks.knot(i + 1) - theta
    return _state_from(ks, i + 1, tau, omega), tau, omega


def close_even(state: RecursionState, ks: KnotSequence) -> tuple[float, float]:
    """Middle node for n = 2m: tau = (a+b)/2 with weight from the residuals."""
    m = ks.n // 2
    if ks.n % 2 != 0 or state.k != m:
        raise RecursionBreakdown(f"even closure expects state k = {m} on even n")
    cf = coefficients(ks, m + 1)
    theta = ks.h(m + 1)
    omega = (state.A + state.B - 0.25) / (cf.a * theta ** 3)
    if omega <= 0.0:
        raise RecursionBreakdown("nonpositive middle weight")
    return ks.knot(m), omega


def _horner(c: tuple[float, float, float, float], t: float) -> float:
    return ((c[0] * t + c[1]) * t + c[2]) * t + c[3]


def _bracketed_roots(c, lo: float, hi: float) -> list[float]:
    """All real roots of the cubic c in (lo, hi) by grid scan + safeguarded Newton.

    64-interval scan isolates sign changes; each bracket is refined by a
    bisection-Newton hybrid.  Closed-form solvers cancel badly for
    near-degenerate coefficients, so they are avoided.
    """
    scale = max(abs(v) for v in c)
    ftol = 1e-14 * scale
    wtol = 1e-15 * (hi - lo)
    grid = [lo + (hi - lo) * i / 64.0 for i in range(65)]
    vals = [_horner(c, t) for t in grid]
    dc = (3.0 * c[0], 2.0 * c[1], c[2])
    roots = []
    for i in range(64):
        f0, f1 = vals[i], vals[i + 1]
        if f0 == 0.0 and lo < grid[i] < hi:
            roots.append(grid[i])
            continue
        if f0 * f1 > 0.0:
            continue
        x0, x1 = grid[i], grid[i + 1]
        g0 = f0
        x = 0.5 * (x0 + x1)
        for _ in range(200):
            f = _horner(c, x)
            if abs(f) <= ftol or (x1 - x0) <= wtol:
                break
            if g0 * f < 0.0:
                x1 = x
            else:
                x0 = x
                g0 = f
            d = (dc[0] * x + dc[1]) * x + dc[2]
            xn = x - f / d if d != 0.0 else x
            x = xn if x0 < xn < x1 else 0.5 * (x0 + x1)
        roots.append(x)
    return sorted(roots)


def close_odd(state: RecursionState, ks: KnotSequence) -> tuple[float, float]:
    """Left middle node for n = 2m-1 from the middle-interval cubic.

    With rho = theta + h_{m+1} substituted, the closing condition is a
    univariate cubic in theta; the largest root in (0, h_m) is selected.
    """
    n = ks.n
    if n % 2 != 1 or n < 3:
        raise RecursionBreakdown("odd closure requires odd n >= 3")
    m = (n + 1) // 2
    if state.k != m - 1:
        raise RecursionBreakdown(f"odd closure expects state k = {m - 1}")
    A, B = state.A, state.B
    cm = coefficients(ks, m)
    cp = coefficients(ks, m + 1)
    hm = ks.h(m)
    H = ks.h(m + 1)
    # cubic in theta, with the rho-terms expanded about rho = theta + H
    k3 = A * cp.a - B * cp.alpha
    k2 = B * cp.beta
    c3 = A * (cm.alpha + cp.b) - B * (cm.a + cp.gamma) + k3
    c2 = A * (cm.beta + cp.c) - B * cp.eta + 3.0 * k3 * H - k2
    c1 = 3.0 * k3 * H * H - 2.0 * k2 * H
    c0 = k3 * H ** 3 - k2 * H * H
    coeffs = (c3, c2, c1, c0)
    roots = [r for r in _bracketed_roots(coeffs, 0.0, hm) if 0.0 < r < hm]
    if roots:
        theta = roots[-1]
    else:
        # For uniform-like sequences the middle node approaches the knot
        # x_{m-1} faster than doubles can resolve: the leading coefficient
        # cancels and the residual constant term sits below rounding noise,
        # so the polynomial shows no representable sign change.  Accept the
        # boundary root when the polynomial vanishes there at noise level,
        # nudged one ulp into the open interval.
        scale = max(abs(c3) * hm ** 3, abs(c2) * hm * hm, abs(c1) * hm, abs(c0))
        if abs(_horner(coeffs, hm)) > 1e-9 * scale:
            raise NoRootInInterval(f"no cubic root in (0, {hm}) for odd closure")
        theta = ks.knot(m) - math.nextafter(ks.knot(m - 1), ks.knot(m))
    rho = theta + H
    denom = ((cp.gamma + cm.a) * theta ** 3 + cp.eta * theta * theta
             + cp.alpha * rho ** 3 + cp.beta * rho * rho)
    omega = A / denom
    if omega <= 0.0:
        raise RecursionBreakdown("nonpositive middle weight in odd closure")
    return ks.knot(m) - theta, omega


def classical_two_point(a: float, b: float) -> QuadratureRule:
    """Two-point Gauss-Legendre rule; the n = 1 space is plain cubics."""
    if not a < b:
        raise ValueError(f"empty domain [{a}, {b}]")
    mid = 0.5 * (a + b)
    off = (b - a) / (2.0 * 3.0 ** 0.5)
    w = 0.5 * (b - a)
    ks = validate([a, b], a, b)
    return QuadratureRule(knots=ks, nodes=(mid - off, mid + off), weights=(w, w))


def compute_rule(ks: KnotSequence) -> QuadratureRule:
    """Assemble the full (n+1)-node rule: recursion, closure, reflection."""
    n = ks.n
    if n < 1:
        raise DomainTooSmall("need at least one interval")
    if n == 1:
        return classical_two_point(ks.a, ks.b)
    taus: list[float] = []
    ws: list[float] = []
    state, tau, w = first_node(ks)
    taus.append(tau)
    ws.append(w)
    for _ in range(n // 2 - 1):
        state, tau, w = step(state, ks)
        taus.append(tau)
        ws.append(w)
    ab = ks.a + ks.b
    if n % 2 == 0:
        tau, w = close_even(state, ks)
        taus.append(tau)
        ws.append(w)
        mirror = range(len(taus) - 2, -1, -1)
    else:
        tau, w = close_odd(state, ks)
        taus.append(tau)
        ws.append(w)
        mirror = range(len(taus) - 1, -1, -1)
    for i in mirror:
        taus.append(ab - taus[i])
        ws.append(ws[i])
    if len(taus) != n + 1:
        raise RecursionBreakdown(f"assembled {len(taus)} nodes, expected {n + 1}")
    for i in range(n):
        if not taus[i] < taus[i + 1]:
            raise RecursionBreakdown(f"nodes out of order at {i}")
    if min(ws) <= 0.0:
        raise RecursionBreakdown("nonpositive weight")
    return QuadratureRule(knots=ks, nodes=tuple(taus), weights=tuple(ws))


def apply(rule: QuadratureRule, f: Callable[[float], float]) -> float:
    """Sum of weights times integrand values at the nodes."""
    return sum(w * f(t) for t, w in zip(rule.nodes, rule.weights))


def node_location_report(rule: QuadratureRule) -> dict:
    """Per-interval node counts against the structural placement law.

    Even n: one node strictly inside each interval plus the midpoint node.
    Odd n: one node per interval except two in the middle interval.
    """
    ks = rule.knots
    n = ks.n
    counts = [0] * n
    midpoint_hits = 0
    mid = 0.5 * (ks.a + ks.b)
    for t in rule.nodes:
        if t == mid and n % 2 == 0:
            midpoint_hits += 1
            continue
        for k in range(1, n + 1):
            if ks.knot(k - 1) < t < ks.knot(k):
                counts[k - 1] += 1
                break
    if n % 2 == 0:
        ok = all(c == 1 for c in counts) and midpoint_hits == 1
    else:
        m = (n + 1) // 2
        ok = all(c == (2 if k == m else 1) for k, c in enumerate(counts, start=1))
    return {"counts": counts, "midpoint_node": midpoint_hits, "matches": ok}


def weight_monotonicity_report(rule: QuadratureRule) -> dict:
    """Observational only: whether weights increase toward the middle."""
    half = (len(rule.weights) + 1) // 2
    left = rule.weights[:half]
    increasing = all(left[i] < left[i + 1] for i in range(len(left) - 1))
    return {"left_half_weights": list(left), "increasing": increasing}
