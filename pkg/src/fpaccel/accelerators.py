"""Accelerated fixed point steps built from two chained Newton maps.

Let u be a self-map with fixed point x* where u'(x*) = 1 (a neutral
point; plain iteration crawls).  The Newton map of the residual x - u(x),

    v(x) = x + (u(x) - x) / (1 - u'(x)),

moves the slope at x* from 1 to 1 - 1/m when u(x) - x has a zero of
order m there, so v iterates converge linearly.  Applying the same
construction once more to v gives a step whose slope at x* vanishes:

    w(x) = (v(x) - x v'(x)) / (1 - v'(x)),

and w iterates converge superlinearly from the first application.  The
slope v'(x) has the closed form u''(x) (u(x) - x) / (1 - u'(x))^2, so a
second-order jet of u at x is all that is needed.

Each step function returns a :class:`StepOutcome` instead of raising:
the input already being a fixed point (within ``tol``), a vanishing
denominator and a non-finite evaluation are reported as statuses.  The
converged check always runs first; at an exact fixed point the
denominators are 0/0 and some maps have non-finite second derivatives
there, so the order of the guards is load-bearing.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .jets import Jet2, Scalar, is_finite

DEFAULT_TOL = 1e-13
SINGULAR_EPS = 1e-12
QUAD_TOL = 1e-12

__all__ = [
    "DEFAULT_TOL",
    "SINGULAR_EPS",
    "QUAD_TOL",
    "QuadratureError",
    "StepOutcome",
    "StepStatus",
    "adaptive_simpson",
    "combined_map_value",
    "compose_step",
    "first_newton_step",
    "integral_step",
    "phi_step",
    "standard_step",
    "steffensen_step",
]


class StepStatus(str, Enum):
    OK = "ok"
    CONVERGED_AT_INPUT = "converged_at_input"
    SINGULAR = "singular"
    NONFINITE = "nonfinite"


@dataclass(frozen=True)
class StepOutcome:
    """Value of one accelerated step plus how the evaluation went.

    ``value`` is the proposed next iterate for status ``ok``, the input
    point for ``converged_at_input`` and ``singular``, and a non-finite
    scalar for ``nonfinite``.
    """

    value: Scalar
    status: StepStatus

    @property
    def ok(self) -> bool:
        return self.status is StepStatus.OK


StepFunction = Callable[[Scalar], StepOutcome]


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance."""


def _nan_like(x: Scalar) -> Scalar:
    nan = float("nan")
    return complex(nan, nan) if isinstance(x, complex) else nan


def _converged(x: Scalar, ux: Scalar, tol: float) -> bool:
    return abs(ux - x) <= tol * (1.0 + abs(x))


def _singular(den: Scalar, x: Scalar) -> bool:
    return abs(den) <= SINGULAR_EPS * (1.0 + abs(x))


# ---------- Newton-style steps ----------


def combined_map_value(u_val: Scalar, v_val: Scalar, v_slope: Scalar, x: Scalar) -> StepOutcome:
    """Combined step (v - u * v') / (1 - v') for two maps agreeing at the target.

    ``u_val`` and ``v_val`` are the two map values at ``x`` and
    ``v_slope`` the second map's derivative there.  Passing ``u_val = x``
    recovers the plain secant-through-identity form used by the standard
    and phi steps.
    """
    if not (is_finite(u_val) and is_finite(v_val) and is_finite(v_slope)):
        return StepOutcome(_nan_like(x), StepStatus.NONFINITE)
    den = 1.0 - v_slope
    if _singular(den, x):
        return StepOutcome(x, StepStatus.SINGULAR)
    val = (v_val - u_val * v_slope) / den
    if not is_finite(val):
        return StepOutcome(val, StepStatus.NONFINITE)
    return StepOutcome(val, StepStatus.OK)


def first_newton_step(
    x: Scalar, u_jet: Jet2, tol: float = DEFAULT_TOL
) -> tuple[StepOutcome, Scalar]:
    """One Newton step for the residual x - u(x), with the step map's slope.

    Returns ``(outcome, slope)`` where the value is
    v(x) = x + (u(x) - x)/(1 - u'(x)) and the slope is
    v'(x) = u''(x)(u(x) - x)/(1 - u'(x))^2.  Within ``tol`` of a fixed
    point the map is extended continuously: value x, slope 0.
    """
    u0, u1, u2 = u_jet.v0, u_jet.v1, u_jet.v2
    zero = x * 0
    if not is_finite(u0):
        return StepOutcome(u0, StepStatus.NONFINITE), zero
    if _converged(x, u0, tol):
        return StepOutcome(x, StepStatus.CONVERGED_AT_INPUT), zero
    if not (is_finite(u1) and is_finite(u2)):
        return StepOutcome(_nan_like(x), StepStatus.NONFINITE), zero
    den = 1.0 - u1
    if _singular(den, x):
        return StepOutcome(x, StepStatus.SINGULAR), zero
    diff = u0 - x
    val = x + diff / den
    slope = u2 * diff / (den * den)
    if not (is_finite(val) and is_finite(slope)):
        return StepOutcome(_nan_like(x), StepStatus.NONFINITE), zero
    return StepOutcome(val, StepStatus.OK), slope


def standard_step(x: Scalar, u_jet: Jet2, tol: float = DEFAULT_TOL) -> StepOutcome:
    """Both Newton layers in one call: the superlinear step w(x).

    Statuses from the inner step propagate unchanged.
    """
    out, slope = first_newton_step(x, u_jet, tol)
    if not out.ok:
        return out
    return combined_map_value(x, out.value, slope, x)


def phi_step(x: Scalar, u_jet: Jet2) -> StepOutcome:
    """Combined step through the slope-shifted map phi = u - u' + 1.

    phi has the same fixed point as u but its slope there is u' - u'',
    which is generally hyperbolic when u is neutral, so a single combined
    application already gives a fast step.
    """
    u0, u1, u2 = u_jet.v0, u_jet.v1, u_jet.v2
    if not (is_finite(u0) and is_finite(u1) and is_finite(u2)):
        return StepOutcome(_nan_like(x), StepStatus.NONFINITE)
    phi0 = u0 - u1 + 1.0
    phi1 = u1 - u2
    return combined_map_value(x, phi0, phi1, x)


def steffensen_step(x: Scalar, u, tol: float = DEFAULT_TOL) -> StepOutcome:
    """Derivative-free quadratic step from two map evaluations.

    x_next = x - (u(x) - x)^2 / (x - 2 u(x) + u(u(x))).  ``u`` is an
    IterationMap (anything with a ``value`` method works).  The converged
    branch fires before the denominator is formed; at an exact fixed
    point both vanish.
    """
    value_of = u.value if hasattr(u, "value") else u
    u1 = value_of(x)
    if not is_finite(u1):
        return StepOutcome(u1, StepStatus.NONFINITE)
    if _converged(x, u1, tol):
        return StepOutcome(x, StepStatus.CONVERGED_AT_INPUT)
    u2 = value_of(u1)
    if not is_finite(u2):
        return StepOutcome(u2, StepStatus.NONFINITE)
    den = x - 2.0 * u1 + u2
    if _singular(den, x):
        return StepOutcome(x, StepStatus.SINGULAR)
    diff = u1 - x
    val = x - diff * diff / den
    if not is_finite(val):
        return StepOutcome(val, StepStatus.NONFINITE)
    return StepOutcome(val, StepStatus.OK)


def compose_step(x: Scalar, step: StepFunction, k: int) -> StepOutcome:
    """Apply a step function k times, short-circuiting on any non-ok status."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    current = x
    out = StepOutcome(x, StepStatus.OK)
    for _ in range(k):
        out = step(current)
        if not out.ok:
            return out
        current = out.value
    return out


# ---------- adaptive quadrature and the integral step ----------


def adaptive_simpson(f, a: float, b: float, tol: float = QUAD_TOL) -> float:
    """Integral of f over [a, b] by adaptive Simpson with Richardson correction.

    Interval halving stops when the two-panel refinement agrees with the
    parent panel to 15*tol; the accepted value keeps the err/15
    extrapolation term.  Raises :class:`QuadratureError` when 48 levels
    of bisection are not enough.
    """
    if a == b:
        return 0.0
    sign = 1.0
    if b < a:
        a, b = b, a
        sign = -1.0
    m = 0.5 * (a + b)
    fa, fm, fb = f(a), f(m), f(b)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return sign * _simpson_branch(f, a, b, fa, fm, fb, whole, tol, 48, None)


def _simpson_branch(f, a, b, fa, fm, fb, whole, tol, depth, panels):
    m = 0.5 * (a + b)
    lm, rm = 0.5 * (a + m), 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    err = left + right - whole
    if abs(err) <= 15.0 * tol:
        if panels is not None:
            panels.append((a, m, left + err / 30.0))
            panels.append((m, b, right + err / 30.0))
        return left + right + err / 15.0
    if depth <= 0:
        raise QuadratureError(f"tolerance not reached on [{a:g}, {b:g}]")
    return _simpson_branch(
        f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, panels
    ) + _simpson_branch(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, panels)


class _Antiderivative:
    """Callable x -> integral of f from 0 to x, panel-cached over [lo, hi].

    The interval is decomposed once by the adaptive rule; point queries
    cost a bisection plus one small fresh integration over the partial
    panel.  Keeps nested antiderivatives (an antiderivative of an
    antiderivative) affordable.
    """

    __slots__ = ("f", "tol", "_starts", "_ends", "_cum", "_lo", "_hi", "_base")

    def __init__(self, f, lo: float, hi: float, tol: float = QUAD_TOL):
        lo = min(lo, 0.0)
        hi = max(hi, 0.0)
        self.f = f
        self.tol = tol
        panels: list[tuple[float, float, float]] = []
        if lo < hi:
            m = 0.5 * (lo + hi)
            fa, fm, fb = f(lo), f(m), f(hi)
            whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb)
            _simpson_branch(f, lo, hi, fa, fm, fb, whole, tol, 48, panels)
        self._lo = lo
        self._hi = hi
        self._starts = [p[0] for p in panels]
        self._ends = [p[1] for p in panels]
        cum = [0.0]
        for _, _, v in panels:
            cum.append(cum[-1] + v)
        self._cum = cum
        self._base = 0.0
        self._base = self._from_lo(0.0)

    def _from_lo(self, x: float) -> float:
        # integral of f from lo to x
        if not self._starts:
            return 0.0
        if x <= self._lo:
            return adaptive_simpson(self.f, self._lo, x, self.tol) if x < self._lo else 0.0
        if x >= self._hi:
            tail = adaptive_simpson(self.f, self._hi, x, self.tol) if x > self._hi else 0.0
            return self._cum[-1] + tail
        i = bisect.bisect_right(self._starts, x) - 1
        partial = adaptive_simpson(self.f, self._starts[i], x, self.tol)
        return self._cum[i] + partial

    def __call__(self, x: float) -> float:
        return self._from_lo(x) - self._base


def integral_step(x: Scalar, g, depth: int, tol: float = QUAD_TOL) -> StepOutcome:
    """Step through the depth-fold antiderivative of a map pinned at 0.

    With h_0 = g and h_j(x) = integral of h_{j-1} from 0 to x, returns
    h_depth(x).  For a map g with fixed point 0 the repeated averaging
    flattens the residual, one contact order per level.  Real arguments
    only; ``depth`` is 1, 2 or 3.
    """
    if isinstance(x, complex):
        raise ValueError("integral step handles real points only")
    if not isinstance(depth, int) or isinstance(depth, bool) or not 1 <= depth <= 3:
        raise ValueError("depth must be 1, 2 or 3")
    value_of = g.value if hasattr(g, "value") else g
    if x == 0.0:
        return StepOutcome(0.0, StepStatus.OK)
    lo, hi = min(0.0, float(x)), max(0.0, float(x))
    fn = value_of
    for _ in range(depth - 1):
        fn = _Antiderivative(fn, lo, hi, tol)
    val = adaptive_simpson(fn, 0.0, float(x), tol)
    if not is_finite(val):
        return StepOutcome(val, StepStatus.NONFINITE)
    return StepOutcome(val, StepStatus.OK)
