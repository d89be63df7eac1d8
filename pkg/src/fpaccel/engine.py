"""Iteration driver and empirical convergence-order measurement.

:func:`iterate` runs any step function (plain map application or one of
the accelerated steps, wrapped in a closure) from a start point and
records a full trace.  Step evaluation never aborts the run: singular
and non-finite events end the trace with a stop reason instead of an
exception, so a divergent column can sit next to a convergent one in the
same experiment.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Optional, Sequence, Union

from .accelerators import StepOutcome, StepStatus
from .jets import JetDomainError, Scalar, is_finite

__all__ = [
    "IterationTrace",
    "OrderReport",
    "StopReason",
    "TracePoint",
    "empirical_order",
    "iterate",
]


class StopReason(str, Enum):
    CONVERGED = "converged"
    MAX_ITER = "max_iter"
    DIVERGED = "diverged"
    SINGULAR = "singular"
    NONFINITE = "nonfinite"


@dataclass(frozen=True)
class TracePoint:
    index: int
    value: Scalar
    status: str  # "ok", "converged" or "diverged"


@dataclass(frozen=True)
class IterationTrace:
    """Recorded iterates plus why the run ended.

    Only finite accepted iterates are recorded; a singular or non-finite
    step leaves the previous point as the last entry.  When the target
    was supplied, ``error_sequence`` holds |x_n - x_star| per point.
    """

    points: tuple[TracePoint, ...]
    stop_reason: StopReason
    error_sequence: Optional[tuple[float, ...]] = None

    def values(self) -> tuple[Scalar, ...]:
        return tuple(p.value for p in self.points)

    def last(self) -> Scalar:
        return self.points[-1].value

    def records(self) -> list[dict]:
        out = []
        for p in self.points:
            if isinstance(p.value, complex):
                re, im = p.value.real, p.value.imag
            else:
                re, im = float(p.value), 0.0
            out.append({"n": p.index, "re": re, "im": im, "status": p.status})
        return out


def iterate(
    step: Callable[[Scalar], StepOutcome],
    x0: Scalar,
    max_iter: int = 20,
    tol: float = 1e-13,
    divergence_bound: float = 1e30,
    x_star: Optional[Scalar] = None,
) -> IterationTrace:
    """Drive a step function from ``x0`` until it stops moving.

    Stops on: two consecutive iterates within ``tol*(1+|x|)`` of each
    other (converged), the step reporting the input is already fixed
    (converged), an iterate beyond ``divergence_bound`` in magnitude
    (diverged, the offending point is recorded), a singular or
    non-finite step (previous point stays last), or ``max_iter`` steps.
    Exceptions the steps are known to raise on bad points
    (OverflowError, ZeroDivisionError, JetDomainError) are mapped to
    stop reasons as well.
    """
    if not is_finite(x0):
        raise ValueError("x0 must be finite")
    if max_iter < 0:
        raise ValueError("max_iter must be non-negative")
    points = [TracePoint(0, x0, "ok")]
    errors: Optional[list[float]] = None
    if x_star is not None:
        errors = [abs(x0 - x_star)]

    def record(n: int, val: Scalar, status: str) -> None:
        points.append(TracePoint(n, val, status))
        if errors is not None:
            errors.append(abs(val - x_star))

    x = x0
    reason = StopReason.MAX_ITER
    for n in range(1, max_iter + 1):
        try:
            out = step(x)
        except OverflowError:
            reason = StopReason.NONFINITE
            break
        except (ZeroDivisionError, JetDomainError):
            # SingularJetError is a ZeroDivisionError subclass
            reason = StopReason.SINGULAR
            break
        if out.status is StepStatus.SINGULAR:
            reason = StopReason.SINGULAR
            break
        if out.status is StepStatus.NONFINITE or not is_finite(out.value):
            reason = StopReason.NONFINITE
            break
        if out.status is StepStatus.CONVERGED_AT_INPUT:
            record(n, out.value, "converged")
            reason = StopReason.CONVERGED
            break
        val = out.value
        if abs(val) > divergence_bound:
            record(n, val, "diverged")
            reason = StopReason.DIVERGED
            break
        if abs(val - x) <= tol * (1.0 + abs(val)):
            record(n, val, "converged")
            reason = StopReason.CONVERGED
            break
        record(n, val, "ok")
        x = val
    return IterationTrace(
        tuple(points), reason, tuple(errors) if errors is not None else None
    )


@dataclass(frozen=True)
class OrderReport:
    """Classification of a trace's convergence behaviour.

    Verdicts: "exact" (an iterate hits the target to the last bit),
    "superlinear" (final error ratio below the cut), "linear" (ratio
    stabilised strictly inside (cut, lower log band edge)),
    "logarithmic" (ratio inside the band around 1), "inconclusive".
    ``rate`` carries the stabilised ratio for the linear verdict.
    """

    verdict: str
    rate: Optional[float]
    ratios: tuple[float, ...]


def empirical_order(
    trace_or_values: Union[IterationTrace, Sequence[Scalar], Iterable[Scalar]],
    x_star: Scalar,
    log_band: tuple[float, float] = (0.95, 1.05),
    superlinear_cut: float = 0.05,
    stability_rtol: float = 0.1,
) -> OrderReport:
    """Classify convergence from successive error ratios |e_{n+1}|/|e_n|."""
    if isinstance(trace_or_values, IterationTrace):
        values = trace_or_values.values()
    else:
        values = tuple(trace_or_values)
    if len(values) < 4:
        raise ValueError("need at least 4 iterates to classify")
    errs = [abs(v - x_star) for v in values]
    ratios: list[float] = []
    for n in range(len(errs) - 1):
        if errs[n] == 0.0:
            return OrderReport("exact", None, tuple(ratios))
        ratios.append(errs[n + 1] / errs[n])
    if errs[-1] == 0.0:
        return OrderReport("exact", None, tuple(ratios))
    last, prev = ratios[-1], ratios[-2]
    if last < superlinear_cut:
        return OrderReport("superlinear", None, tuple(ratios))
    if log_band[0] <= last <= log_band[1]:
        return OrderReport("logarithmic", None, tuple(ratios))
    if last < log_band[0] and abs(last - prev) <= stability_rtol * last:
        return OrderReport("linear", last, tuple(ratios))
    return OrderReport("inconclusive", None, tuple(ratios))
