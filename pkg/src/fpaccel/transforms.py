"""Whole-sequence convergence transforms.

These operate on already computed iterate sequences, in contrast to the
step functions in :mod:`fpaccel.accelerators` which need the map itself.
Every transform consumes and produces a :class:`SequenceView`; plain
iterables are accepted and wrapped.  A transform that hits a vanishing
denominator truncates its output there and records why in
``stopped_by`` rather than raising.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .accelerators import DEFAULT_TOL, SINGULAR_EPS, StepStatus, standard_step
from .jets import Scalar, is_finite

__all__ = [
    "SequenceView",
    "aitken_delta2",
    "iterated_aitken",
    "sequence_view",
    "theta2",
    "w_transform",
]


@dataclass(frozen=True)
class SequenceView:
    """Immutable scalar sequence with provenance and an end marker.

    ``stopped_by`` is None when the sequence simply ended, otherwise the
    reason output stopped early ("singular" or "nonfinite").
    """

    items: tuple[Scalar, ...]
    provenance: str = ""
    stopped_by: Optional[str] = None

    def __len__(self) -> int:
        return len(self.items)

    def __getitem__(self, i):
        return self.items[i]


def sequence_view(
    items: Iterable[Scalar], provenance: str = "", stopped_by: Optional[str] = None
) -> SequenceView:
    """Wrap an iterable, truncating at the first non-finite entry."""
    if isinstance(items, SequenceView):
        return items
    out = []
    stop = stopped_by
    for x in items:
        if not is_finite(x):
            stop = "nonfinite"
            break
        out.append(x)
    return SequenceView(tuple(out), provenance, stop)


def _tiny(den: Scalar, scale: Scalar) -> bool:
    return abs(den) <= SINGULAR_EPS * (1.0 + abs(scale))


def aitken_delta2(seq) -> SequenceView:
    """Classic delta-squared extrapolation.

    out[n] = s[n] - (s[n+1] - s[n])^2 / (s[n+2] - 2 s[n+1] + s[n]),
    giving len(s) - 2 entries; needs at least three input terms.
    """
    s = sequence_view(seq)
    if len(s) < 3:
        raise ValueError("aitken_delta2 needs at least 3 terms")
    out = []
    stop = None
    for n in range(len(s) - 2):
        d1 = s[n + 1] - s[n]
        d2 = s[n + 2] - 2.0 * s[n + 1] + s[n]
        if _tiny(d2, s[n]):
            stop = "singular"
            break
        out.append(s[n] - d1 * d1 / d2)
    return SequenceView(tuple(out), f"aitken({s.provenance})", stop or s.stopped_by)


def theta2(seq) -> SequenceView:
    """First even column of the theta algorithm.

    With t[n] = 1/(s[n+1] - s[n]),

        out[n] = s[n+1] + (s[n+2] - s[n+1]) (t[n+2] - t[n+1])
                          / (t[n+2] - 2 t[n+1] + t[n]),

    giving len(s) - 3 entries; needs at least four input terms.  Exact
    on geometric sequences c r^n + x*.
    """
    s = sequence_view(seq)
    if len(s) < 4:
        raise ValueError("theta2 needs at least 4 terms")
    t = []
    stop = None
    for n in range(len(s) - 1):
        d = s[n + 1] - s[n]
        if _tiny(d, s[n]):
            stop = "singular"
            break
        t.append(1.0 / d)
    out = []
    for n in range(max(0, min(len(s) - 3, len(t) - 2))):
        den = t[n + 2] - 2.0 * t[n + 1] + t[n]
        if _tiny(den, t[n + 1]):
            stop = "singular"
            break
        out.append(s[n + 1] + (s[n + 2] - s[n + 1]) * (t[n + 2] - t[n + 1]) / den)
    return SequenceView(tuple(out), f"theta2({s.provenance})", stop or s.stopped_by)


def iterated_aitken(seq, depth: int) -> SequenceView:
    """Apply delta-squared ``depth`` times; needs 2*depth + 1 terms."""
    if not isinstance(depth, int) or isinstance(depth, bool) or depth < 0:
        raise ValueError("depth must be a non-negative integer")
    s = sequence_view(seq)
    if len(s) < 2 * depth + 1:
        raise ValueError(f"iterated_aitken depth {depth} needs {2 * depth + 1} terms")
    for _ in range(depth):
        if len(s) < 3:
            break
        s = aitken_delta2(s)
    return s


def w_transform(seq, u, tol: float = DEFAULT_TOL) -> SequenceView:
    """Map each iterate through the superlinear standard step of ``u``.

    out[n] = w(s[n]); output keeps the input length unless a step comes
    back singular or non-finite, which truncates the output there.
    """
    s = sequence_view(seq)
    out = []
    stop = None
    for x in s.items:
        try:
            res = standard_step(x, u.at(x), tol)
        except OverflowError:
            stop = "nonfinite"
            break
        if res.status in (StepStatus.SINGULAR, StepStatus.NONFINITE):
            stop = res.status.value
            break
        out.append(res.value)
    return SequenceView(tuple(out), f"w({s.provenance})", stop or s.stopped_by)
