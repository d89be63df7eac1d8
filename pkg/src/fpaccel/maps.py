"""Iteration maps and the bundled corpus of fixed point problems.

An :class:`IterationMap` wraps a jet-to-jet callable together with what is
known about its fixed point: whether the slope there is exactly one
(neutral) or bounded away from one (hyperbolic), the order of contact
with the identity, and the leading derivative value.  Problems bundle a
map with a start point and optional golden values used by the CLI suites.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from . import jets
from .jets import Jet2, Scalar, lift

NEUTRAL = "neutral"
HYPERBOLIC = "hyperbolic"
UNKNOWN = "unknown"

__all__ = [
    "NEUTRAL",
    "HYPERBOLIC",
    "UNKNOWN",
    "CorpusError",
    "GoldenValue",
    "IterationMap",
    "ProblemSpec",
    "corpus_lookup",
    "corpus_names",
    "kernel_family_map",
]


class CorpusError(ValueError):
    """Unknown problem name or invalid problem parameters."""


@dataclass(frozen=True)
class IterationMap:
    """A self-map u together with fixed point metadata.

    ``contact_order`` is the order of the zero of ``u(x) - x`` at the
    fixed point (2 or more for a neutral map that is flat there),
    ``lead_coefficient`` the value of the first non-vanishing derivative
    of that order.  Both are optional and purely informative; no
    algorithm in this package reads them.
    """

    name: str
    fn: Callable[[Jet2], Jet2]
    kind: str = UNKNOWN
    contact_order: Optional[int] = None
    lead_coefficient: Optional[Scalar] = None
    domain_hint: Optional[str] = None

    def at(self, x: Scalar) -> Jet2:
        """Evaluate the map and its first two derivatives at ``x``."""
        return self.fn(lift(x))

    def value(self, x: Scalar) -> Scalar:
        return self.fn(lift(x)).v0


@dataclass(frozen=True)
class GoldenValue:
    """One externally sourced reference cell for a method column.

    ``part`` selects the compared component of the iterate ("re", "im" or
    "mod"); ``mode`` is "abs" (absolute tolerance), "rel" (relative) or
    "factor" (magnitudes within a multiplicative band, for cells pinned
    only up to arithmetic noise).
    """

    method: str
    index: int
    expected: float
    part: str = "re"
    mode: str = "abs"
    tol: float = 1e-6

    def check(self, got: Scalar) -> tuple[bool, str]:
        if self.part == "re":
            g = got.real if isinstance(got, complex) else got
        elif self.part == "im":
            g = got.imag if isinstance(got, complex) else 0.0
        elif self.part == "mod":
            g = abs(got)
        else:
            raise ValueError(f"bad golden part {self.part!r}")
        if self.mode == "abs":
            ok = abs(g - self.expected) <= self.tol
            detail = f"{g!r} vs {self.expected!r} (abs tol {self.tol:g})"
        elif self.mode == "rel":
            ok = abs(g - self.expected) <= self.tol * abs(self.expected)
            detail = f"{g!r} vs {self.expected!r} (rel tol {self.tol:g})"
        elif self.mode == "factor":
            lo, hi = abs(self.expected) / self.tol, abs(self.expected) * self.tol
            ok = lo <= abs(g) <= hi
            detail = f"|{g!r}| vs {self.expected!r} (within factor {self.tol:g})"
        else:
            raise ValueError(f"bad golden mode {self.mode!r}")
        return ok, detail


@dataclass(frozen=True)
class ProblemSpec:
    map: IterationMap
    x0: Scalar
    x_star: Optional[Scalar] = None
    golden: tuple[GoldenValue, ...] = field(default=())


# ---------- map constructors ----------


def _sin_fn(x: Jet2) -> Jet2:
    return jets.sin(x)


def _logistic_fn(a: float) -> Callable[[Jet2], Jet2]:
    def u(x: Jet2) -> Jet2:
        return a * x * (1.0 - x)

    return u


def _fdil_fn(x: Jet2) -> Jet2:
    return x + (x - 1.0) ** 1.5


def _kvb_fn(z: Jet2) -> Jet2:
    # entire function with a double zero at 2; explicit products, no pow
    zm2 = z - 2.0
    f = z * z * zm2 * zm2 * (jets.exp(2.0 * z) * jets.cos(z) + z * z * z - 1.0 - jets.sin(z))
    return z - f


def kernel_family_map(alpha: Scalar, beta: float, x_star: Scalar) -> IterationMap:
    """Map ``u(x) = x + alpha*(x_star - x)**beta`` with a flat fixed point.

    For beta > 1 this is the model family on which the first two
    accelerated steps degenerate to an affine map and a constant; used by
    the kernel detection tests and demos.
    """
    if beta <= 0:
        raise CorpusError("beta must be positive")
    if alpha == 0:
        raise CorpusError("alpha must be nonzero")

    def u(x: Jet2) -> Jet2:
        return x + alpha * (x_star - x) ** beta

    b = float(beta)
    order = int(b) if b == int(b) else None
    kind = NEUTRAL if b > 1 else HYPERBOLIC
    lead = None
    if order is not None and order >= 2:
        # m-th derivative of alpha*(x*-x)^m is alpha*m!*(-1)^m
        fact = 1.0
        for i in range(2, order + 1):
            fact *= i
        lead = alpha * fact * (-1.0) ** order
    return IterationMap(
        f"kernel_family(alpha={alpha}, beta={beta}, x_star={x_star})",
        u,
        kind,
        order,
        lead,
    )


def _power_family(alpha: Scalar, r: float, x_star: Scalar) -> IterationMap:
    m = kernel_family_map(alpha, r, x_star)
    return IterationMap(
        f"power_family(alpha={alpha}, r={r}, x_star={x_star})",
        m.fn,
        m.kind,
        m.contact_order,
        m.lead_coefficient,
    )


def _s_family(alphas: tuple, r: float, x_star: Scalar) -> IterationMap:
    if len(alphas) == 0:
        raise CorpusError("s_family needs at least one coefficient")
    if len(alphas) > 4:
        raise CorpusError("s_family truncated at four terms")
    if r < 1:
        raise CorpusError("r must be at least 1")
    coeffs = tuple(float(a) if not isinstance(a, complex) else a for a in alphas)

    def u(x: Jet2) -> Jet2:
        d = x - x_star
        acc = x
        for i, a in enumerate(coeffs, start=1):
            if a != 0:
                acc = acc + a * d ** (r + i)
        return acc

    first = next((i for i, a in enumerate(coeffs, start=1) if a != 0), None)
    if first is None:
        raise CorpusError("all coefficients are zero")
    b = r + first
    order = int(b) if b == int(b) else None
    lead = None
    if order is not None:
        fact = 1.0
        for i in range(2, order + 1):
            fact *= i
        lead = coeffs[first - 1] * fact
    return IterationMap(
        f"s_family(alphas={alphas}, r={r}, x_star={x_star})",
        u,
        NEUTRAL,
        order,
        lead,
    )


# ---------- golden tables ----------

_SIN_GOLDEN = (
    GoldenValue("plain", 1, 0.14112, tol=1e-5),
    GoldenValue("plain", 2, 0.140652, tol=1e-6),
    GoldenValue("plain", 3, 0.140189, tol=1e-6),
    GoldenValue("plain", 4, 0.13973, tol=1e-5),
    GoldenValue("first_newton", 1, 1.56337, tol=1e-5),
    GoldenValue("first_newton", 2, 0.995758, tol=1e-6),
    GoldenValue("first_newton", 3, 0.652467, tol=1e-6),
    GoldenValue("first_newton", 4, 0.431844, tol=1e-6),
    GoldenValue("standard", 1, 1.40041, tol=1e-5),
    GoldenValue("standard", 2, 0.173163, tol=1e-6),
    GoldenValue("standard", 3, 0.000345858, tol=1e-9),
    GoldenValue("standard", 4, 7.30548e-13, mode="factor", tol=10.0),
    GoldenValue("aitken", 0, 0.140652, tol=1e-6),
    GoldenValue("aitken", 1, 0.0938926, tol=1e-7),
    GoldenValue("aitken", 2, 0.0935825, tol=1e-7),
    GoldenValue("theta2", 0, 0.141125, tol=1e-4),
    GoldenValue("theta2", 1, -0.000754788, tol=1e-7),
)

_LOGISTIC_GOLDEN = (
    GoldenValue("plain", 1, 0.25, tol=1e-12),
    GoldenValue("plain", 2, 0.1875, tol=1e-12),
    GoldenValue("plain", 3, 0.15234375, tol=1e-12),
    GoldenValue("phi", 1, -0.25, tol=1e-12),
    GoldenValue("phi", 2, -0.025, tol=1e-12),
    GoldenValue("phi", 3, -0.00030487804878048784, tol=1e-12),
)

_KVB_GOLDEN = (
    GoldenValue("plain", 1, 2.391422135261736, mode="rel", tol=1e-9),
    GoldenValue("plain", 1, -0.4699667, part="im", tol=2e-7),
    GoldenValue("plain", 2, -190.6272479365824, mode="rel", tol=1e-9),
    GoldenValue("plain", 2, 83.78040, part="im", tol=2e-5),
    GoldenValue("plain", 3, -1.078985533e45, mode="rel", tol=1e-9),
    GoldenValue("plain", 3, 2.057e45, part="im", mode="rel", tol=1e-3),
    GoldenValue("standard", 1, 2.033556020548597, mode="rel", tol=1e-9),
    GoldenValue("standard", 1, 0.0804529, part="im", tol=2e-7),
    GoldenValue("standard", 2, 2.010056510555553, mode="rel", tol=1e-9),
    GoldenValue("standard", 2, -0.01717596, part="im", tol=1e-7),
    GoldenValue("standard", 3, 2.000502552323976, mode="rel", tol=1e-9),
    GoldenValue("standard", 3, 0.0010266, part="im", tol=1e-6),
    GoldenValue("standard", 4, 2.000002378186929, mode="rel", tol=1e-9),
    GoldenValue("standard", 4, -3.083e-6, part="im", tol=1e-8),
    GoldenValue("standard", 5, 1.999999999946048, mode="rel", tol=1e-9),
    GoldenValue("standard", 5, 0.0, part="im", tol=1e-9),
)


# ---------- corpus ----------


def _build_sin(params: dict) -> ProblemSpec:
    _reject_params("sin", params)
    m = IterationMap("sin", _sin_fn, NEUTRAL, 3, -1.0, "any real or complex start")
    return ProblemSpec(m, 3.0, 0.0, _SIN_GOLDEN)


def _build_logistic(params: dict) -> ProblemSpec:
    a = params.pop("a", 1.0)
    _reject_params("logistic", params)
    if isinstance(a, complex):
        raise CorpusError("parameter a must be real")
    a = float(a)
    if a == 0.0:
        raise CorpusError("a=0 collapses the logistic map to a constant")
    fn = _logistic_fn(a)
    if a == 1.0:
        m = IterationMap("logistic(a=1)", fn, NEUTRAL, 2, -2.0, "start in (0, 1)")
        return ProblemSpec(m, 0.5, 0.0, _LOGISTIC_GOLDEN)
    x_star = (a - 1.0) / a
    m = IterationMap(f"logistic(a={a:g})", fn, HYPERBOLIC, None, None, "start in (0, 1)")
    return ProblemSpec(m, 0.5, x_star)


def _build_fdil(params: dict) -> ProblemSpec:
    _reject_params("fdil", params)
    m = IterationMap(
        "fdil",
        _fdil_fn,
        NEUTRAL,
        None,
        None,
        "real x >= 1; lift the start to complex elsewhere",
    )
    return ProblemSpec(m, 1.5, 1.0)


def _build_power_family(params: dict) -> ProblemSpec:
    try:
        alpha = params.pop("alpha")
        r = params.pop("r")
    except KeyError as e:
        raise CorpusError(f"power_family needs parameter {e.args[0]}") from None
    x_star = params.pop("x_star", 0.0)
    _reject_params("power_family", params)
    if float(r) <= 1.0:
        raise CorpusError("power_family needs r > 1")
    m = _power_family(alpha, float(r), x_star)
    return ProblemSpec(m, x_star + 0.25, x_star)


def _build_s_family(params: dict) -> ProblemSpec:
    try:
        alphas = params.pop("alphas")
        r = params.pop("r")
    except KeyError as e:
        raise CorpusError(f"s_family needs parameter {e.args[0]}") from None
    x_star = params.pop("x_star", 0.0)
    _reject_params("s_family", params)
    if not isinstance(alphas, (tuple, list)):
        alphas = (alphas,)
    m = _s_family(tuple(alphas), float(r), x_star)
    return ProblemSpec(m, x_star + 0.25, x_star)


def _build_kvb(params: dict) -> ProblemSpec:
    _reject_params("kvb_complex", params)
    m = IterationMap(
        "kvb_complex",
        _kvb_fn,
        NEUTRAL,
        2,
        None,
        "complex start near 2",
    )
    return ProblemSpec(m, complex(1.9, 0.1), complex(2.0, 0.0), _KVB_GOLDEN)


def _reject_params(name: str, leftover: dict) -> None:
    if leftover:
        raise CorpusError(f"{name} got unknown parameters {sorted(leftover)}")


_BUILDERS = {
    "sin": _build_sin,
    "logistic": _build_logistic,
    "fdil": _build_fdil,
    "power_family": _build_power_family,
    "s_family": _build_s_family,
    "kvb_complex": _build_kvb,
}


def corpus_names() -> tuple[str, ...]:
    return tuple(sorted(_BUILDERS))


def corpus_lookup(name: str, **params) -> ProblemSpec:
    """Build a bundled problem by name.

    Raises :class:`CorpusError` for unknown names or bad parameters.
    """
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise CorpusError(
            f"unknown problem {name!r}; available: {', '.join(corpus_names())}"
        ) from None
    return builder(dict(params))
