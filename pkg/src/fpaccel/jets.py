"""Forward-mode jets carrying a value with its first two derivatives.

A :class:`Jet2` propagates ``(f(x), f'(x), f''(x))`` through arithmetic and
a small set of elementary functions.  Components are plain Python floats or
complexes; the flavour is set by the seed and flows through every
operation.  The accelerated fixed point steps elsewhere in this package
need exactly two derivative orders, so the truncation order is fixed at
two rather than generic.

Seed an evaluation point with :func:`lift` and constants with
:func:`const`:

>>> y = lift(2.0) * lift(2.0)
>>> (y.v0, y.v1, y.v2)
(4.0, 4.0, 2.0)

Real jets use :mod:`math`, complex jets use :mod:`cmath`.  On platforms
where ``cmath`` reduces real-axis arguments through the same kernels as
``math`` (this is the common case), a complex jet seeded on the real axis
keeps its real parts bitwise identical to the real computation.
"""

from __future__ import annotations

import cmath
import math
from typing import Union

Scalar = Union[float, complex]

__all__ = [
    "Jet2",
    "JetDomainError",
    "SingularJetError",
    "Scalar",
    "const",
    "cos",
    "exp",
    "is_finite",
    "lift",
    "log",
    "pow_real",
    "sin",
    "sqrt",
]


class JetDomainError(ValueError):
    """Elementary function evaluated outside its domain."""


class SingularJetError(ZeroDivisionError):
    """Division by a jet whose value component is exactly zero."""


def is_finite(z: Scalar) -> bool:
    """True when every component of the scalar is finite (no inf, no nan)."""
    if isinstance(z, complex):
        return math.isfinite(z.real) and math.isfinite(z.imag)
    return math.isfinite(z)


class Jet2:
    """Truncated Taylor triple ``(v0, v1, v2)``: value, slope, curvature.

    ``v2`` is the actual second derivative, not the halved Taylor
    coefficient.  Arithmetic follows the product, quotient and chain rules
    truncated at order two.
    """

    __slots__ = ("v0", "v1", "v2")

    def __init__(self, v0: Scalar, v1: Scalar = 0.0, v2: Scalar = 0.0):
        self.v0 = v0
        self.v1 = v1
        self.v2 = v2

    # ---------- construction helpers ----------

    def as_tuple(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.v0, self.v1, self.v2)

    def __repr__(self) -> str:
        return f"Jet2({self.v0!r}, {self.v1!r}, {self.v2!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Jet2):
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    # ---------- arithmetic ----------

    def __add__(self, other):
        b = _as_jet(other)
        if b is None:
            return NotImplemented
        return Jet2(self.v0 + b.v0, self.v1 + b.v1, self.v2 + b.v2)

    __radd__ = __add__

    def __sub__(self, other):
        b = _as_jet(other)
        if b is None:
            return NotImplemented
        return Jet2(self.v0 - b.v0, self.v1 - b.v1, self.v2 - b.v2)

    def __rsub__(self, other):
        b = _as_jet(other)
        if b is None:
            return NotImplemented
        return Jet2(b.v0 - self.v0, b.v1 - self.v1, b.v2 - self.v2)

    def __mul__(self, other):
        b = _as_jet(other)
        if b is None:
            return NotImplemented
        a = self
        return Jet2(
            a.v0 * b.v0,
            a.v0 * b.v1 + a.v1 * b.v0,
            a.v0 * b.v2 + 2.0 * a.v1 * b.v1 + a.v2 * b.v0,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = _as_jet(other)
        if b is None:
            return NotImplemented
        return _div(self, b)

    def __rtruediv__(self, other):
        b = _as_jet(other)
        if b is None:
            return NotImplemented
        return _div(b, self)

    def __neg__(self):
        return Jet2(-self.v0, -self.v1, -self.v2)

    def __pos__(self):
        return self

    def __pow__(self, exponent):
        if isinstance(exponent, (int, float)):
            return pow_real(self, exponent)
        return NotImplemented


def _as_jet(x) -> Jet2 | None:
    if isinstance(x, Jet2):
        return x
    if isinstance(x, (int, float, complex)) and not isinstance(x, bool):
        return Jet2(x + 0.0, 0.0, 0.0)
    return None


def _div(a: Jet2, b: Jet2) -> Jet2:
    if b.v0 == 0:
        raise SingularJetError("division by a jet with zero value")
    q0 = a.v0 / b.v0
    q1 = (a.v1 - q0 * b.v1) / b.v0
    q2 = (a.v2 - 2.0 * q1 * b.v1 - q0 * b.v2) / b.v0
    return Jet2(q0, q1, q2)


def lift(x: Scalar) -> Jet2:
    """Seed the identity jet at ``x``: value x, slope 1, curvature 0."""
    return Jet2(x + 0.0, 1.0, 0.0)


def const(c: Scalar) -> Jet2:
    """Seed a constant jet: value c, slope 0, curvature 0."""
    return Jet2(c + 0.0, 0.0, 0.0)


# ---------- elementary functions ----------


def _chain(a: Jet2, f0: Scalar, f1: Scalar, f2: Scalar) -> Jet2:
    # chain rule through g(x) = f(a(x)), truncated at order two
    return Jet2(f0, f1 * a.v1, f2 * a.v1 * a.v1 + f1 * a.v2)


def sin(a: Jet2) -> Jet2:
    z = a.v0
    if isinstance(z, complex):
        s, c = cmath.sin(z), cmath.cos(z)
    else:
        s, c = math.sin(z), math.cos(z)
    return _chain(a, s, c, -s)


def cos(a: Jet2) -> Jet2:
    z = a.v0
    if isinstance(z, complex):
        s, c = cmath.sin(z), cmath.cos(z)
    else:
        s, c = math.sin(z), math.cos(z)
    return _chain(a, c, -s, -c)


def exp(a: Jet2) -> Jet2:
    z = a.v0
    e = cmath.exp(z) if isinstance(z, complex) else math.exp(z)
    return _chain(a, e, e, e)


def log(a: Jet2) -> Jet2:
    """Natural logarithm (principal branch for complex jets)."""
    z = a.v0
    if isinstance(z, complex):
        if z == 0:
            raise JetDomainError("log of zero")
        f0 = cmath.log(z)
    else:
        if z <= 0.0:
            raise JetDomainError(f"log of non-positive real {z!r}")
        f0 = math.log(z)
    inv = 1.0 / z
    return _chain(a, f0, inv, -inv * inv)


def sqrt(a: Jet2) -> Jet2:
    z = a.v0
    if isinstance(z, complex):
        if z == 0:
            raise JetDomainError("sqrt of complex zero has no finite jet")
        f0 = cmath.sqrt(z)
        return _chain(a, f0, 0.5 / f0, -0.25 / (z * f0))
    if z < 0.0:
        raise JetDomainError(f"sqrt of negative real {z!r}")
    if z == 0.0:
        return _pow_factors(a, 0.0, math.inf, -math.inf)
    f0 = math.sqrt(z)
    return _chain(a, f0, 0.5 / f0, -0.25 / (z * f0))


def _pow_factors(a: Jet2, f0: Scalar, d1: Scalar, d2: Scalar) -> Jet2:
    # chain rule with possibly infinite d1/d2; 0 * inf is forced to the
    # flavour-matching zero so a constant argument keeps a finite jet
    zero = a.v1 * 0
    t1 = d1 * a.v1 if a.v1 != 0 else zero
    t2 = d2 * a.v1 * a.v1 if a.v1 != 0 else zero
    t3 = d1 * a.v2 if a.v2 != 0 else zero
    return Jet2(f0, t1, t2 + t3)


def _zero_base_power(e: float) -> float:
    # 0**e for real e without raising: 0 for e>0, 1 at e=0, inf for e<0
    if e > 0.0:
        return 0.0
    if e == 0.0:
        return 1.0
    return math.inf


def pow_real(a: Jet2, exponent: float) -> Jet2:
    """Raise a jet to a fixed real exponent.

    Negative real bases are allowed only for integer exponents; a zero
    base needs a non-negative exponent, and its derivative components
    become infinite when the exponent is below the derivative order.
    Complex bases use the principal branch.
    """
    if isinstance(exponent, bool) or not isinstance(exponent, (int, float)):
        raise TypeError("exponent must be a real number")
    b = float(exponent)
    if not math.isfinite(b):
        raise JetDomainError("exponent must be finite")
    z = a.v0
    integral = b == int(b)
    c2 = b * (b - 1.0)

    if isinstance(z, complex):
        if z == 0:
            if b == 0.0:
                return Jet2(complex(1.0), 0j, 0j)
            if b < 0.0:
                raise JetDomainError("zero base with negative exponent")
            if not integral:
                raise JetDomainError(
                    "complex zero base with fractional exponent has no finite jet"
                )
            d1 = b * _zero_base_power(b - 1.0)
            d2 = 0.0 if c2 == 0.0 else c2 * _zero_base_power(b - 2.0)
            return _pow_factors(a, complex(0.0), d1, d2)
        f0 = z**b
        d1 = b * z ** (b - 1.0)
        d2 = c2 * z ** (b - 2.0)
        return _chain(a, f0, d1, d2)

    if z == 0.0:
        if b == 0.0:
            return Jet2(1.0, 0.0, 0.0)
        if b < 0.0:
            raise JetDomainError("zero base with negative exponent")
        f0 = 0.0
        d1 = 0.0 if b == 0.0 else b * _zero_base_power(b - 1.0)
        d2 = 0.0 if c2 == 0.0 else c2 * _zero_base_power(b - 2.0)
        return _pow_factors(a, f0, d1, d2)
    if z < 0.0 and not integral:
        raise JetDomainError(
            f"negative real base {z!r} with fractional exponent; lift to complex instead"
        )
    f0 = math.pow(z, b)
    d1 = b * math.pow(z, b - 1.0)
    d2 = 0.0 if c2 == 0.0 else c2 * math.pow(z, b - 2.0)
    return _chain(a, f0, d1, d2)
