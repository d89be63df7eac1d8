import math

import pytest

from fpaccel.accelerators import (
    QuadratureError,
    StepStatus,
    adaptive_simpson,
    combined_map_value,
    compose_step,
    first_newton_step,
    integral_step,
    phi_step,
    standard_step,
    steffensen_step,
)
from fpaccel.jets import Jet2, is_finite
from fpaccel.maps import IterationMap, corpus_lookup

SIN = corpus_lookup("sin").map
LOG1 = corpus_lookup("logistic", a=1.0).map
# u' = 1 while u(x) != x at the origin: forces the singular branch
BUMP = IterationMap("bump", lambda x: x + 1.0 + x * x)


def test_first_newton_matches_closed_form_at_start():
    out, slope = first_newton_step(3.0, SIN.at(3.0))
    assert out.status is StepStatus.OK
    expected = 3.0 + (math.sin(3.0) - 3.0) / (1.0 - math.cos(3.0))
    assert abs(out.value - expected) <= 1e-15 * abs(expected)
    exp_slope = -math.sin(3.0) * (math.sin(3.0) - 3.0) / (1.0 - math.cos(3.0)) ** 2
    assert abs(slope - exp_slope) <= 1e-15 * abs(exp_slope)


def test_first_newton_slope_matches_finite_difference():
    h = 1e-5
    for x in (3.0, 0.8, -1.2):

        def v(t):
            out, _ = first_newton_step(t, SIN.at(t))
            assert out.ok
            return out.value

        _, slope = first_newton_step(x, SIN.at(x))
        fd = (v(x + h) - v(x - h)) / (2.0 * h)
        assert abs(slope - fd) <= 1e-5 * (1.0 + abs(fd))


def test_standard_step_closed_form():
    x = 3.0
    u0, u1, u2 = math.sin(x), math.cos(x), -math.sin(x)
    v = x + (u0 - x) / (1.0 - u1)
    vd = u2 * (u0 - x) / (1.0 - u1) ** 2
    expected = (v - x * vd) / (1.0 - vd)
    out = standard_step(x, SIN.at(x))
    assert out.ok
    assert abs(out.value - expected) <= 1e-15 * abs(expected)
    assert abs(out.value - 1.400407751113679) <= 1e-12


def test_converged_at_input_guard():
    out, slope = first_newton_step(0.0, SIN.at(0.0))
    assert out.status is StepStatus.CONVERGED_AT_INPUT
    assert out.value == 0.0
    assert slope == 0.0
    assert standard_step(0.0, SIN.at(0.0)).status is StepStatus.CONVERGED_AT_INPUT


def test_converged_guard_shields_infinite_curvature():
    # fdil has u'' = inf at its fixed point; the converged branch must
    # fire before any derivative is touched
    fd = corpus_lookup("fdil").map
    j = fd.at(1.0)
    assert not is_finite(j.v2)
    out, _ = first_newton_step(1.0, j)
    assert out.status is StepStatus.CONVERGED_AT_INPUT
    assert out.value == 1.0


def test_singular_guard():
    out, _ = first_newton_step(0.0, BUMP.at(0.0))
    assert out.status is StepStatus.SINGULAR
    assert out.value == 0.0
    assert standard_step(0.0, BUMP.at(0.0)).status is StepStatus.SINGULAR


def test_nonfinite_propagates_nonfinite_value():
    out, _ = first_newton_step(1.0, Jet2(float("inf"), 1.0, 0.0))
    assert out.status is StepStatus.NONFINITE
    assert not is_finite(out.value)
    out2, _ = first_newton_step(1.0, Jet2(5.0, float("nan"), 0.0))
    assert out2.status is StepStatus.NONFINITE
    assert not is_finite(out2.value)


def test_combined_map_value():
    out = combined_map_value(0.3, 0.5, 0.25, 0.3)
    assert out.ok
    assert abs(out.value - (0.5 - 0.3 * 0.25) / 0.75) < 1e-16
    assert combined_map_value(0.3, 0.5, 1.0, 0.3).status is StepStatus.SINGULAR
    bad = combined_map_value(0.3, float("nan"), 0.25, 0.3)
    assert bad.status is StepStatus.NONFINITE
    assert not is_finite(bad.value)


def test_phi_step_logistic_column():
    # iterating the phi step on the neutral logistic map from 0.5
    vals = [0.5]
    for _ in range(3):
        out = phi_step(vals[-1], LOG1.at(vals[-1]))
        assert out.ok
        vals.append(out.value)
    assert vals[1] == -0.25
    assert vals[2] == -0.025
    assert abs(vals[3] - -0.00030487804878048784) <= 1e-12


def test_phi_step_is_combined_step_of_shifted_map():
    x = 0.5
    j = SIN.at(x)
    phi0 = j.v0 - j.v1 + 1.0
    phi1 = j.v1 - j.v2
    expected = (phi0 - x * phi1) / (1.0 - phi1)
    assert phi_step(x, j).value == expected


def test_steffensen_quadratic_on_hyperbolic_map():
    log2 = corpus_lookup("logistic", a=2.0).map
    out = steffensen_step(0.4, log2)
    assert out.ok
    assert abs(out.value - (0.4 + 0.0064 / 0.0608)) <= 1e-15
    x = 0.4
    for _ in range(4):
        res = steffensen_step(x, log2)
        if res.status is StepStatus.CONVERGED_AT_INPUT:
            break
        assert res.ok
        x = res.value
    assert abs(x - 0.5) < 1e-12


def test_steffensen_guards():
    log2 = corpus_lookup("logistic", a=2.0).map
    assert steffensen_step(0.5, log2).status is StepStatus.CONVERGED_AT_INPUT
    # u(x) = x^2 at the golden-ratio conjugate: x - 2u + u(u) = 0 exactly
    square = IterationMap("square", lambda x: x * x)
    x = (math.sqrt(5.0) - 1.0) / 2.0
    out = steffensen_step(x, square)
    assert out.status is StepStatus.SINGULAR
    assert out.value == x


def test_steffensen_constant_map_lands_in_one_step():
    out = steffensen_step(0.3, IterationMap("c", lambda x: x * 0 + 0.8))
    assert out.ok
    assert out.value == 0.8


def test_steffensen_accepts_plain_callable():
    out = steffensen_step(0.4, lambda x: 2.0 * x * (1.0 - x))
    assert out.ok
    assert abs(out.value - (0.4 + 0.0064 / 0.0608)) <= 1e-15


def test_compose_step():
    step = lambda x: standard_step(x, SIN.at(x))
    out = compose_step(3.0, step, 2)
    assert out.ok
    assert abs(out.value - 0.17316252576391672) <= 1e-12
    with pytest.raises(ValueError):
        compose_step(3.0, step, 0)
    with pytest.raises(ValueError):
        compose_step(3.0, step, 1.5)


def test_compose_short_circuits_on_bad_status():
    step = lambda x: standard_step(x, BUMP.at(x))
    out = compose_step(0.0, step, 3)
    assert out.status is StepStatus.SINGULAR


def test_adaptive_simpson_basics():
    assert abs(adaptive_simpson(math.sin, 0.0, math.pi) - 2.0) <= 1e-12
    assert adaptive_simpson(math.sin, 1.0, 1.0) == 0.0
    fwd = adaptive_simpson(math.exp, 0.0, 1.0)
    assert adaptive_simpson(math.exp, 1.0, 0.0) == -fwd
    assert abs(fwd - (math.e - 1.0)) <= 1e-12


def test_adaptive_simpson_reports_failure():
    with pytest.raises(QuadratureError):
        adaptive_simpson(lambda t: 1.0 / (t - 1.0 / 3.0) ** 2, 0.0, 1.0)


def test_integral_step_closed_forms():
    # antiderivative tower of sin pinned at 0:
    # one level 1 - cos x, two levels x - sin x, three x^2/2 + cos x - 1
    for x in (-1.5, -0.5, 0.25, 1.0, 2.0):
        h1 = integral_step(x, SIN, 1)
        h2 = integral_step(x, SIN, 2)
        h3 = integral_step(x, SIN, 3)
        assert h1.ok and h2.ok and h3.ok
        assert abs(h1.value - (1.0 - math.cos(x))) <= 1e-10
        assert abs(h2.value - (x - math.sin(x))) <= 1e-10
        assert abs(h3.value - (x * x / 2.0 + math.cos(x) - 1.0)) <= 1e-10


def test_integral_step_edges():
    out = integral_step(0.0, SIN, 2)
    assert out.ok
    assert out.value == 0.0
    with pytest.raises(ValueError):
        integral_step(1.0, SIN, 0)
    with pytest.raises(ValueError):
        integral_step(1.0, SIN, 4)
    with pytest.raises(ValueError):
        integral_step(1.0 + 0j, SIN, 1)


def test_integral_step_accepts_plain_callable():
    out = integral_step(1.0, math.sin, 1)
    assert abs(out.value - (1.0 - math.cos(1.0))) <= 1e-12
