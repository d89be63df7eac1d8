import math

import pytest

from fpaccel.jets import is_finite
from fpaccel.maps import (
    HYPERBOLIC,
    NEUTRAL,
    CorpusError,
    GoldenValue,
    corpus_lookup,
    corpus_names,
    kernel_family_map,
)

_CORPUS = [
    ("sin", {}),
    ("logistic", {"a": 1.0}),
    ("logistic", {"a": 2.5}),
    ("fdil", {}),
    ("power_family", {"alpha": 2.0, "r": 3.0}),
    ("s_family", {"alphas": (1.0, -0.5), "r": 2.0}),
    ("kvb_complex", {}),
]


def test_corpus_names():
    assert set(corpus_names()) == {
        "fdil",
        "kvb_complex",
        "logistic",
        "power_family",
        "s_family",
        "sin",
    }


@pytest.mark.parametrize("name,params", _CORPUS, ids=[f"{n}{p}" for n, p in _CORPUS])
def test_fixed_point_residual(name, params):
    prob = corpus_lookup(name, **params)
    assert prob.x_star is not None
    val = prob.map.value(prob.x_star)
    assert abs(val - prob.x_star) <= 1e-12 * (1.0 + abs(prob.x_star))


@pytest.mark.parametrize("name,params", _CORPUS, ids=[f"{n}{p}" for n, p in _CORPUS])
def test_start_point_evaluates_finitely(name, params):
    prob = corpus_lookup(name, **params)
    assert is_finite(prob.map.value(prob.x0))


@pytest.mark.parametrize(
    "name,params",
    [(n, p) for n, p in _CORPUS if not (n == "logistic" and p.get("a") != 1.0)],
    ids=lambda v: str(v),
)
def test_neutral_maps_have_unit_slope(name, params):
    prob = corpus_lookup(name, **params)
    assert prob.map.kind == NEUTRAL
    slope = prob.map.at(prob.x_star).v1
    assert abs(slope - 1.0) <= 1e-9


def test_sin_metadata():
    u = corpus_lookup("sin").map
    assert u.contact_order == 3
    assert u.lead_coefficient == -1.0
    # second derivative vanishes at the fixed point, third does not
    assert u.at(0.0).v2 == 0.0
    h = 1e-3
    third = (u.at(h).v2 - u.at(-h).v2) / (2.0 * h)
    assert abs(third - u.lead_coefficient) < 1e-5


def test_logistic_neutral_metadata():
    prob = corpus_lookup("logistic", a=1.0)
    assert prob.map.contact_order == 2
    assert prob.map.lead_coefficient == -2.0
    assert prob.map.at(0.0).v2 == -2.0
    assert prob.x_star == 0.0


def test_logistic_hyperbolic():
    prob = corpus_lookup("logistic", a=2.5)
    assert prob.map.kind == HYPERBOLIC
    assert abs(prob.x_star - 0.6) < 1e-15
    assert abs(prob.map.at(prob.x_star).v1 - 1.0) > 0.1


def test_logistic_default_is_neutral_case():
    assert corpus_lookup("logistic").map.kind == NEUTRAL


def test_fdil_closed_form_value():
    u = corpus_lookup("fdil").map
    assert u.value(1.5) == 1.5 + 0.5**1.5
    j = u.at(4.0)
    assert abs(j.v1 - (1.0 + 1.5 * math.sqrt(3.0))) < 1e-14


def test_kvb_first_iterate():
    prob = corpus_lookup("kvb_complex")
    y1 = prob.map.value(prob.x0)
    assert abs(y1.real - 2.391422135261737) <= 1e-12 * abs(y1.real)
    assert abs(y1.imag - -0.46996670468943114) <= 1e-12


def test_power_family_metadata():
    m = corpus_lookup("power_family", alpha=2.0, r=3.0).map
    assert m.kind == NEUTRAL
    assert m.contact_order == 3
    assert m.lead_coefficient == 2.0 * 6.0 * (-1.0) ** 3
    frac = corpus_lookup("power_family", alpha=1.0, r=2.5).map
    assert frac.contact_order is None


def test_s_family_metadata():
    m = corpus_lookup("s_family", alphas=(0.0, 1.0), r=2.0).map
    assert m.contact_order == 4
    assert m.lead_coefficient == 24.0
    val = m.value(0.3)
    assert abs(val - (0.3 + 0.3**4)) < 1e-15


def test_kernel_family_map_values():
    m = kernel_family_map(0.5, 2.0, 1.0)
    assert m.kind == NEUTRAL
    assert m.contact_order == 2
    assert m.lead_coefficient == 1.0
    assert abs(m.value(0.8) - (0.8 + 0.5 * 0.2**2)) < 1e-15


def test_corpus_errors():
    with pytest.raises(CorpusError):
        corpus_lookup("nope")
    with pytest.raises(CorpusError):
        corpus_lookup("logistic", a=0.0)
    with pytest.raises(CorpusError):
        corpus_lookup("sin", a=1.0)
    with pytest.raises(CorpusError):
        corpus_lookup("power_family", alpha=1.0, r=1.0)
    with pytest.raises(CorpusError):
        corpus_lookup("power_family", alpha=1.0)
    with pytest.raises(CorpusError):
        corpus_lookup("s_family", alphas=(1.0,) * 5, r=2.0)
    with pytest.raises(CorpusError):
        corpus_lookup("s_family", alphas=(0.0, 0.0), r=2.0)
    with pytest.raises(CorpusError):
        kernel_family_map(0.0, 2.0, 0.0)
    with pytest.raises(CorpusError):
        kernel_family_map(1.0, 0.0, 0.0)


def test_golden_value_modes():
    ok, _ = GoldenValue("m", 0, 0.5, tol=1e-3).check(0.5004)
    assert ok
    ok, _ = GoldenValue("m", 0, 0.5, tol=1e-3).check(0.502)
    assert not ok
    ok, _ = GoldenValue("m", 0, 100.0, mode="rel", tol=1e-2).check(100.9)
    assert ok
    ok, _ = GoldenValue("m", 0, 1e-12, mode="factor", tol=10.0).check(5e-12)
    assert ok
    ok, _ = GoldenValue("m", 0, 1e-12, mode="factor", tol=10.0).check(5e-11)
    assert not ok
    ok, _ = GoldenValue("m", 0, 0.25, part="im", tol=1e-6).check(complex(9.0, 0.25))
    assert ok
    ok, _ = GoldenValue("m", 0, 2.0, part="mod", tol=1e-6).check(complex(0.0, -2.0))
    assert ok
    with pytest.raises(ValueError):
        GoldenValue("m", 0, 1.0, part="bogus").check(1.0)
    with pytest.raises(ValueError):
        GoldenValue("m", 0, 1.0, mode="bogus").check(1.0)


def test_golden_attached_to_table_problems():
    assert len(corpus_lookup("sin").golden) == 17
    assert len(corpus_lookup("logistic", a=1.0).golden) == 6
    assert len(corpus_lookup("logistic", a=3.2).golden) == 0
    assert len(corpus_lookup("kvb_complex").golden) == 16
