import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from genentropy import (
    Affine,
    DomainError,
    Exp,
    GammaExp,
    Linear,
    RangeError,
    gamma_add,
    h_eval,
    h_invert,
    induced_add,
    kn_mean,
    means_agree,
)
from genentropy.generators import generator_from_dict, generator_to_dict, mean_eval, mean_invert, shifted

signs = st.sampled_from([-1.0, 1.0])
# Beyond |lam| ~ 0.3 the generator saturates on [-50, 50] and the inverse
# loses digits; see the round-trip test below.
small_lams = st.tuples(signs, st.floats(0.02, 0.3)).map(lambda t: t[0] * t[1])
gammas = st.floats(0.05, 4.0)


def gamma_exp(lam, g):
    return GammaExp(lam, math.copysign(g, lam))


@pytest.mark.parametrize("args", [(0.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (math.nan, 1.0)])
def test_gamma_exp_constraints(args):
    with pytest.raises(DomainError):
        GammaExp(*args)


@pytest.mark.parametrize("a", [0.0, -1.0, math.inf])
def test_linear_constraints(a):
    with pytest.raises(DomainError):
        Linear(a)


def test_mean_generator_constraints():
    with pytest.raises(DomainError):
        Affine(0.0)
    for kw in ({"d": 0}, {"gamma": 0}, {"lam": 0}):
        with pytest.raises(DomainError):
            Exp(**kw)


def test_h_fixed_points():
    h = GammaExp(-1.0, -1.0)
    assert h_eval(h, 0.0) == 0.0
    assert h_eval(h, 1.0) == 0.5
    assert h_invert(h, 0.5) == 1.0


def test_h_invert_domain():
    with pytest.raises(DomainError):
        h_invert(GammaExp(-1.0, -1.0), 1.0)


def test_h_overflow_is_range_error():
    with pytest.raises(RangeError):
        h_eval(GammaExp(1.0, 1.0), 2000.0)


@given(small_lams, gammas, st.floats(-50, 50))
def test_h_round_trip(lam, g, x):
    h = gamma_exp(lam, g)
    assert abs(h_invert(h, h_eval(h, x)) - x) <= 1e-12 * max(1.0, abs(x))


@given(st.floats(0.01, 100), st.floats(-1e6, 1e6))
def test_linear_round_trip(a, x):
    h = Linear(a)
    assert abs(h_invert(h, h_eval(h, x)) - x) <= 1e-15 * max(1.0, abs(x))


@given(st.floats(-5, 5).filter(bool), gammas, st.floats(-3, 3), st.floats(-3, 3))
def test_induced_add_is_gamma_add(lam, g, x, y):
    h = gamma_exp(lam, g)
    u, v = h_eval(h, x), h_eval(h, y)
    expected = gamma_add(u, v, h.gamma)
    assert abs(induced_add(h, u, v) - expected) <= 1e-12 * max(1.0, abs(expected))


@given(st.floats(0.1, 10), st.floats(-100, 100), st.floats(-100, 100))
def test_induced_add_linear_is_plus(a, u, v):
    assert math.isclose(induced_add(Linear(a), u, v), u + v, rel_tol=1e-13, abs_tol=1e-12)


@given(st.floats(-1e3, 1e3), st.floats(-1e3, 1e3), st.floats(-2, 2))
def test_gamma_add_identity_commutative(u, v, g):
    assert gamma_add(u, 0.0, g) == u
    assert gamma_add(u, v, g) == gamma_add(v, u, g)


@given(st.floats(-0.9, 10), st.floats(-0.9, 10), st.floats(-0.9, 10), st.floats(-1, 1))
def test_gamma_add_associative(u, v, w, g):
    # Stay where 1 + g*x > 0 so the sums come from a real generator.
    assume(all(1 + g * x > 0.01 for x in (u, v, w)))
    left = gamma_add(gamma_add(u, v, g), w, g)
    right = gamma_add(u, gamma_add(v, w, g), g)
    assert abs(left - right) <= 1e-12 * max(1.0, abs(left))


def test_kn_mean_example():
    assert kn_mean(Exp(lam=1.0), [0.5, 0.5], [0.0, 1.0]) == pytest.approx(math.log2(1.5), abs=1e-15)


@given(st.lists(st.floats(0, 1), min_size=2, max_size=6), st.data())
def test_kn_mean_bounds(w, data):
    assume(sum(w) > 0)
    w = np.array(w) / sum(w)
    x = np.array(data.draw(st.lists(st.floats(-50, 50), min_size=len(w), max_size=len(w))))
    lam = data.draw(st.floats(-3, 3).filter(lambda t: abs(t) > 1e-3))
    for g in (Affine(), Exp(lam=lam)):
        m = kn_mean(g, w, x)
        assert x[w > 0].min() <= m <= x[w > 0].max()


@given(st.floats(-50, 50), st.floats(-3, 3).filter(lambda t: abs(t) > 1e-3))
def test_kn_mean_indicator(x0, lam):
    assert kn_mean(Exp(lam=lam), [0.0, 1.0, 0.0], [np.nan, x0, 7.0]) == x0


def test_kn_mean_large_exponents():
    assert kn_mean(Exp(lam=1.0), [0.5, 0.5], [5000.0, 5000.0]) == 5000.0


@given(
    st.floats(0.1, 3),
    st.floats(-2, 2),
    st.floats(-3, 3).filter(lambda t: abs(t) > 1e-3),
    st.floats(0.1, 3),
    st.floats(-1, 1),
)
def test_affine_invariance(d, g, lam, c, b):
    assume(abs(g) > 1e-3 and abs(c - b * g) > 1e-3)
    base = Exp(d, g, lam)
    ok, w = means_agree(base, base.affine(c, b), trials=50)
    assert ok, w


def test_mean_eval_invert():
    g = Exp(2.0, 0.5, -0.7)
    xs = np.linspace(-3, 3, 13)
    np.testing.assert_allclose(mean_invert(g, mean_eval(g, xs)), xs, atol=1e-13)


@given(st.floats(-5, 5), st.floats(-5, 5), st.floats(-2, 2).filter(lambda t: abs(t) > 1e-3))
def test_shifted_definition(x, y, lam):
    f = Exp(1.5, 0.5, lam)
    fy = shifted(f, y)
    assert math.isclose(mean_eval(fy, x), mean_eval(f, -x - y), rel_tol=1e-12, abs_tol=1e-12)
    a = Affine(2.0, 1.0)
    assert math.isclose(mean_eval(shifted(a, y), x), mean_eval(a, -x - y), rel_tol=1e-12, abs_tol=1e-12)


def test_means_agree_detects_gap():
    ok, w = means_agree(Exp(lam=1.0), Exp(lam=-1.0))
    assert not ok and w["gap"] > 1e-3


@pytest.mark.parametrize("g", [Linear(2.0), GammaExp(-1.0, -0.5), Affine(3.0, 1.0), Exp(2.0, 0.5, -1.0)])
def test_dict_round_trip(g):
    assert generator_from_dict(generator_to_dict(g)) == g


def test_dict_errors():
    with pytest.raises(DomainError):
        generator_from_dict({"variant": "nope"})
    with pytest.raises(DomainError):
        generator_from_dict({"variant": "exp", "d": 1.0})
