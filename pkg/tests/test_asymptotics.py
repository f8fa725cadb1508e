import random

import pytest
from scipy import integrate

from qbound.asymptotics import (
    CURVES,
    DomainError,
    LOG2_3,
    alpha_equation,
    alpha_root,
    antiderivative_closed_form,
    binary_lp_scan,
    entropy,
    exact_log_kraw,
    first_root_limit,
    gv_exponent,
    gv_zero,
    hamming_exponent,
    hamming_exponent_scan,
    hamming_objective,
    hamming_objective_squared,
    hamming_validity_limit,
    hamming_zero,
    kalai_integral,
    kalai_integral_closed_form,
    kalai_log_kraw,
    lp1_exponent_binary,
    singleton_exponent,
    tabulate_curve,
    xi_e,
    _kalai_integrand,
)


def test_entropy_examples():
    assert entropy(0.5) == 1.0
    assert entropy(0) == entropy(1) == 0
    assert entropy(0.11049) == pytest.approx(0.50139, abs=1e-5)
    with pytest.raises(DomainError):
        entropy(1.2)


def test_curve_examples():
    assert gv_exponent(0.1) == pytest.approx(0.3725081563386031, abs=1e-14)
    assert lp1_exponent_binary(0.1).exponent == pytest.approx(0.7219280948873623, abs=1e-14)
    assert singleton_exponent(0.25) == 0.5
    assert xi_e(0) == 0.75
    h = hamming_exponent(0.2)
    assert h.valid and h.exponent == pytest.approx(1 - 0.1 * LOG2_3 - entropy(0.1))
    assert not hamming_exponent(0.36).valid
    assert not lp1_exponent_binary(0.2).valid


def test_curve_zeros_and_fixed_point():
    assert gv_zero() == pytest.approx(0.189290, abs=1e-6)
    assert hamming_validity_limit() == pytest.approx(0.339811, abs=1e-6)
    assert hamming_zero() == pytest.approx(0.378579, abs=1e-6)


def test_hamming_below_singleton():
    for k in range(1, 501):
        d = k / 1000
        assert hamming_exponent(d).exponent < singleton_exponent(d)


def bisect_alpha(tau, xi, iters=200):
    # independent oracle: plain bisection of the derivative, which decreases in nu
    lo, hi = max(0.0, tau - xi), tau - xi / 2
    lo, hi = lo + 1e-15, hi - 1e-15
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if alpha_equation(mid, tau, xi) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@pytest.mark.parametrize(
    "tau, xi, golden",
    [(0.15, 0.10, 0.0918534562871459), (0.15, 0.05, 0.12049109162464125)],
)
def test_alpha_goldens(tau, xi, golden):
    assert alpha_root(tau, xi) == pytest.approx(golden, abs=1e-12)
    assert bisect_alpha(tau, xi) == pytest.approx(golden, abs=1e-12)


KALAI_SAMPLES = {
    4: [(0.1, 0.1), (0.05, 0.2), (0.15, 0.05), (0.2, 0.1), (0.1, 0.3)],
    2: [(0.11, 0.05), (0.05, 0.2), (0.2, 0.02), (0.15, 0.1), (0.1, 0.15)],
}


@pytest.mark.parametrize("q", [2, 4])
def test_kalai_convergence(q):
    for tau, xi in KALAI_SAMPLES[q]:
        assert xi < first_root_limit(q, tau)
        lim = kalai_log_kraw(q, tau, xi)
        errs = [abs(exact_log_kraw(q, n, round(tau * n), round(xi * n)) - lim) for n in (100, 200, 400)]
        assert errs[0] > errs[1] > errs[2]
        assert errs[2] <= 0.02


def test_kalai_at_zero_is_binomial_growth():
    assert kalai_log_kraw(4, 0.2, 0.0) == pytest.approx(entropy(0.2) + 0.2 * LOG2_3)
    assert kalai_log_kraw(2, 0.2, 0.0) == pytest.approx(entropy(0.2))
    with pytest.raises(DomainError):
        kalai_integral(2, 0.05, 0.3)


def test_antiderivative_matches_quadrature():
    rng = random.Random(2024)
    for _ in range(100):
        tau = rng.uniform(0.01, 0.24)
        xi = rng.uniform(0.0, 0.98) * xi_e(tau)
        quad, _ = integrate.quad(_kalai_integrand(4, tau), 0, xi, epsabs=1e-13, epsrel=0)
        assert abs(kalai_integral_closed_form(tau, xi) - quad) <= 1e-8


def test_antiderivative_example():
    assert kalai_integral_closed_form(0.1, 0.1) == pytest.approx(-0.0223627372492, abs=1e-12)
    assert antiderivative_closed_form(0.1, 0.1) - antiderivative_closed_form(0.1, 0) == pytest.approx(
        kalai_integral(4, 0.1, 0.1), abs=1e-10
    )


@pytest.mark.parametrize("delta", [0.05, 0.1, 0.15, 0.2, 0.25, 0.3])
def test_hamming_scan_argmax_at_zero(delta):
    for squared in (False, True):
        res = hamming_exponent_scan(delta, squared_integral=squared)
        assert res.argmax_xi <= 1e-3
        assert res.max_value == pytest.approx(hamming_exponent(delta).exponent, abs=1e-12)


def test_objectives_agree_at_zero():
    for d in (0.1, 0.2):
        assert hamming_objective(d, 0.0) == pytest.approx(hamming_objective_squared(d, 0.0))


def test_binary_scan_large_tau_at_zero():
    for tau in (0.12, 0.15, 0.2):
        assert binary_lp_scan(tau).argmax_xi <= 1e-3


def test_binary_scan_interior_max_just_below_threshold():
    # at tau = 0.11 the objective peaks away from zero (confirmed in high precision)
    res = binary_lp_scan(0.11)
    assert res.argmax_xi > 0.1
    assert res.max_value > res.value_at_zero


def test_tabulate_hamming_35_points():
    pts = tabulate_curve("hamming", 0.0, 0.34, 0.01)
    assert len(pts) == 35
    assert pts[-1].delta == 0.34 and not pts[-1].valid
    assert all(p.valid for p in pts[:-1])


def test_tabulate_monotone_and_deterministic():
    a = tabulate_curve("lp1_binary", 0.0, 0.5, 0.01)
    assert [p.exponent for p in a] == sorted((p.exponent for p in a), reverse=True)
    assert a == tabulate_curve("lp1_binary", 0.0, 0.5, 0.01)
    assert set(CURVES) == {"hamming", "gv", "singleton", "lp1_binary"}
    with pytest.raises(KeyError):
        tabulate_curve("mrrw2", 0, 0.1, 0.01)
    with pytest.raises(ValueError):
        tabulate_curve("gv", 0.2, 0.1, 0.01)


def test_gv_below_hamming_grid():
    for k in range(341):
        d = k / 1000
        assert gv_exponent(d) <= hamming_exponent(d).exponent
