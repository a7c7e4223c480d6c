"""Cost model: the search interval, the optimum, and its scaling in q."""

import numpy as np
import pytest

from oligocycle import (
    CostParams,
    DomainError,
    binary_entropy,
    cap_fixed_length,
    cost_at_capacity,
    minimize_over_alphabet,
    minimize_over_rho,
    rho_star,
)
from oligocycle.cost import _cycle_ratio_grid

PARAMS = CostParams(alpha=1.0, beta=0.01, payload_bits=1e6, cycles=200)


def test_params_validation():
    with pytest.raises(DomainError):
        CostParams(-1.0, 1.0, 10.0, 5)
    with pytest.raises(DomainError):
        CostParams(1.0, -1.0, 10.0, 5)
    with pytest.raises(DomainError):
        CostParams(1.0, 1.0, -10.0, 5)
    with pytest.raises(DomainError):
        CostParams(1.0, 1.0, 10.0, 0)


def test_cost_formula():
    # below the threshold the ratio term is exactly 1/log2(q)
    assert cost_at_capacity(PARAMS, 4, 0.4) == pytest.approx(200.0 + 1e4 * 0.5, rel=1e-12)
    assert cost_at_capacity(PARAMS, 4, 0.2) == cost_at_capacity(PARAMS, 4, 0.4)
    with pytest.raises(DomainError):
        cost_at_capacity(PARAMS, 4, 0.0)
    with pytest.raises(DomainError):
        cost_at_capacity(PARAMS, 4, 1.0)


def test_cost_plateau_below_threshold():
    for q in (2, 4, 8):
        reference = cost_at_capacity(PARAMS, q, 2.0 / (q + 1))
        for rho in (0.01, 0.05, 2.0 / (q + 1)):
            assert cost_at_capacity(PARAMS, q, rho) == pytest.approx(reference, rel=1e-12)


def test_rho_star_known_values():
    assert rho_star(4) == pytest.approx(0.5, abs=1e-9)
    assert rho_star(2) == pytest.approx(0.7729078047806517, abs=1e-9)
    assert rho_star(16) == pytest.approx(0.156417354964272, abs=1e-9)


def test_rho_star_solves_its_equation():
    import math

    for q in (2, 3, 5, 9, 33, 64):
        rho = rho_star(q)
        assert rho / binary_entropy(rho) == pytest.approx(1.0 / math.log2(q), abs=1e-12)


def test_rho_star_strictly_decreasing_and_above_threshold():
    previous = 1.0
    for q in range(2, 65):
        value = rho_star(q)
        assert value < previous
        assert 2.0 / (q + 1) < value
        previous = value


def test_ratio_grid_matches_scalar():
    for q in (2, 4, 7, 16):
        rhos = np.linspace(2.0 / (q + 1), rho_star(q), 17)
        ratios = _cycle_ratio_grid(q, rhos)
        for rho, ratio in zip(rhos, ratios):
            expected = rho / cap_fixed_length(q, float(rho))
            assert ratio == pytest.approx(expected, abs=1e-12)


def test_minimizer_sits_at_the_left_endpoint():
    # past the threshold the bases-per-bit ratio only grows, so the plateau
    # edge is optimal; the refinement must not drift off it
    for q in (2, 4, 8, 16):
        rho_opt, cost_opt = minimize_over_rho(PARAMS, q)
        assert rho_opt == pytest.approx(2.0 / (q + 1), abs=1e-9)
        assert cost_opt == pytest.approx(cost_at_capacity(PARAMS, q, rho_opt), rel=1e-12)


def test_minimum_within_interval_and_below_endpoints():
    for q in (2, 3, 5, 12):
        rho_opt, cost_opt = minimize_over_rho(PARAMS, q, grid_points=2001)
        low, high = 2.0 / (q + 1), rho_star(q)
        assert low - 1e-12 <= rho_opt <= high + 1e-12
        assert cost_opt <= cost_at_capacity(PARAMS, q, low) + 1e-9
        assert cost_opt <= cost_at_capacity(PARAMS, q, high) + 1e-9


def test_zero_beta_collapses_to_machine_time():
    params = CostParams(alpha=3.0, beta=0.0, payload_bits=1e9, cycles=77)
    for q in (2, 4, 9):
        rho_opt, cost_opt = minimize_over_rho(params, q)
        assert cost_opt == 3.0 * 77
        assert rho_opt == pytest.approx(2.0 / (q + 1), abs=1e-12)


def test_cost_strictly_decreases_with_alphabet():
    previous = None
    for q in range(2, 10):
        _, cost_opt = minimize_over_rho(PARAMS, q)
        if previous is not None:
            assert cost_opt < previous
        previous = cost_opt


def test_alphabet_bound_binds():
    q, rho_opt, cost_opt = minimize_over_alphabet(PARAMS, 64)
    assert q == 64
    direct_rho, direct_cost = minimize_over_rho(PARAMS, 64)
    assert (rho_opt, cost_opt) == (direct_rho, direct_cost)
    with pytest.raises(DomainError):
        minimize_over_alphabet(PARAMS, 1)


def test_large_alphabet_cost_floor():
    # at q=256 the ratio term cannot beat 1/8 bases per bit
    q, _, cost_opt = minimize_over_alphabet(PARAMS, 256)
    floor = PARAMS.alpha * PARAMS.cycles + PARAMS.beta * PARAMS.payload_bits / 8.0
    assert cost_opt == pytest.approx(floor, rel=1e-9)
