"""Synthesis-cost modeling.

Running the machine for C cycles costs alpha*C regardless of how many
strands grow in parallel; each coupled base costs beta.  Encoding N bits at
capacity therefore costs

    cost(q, rho) = alpha*C + beta*N * rho / cap(q, rho)

and the interesting regime for rho is the interval from the trivial-coding
threshold 2/(q+1) up to rho_star(q), past which even the entropy bound says
a denser oligo wastes bases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .capacity import binary_entropy, cap_fixed_length
from .errors import DomainError


@dataclass(frozen=True)
class CostParams:
    """Price sheet for one synthesis run: cycle cost, base cost, workload."""

    alpha: float
    beta: float
    payload_bits: float
    cycles: int

    def __post_init__(self) -> None:
        if self.alpha < 0 or self.beta < 0:
            raise DomainError("unit costs must be non-negative")
        if self.payload_bits < 0:
            raise DomainError("payload size must be non-negative")
        if self.cycles < 1:
            raise DomainError("cycle count must be at least 1")


def cost_at_capacity(params: CostParams, q: int, rho: float) -> float:
    """Total cost of encoding the workload at capacity with ratio rho."""
    cap = cap_fixed_length(q, rho)
    if cap <= 0.0:
        raise DomainError("rho must give positive capacity")
    return params.alpha * params.cycles + params.beta * params.payload_bits * (rho / cap)


def rho_star(q: int) -> float:
    """The ratio where rho/H(rho) = 1/log2(q).

    rho/H(rho) is the bases-per-bit floor of any binary-entropy-limited
    code; beyond rho_star it exceeds the 1/log2(q) achieved by trivial
    coding, so no minimizer lives to the right of it.
    """
    if q < 2:
        raise DomainError("alphabet size must be at least 2")
    target = 1.0 / math.log2(q)
    lo, hi = 1e-15, 1.0 - 1e-15
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid / binary_entropy(mid) < target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _cycle_ratio_grid(q: int, rhos: np.ndarray) -> np.ndarray:
    """rho/cap(q, rho) on an array, via 1/log2 of the gap-generating sum."""
    rhos = np.asarray(rhos, dtype=float)
    out = np.empty_like(rhos)
    below = rhos <= 2.0 / (q + 1)
    out[below] = 1.0 / math.log2(q)
    sel = ~below
    if sel.any():
        r = rhos[sel]
        lo = np.full(r.shape, 1e-12)
        hi = np.full(r.shape, 1.0 - 1e-12)
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            acc = np.zeros_like(mid)
            for i in range(q, 0, -1):
                acc = acc * mid + (1.0 - i * r)
            positive = acc * mid > 0.0
            lo = np.where(positive, mid, lo)
            hi = np.where(positive, hi, mid)
        x = 0.5 * (lo + hi)
        total = np.zeros_like(x)
        inv = 1.0 / r
        for i in range(1, q + 1):
            total += x ** (i - inv)
        out[sel] = 1.0 / np.log2(total)
    return out


def minimize_over_rho(
    params: CostParams, q: int, grid_points: int = 10001
) -> tuple[float, float]:
    """Minimize cost_at_capacity over rho in [2/(q+1), rho_star(q)].

    A dense vectorized grid brackets the minimizer, a ternary pass refines
    it, and ties resolve toward the smaller rho.  Returns (rho, cost).
    """
    if q < 2:
        raise DomainError("alphabet size must be at least 2")
    if grid_points < 2:
        raise DomainError("grid needs at least two points")
    lo = 2.0 / (q + 1)
    hi = rho_star(q)
    rhos = np.linspace(lo, hi, grid_points)
    costs = params.alpha * params.cycles + params.beta * params.payload_bits * _cycle_ratio_grid(
        q, rhos
    )
    i = int(np.argmin(costs))
    a = float(rhos[max(i - 1, 0)])
    b = float(rhos[min(i + 1, grid_points - 1)])
    for _ in range(100):
        third = (b - a) / 3.0
        if cost_at_capacity(params, q, a + third) <= cost_at_capacity(params, q, b - third):
            b = b - third
        else:
            a = a + third
    refined = 0.5 * (a + b)
    candidates = [
        (float(costs[i]), float(rhos[i])),
        (cost_at_capacity(params, q, refined), refined),
    ]
    best_cost, best_rho = min(candidates)
    return best_rho, best_cost


def minimize_over_alphabet(params: CostParams, max_q: int) -> tuple[int, float, float]:
    """Minimize cost over both rho and alphabet sizes up to max_q.

    Capacity rises strictly with q at every rho, so the alphabet bound always
    binds and the search reduces to minimize_over_rho at q = max_q.  Returns
    (q, rho, cost).
    """
    if max_q < 2:
        raise DomainError("alphabet bound must be at least 2")
    rho, value = minimize_over_rho(params, max_q)
    return max_q, rho, value
