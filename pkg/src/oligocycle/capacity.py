"""Information capacity of cycle-limited synthesis.

With C cycles and oligos of exact length L = rho*C, the number of reachable
oligos grows as 2^(cap(q, rho) * C).  Below the threshold rho <= 2/(q+1)
every length-L symbol string embeds, so cap is the trivial rho*log2(q).
Above it, cap(q, rho) = rho * log2(sum_i x^(i - 1/rho)) where x is the unique
root in (0, 1) of

    sum_{i=1}^{q} (1 - rho*i) * x^i = 0.

Dropping the length constraint gives the flexible capacity -log2(x) with x
solving sum_{i=1}^{q} x^i = 1.  Both roots come from plain bisection: the
polynomials are monotone or single-crossing on (0, 1), and 200 halvings pin
the root to full double precision.
"""

from __future__ import annotations

import math

from .counting import CountCache, subsequence_count
from .errors import DomainError

_BRACKET = (1e-12, 1.0 - 1e-12)


def binary_entropy(p: float) -> float:
    """Shannon entropy -p*log2(p) - (1-p)*log2(1-p), with H(0) = H(1) = 0."""
    if not 0.0 <= p <= 1.0:
        raise DomainError("entropy argument must lie in [0, 1]")
    if p in (0.0, 1.0):
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def _poly_fixed(q: int, rho: float, x: float) -> float:
    # Horner form of sum_i (1 - rho*i) x^i
    acc = 0.0
    for i in range(q, 0, -1):
        acc = acc * x + (1.0 - rho * i)
    return acc * x


def capacity_root_fixed(q: int, rho: float) -> float:
    """Root in (0, 1) of sum_i (1 - rho*i) x^i for 2/(q+1) < rho < 1.

    The coefficients change sign once, so the polynomial crosses zero exactly
    once on (0, 1): positive near 0, negative at 1.
    """
    if q < 2:
        raise DomainError("fixed-length root requires alphabet size >= 2")
    if not 2.0 / (q + 1) < rho < 1.0:
        raise DomainError("rho must lie strictly between 2/(q+1) and 1")
    lo, hi = _BRACKET
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _poly_fixed(q, rho, mid) > 0.0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    # one Newton step to polish the last bit
    slope = 0.0
    for i in range(q, 0, -1):
        slope = slope * x + i * (1.0 - rho * i)
    if slope:
        step = x - _poly_fixed(q, rho, x) / slope
        if 0.0 < step < 1.0:
            x = step
    return x


def cap_fixed_length(q: int, rho: float) -> float:
    """Capacity in bits per cycle at length ratio rho."""
    if q < 1:
        raise DomainError("alphabet size must be at least 1")
    if not 0.0 <= rho <= 1.0:
        raise DomainError("rho must lie in [0, 1]")
    if rho <= 2.0 / (q + 1):
        return rho * math.log2(q)
    if rho == 1.0:
        return 0.0
    x = capacity_root_fixed(q, rho)
    inv = 1.0 / rho
    total = 0.0
    for i in range(1, q + 1):
        total += x ** (i - inv)
    return rho * math.log2(total)


def capacity_root_flexible(q: int) -> float:
    """Root in (0, 1] of sum_{i=1}^{q} x^i = 1."""
    if q < 1:
        raise DomainError("alphabet size must be at least 1")
    if q == 1:
        return 1.0
    lo, hi = _BRACKET

    def excess(x: float) -> float:
        acc = 0.0
        for _ in range(q):
            acc = (acc + 1.0) * x
        return acc - 1.0

    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if excess(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def cap_flexible(q: int) -> float:
    """Capacity in bits per cycle when oligo lengths are unconstrained."""
    return -math.log2(capacity_root_flexible(q))


def _log2_int(n: int) -> float:
    # math.log2 overflows converting ints above ~2**1024
    bits = n.bit_length()
    if bits <= 53:
        return math.log2(n)
    shift = bits - 53
    return math.log2(n >> shift) + shift


def empirical_cap(q: int, cycles: int, rho: float, cache: CountCache | None = None) -> float:
    """Finite-size rate log2(count)/cycles at length floor(rho*cycles).

    Converges to cap_fixed_length from below as cycles grows.
    """
    if cycles < 1:
        raise DomainError("cycle count must be at least 1")
    if not 0.0 <= rho <= 1.0:
        raise DomainError("rho must lie in [0, 1]")
    length = int(rho * cycles + 1e-9)
    count = subsequence_count(q, cycles, length, cache)
    return _log2_int(count) / cycles
