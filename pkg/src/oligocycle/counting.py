"""Exact counting and enumerative indexing of synthesizable oligos.

The number of distinct oligos of length L reachable in C cycles over the
alternating stream equals the size of the deletion sphere at radius C - L,
which satisfies a two-variable recursion solvable with arbitrary-precision
integers.  The same position walk that proves the count also yields a
bijection between {0, ..., count-1} and the oligos in lexicographic order,
which is what the enumerative (lookup) codec builds on.
"""

from __future__ import annotations

from math import comb

from .errors import DomainError
from .sequence import Oligo


class CountCache:
    """Memo table for deletion-sphere sizes keyed by (q, cycles, deletions).

    Entries are pure functions of their key and are only ever inserted, so
    concurrent readers racing a writer at worst recompute the same value.
    """

    __slots__ = ("_memo",)

    def __init__(self) -> None:
        self._memo: dict[tuple[int, int, int], int] = {}

    def __len__(self) -> int:
        return len(self._memo)


_shared_cache = CountCache()


def deletion_ball_size(q: int, cycles: int, deletions: int, cache: CountCache | None = None) -> int:
    """Number of distinct subsequences left after deleting exactly
    *deletions* symbols from the length-*cycles* alternating prefix over 1..q.
    """
    if q < 1:
        raise DomainError("alphabet size must be at least 1")
    if cycles < 0:
        raise DomainError("cycle count must be non-negative")
    if not 0 <= deletions <= cycles:
        raise DomainError("deletions must lie in 0..cycles")
    memo = (cache if cache is not None else _shared_cache)._memo

    def rec(q: int, c: int, t: int) -> int:
        if t == 0 or t == c or q == 1:
            return 1
        key = (q, c, t)
        hit = memo.get(key)
        if hit is not None:
            return hit
        keep = c - t
        # deleting i of the keep slots from the head symbol's run leaves a
        # (q-1)-letter problem on the remaining t positions
        val = sum(comb(keep, i) * rec(q - 1, t, t - i) for i in range(min(t, keep) + 1))
        memo[key] = val
        return val

    return rec(q, cycles, deletions)


def subsequence_count(q: int, cycles: int, length: int, cache: CountCache | None = None) -> int:
    """Number of distinct length-*length* oligos reachable in *cycles* cycles."""
    if not 0 <= length <= cycles:
        raise DomainError("length must lie in 0..cycles")
    return deletion_ball_size(q, cycles, cycles - length, cache)


def brute_force_count(q: int, cycles: int, length: int) -> int:
    """Reference implementation by explicit enumeration (cycles capped at 20)."""
    if cycles > 20:
        raise DomainError("brute force enumeration is capped at 20 cycles")
    if not 0 <= length <= cycles:
        raise DomainError("length must lie in 0..cycles")
    stream = tuple(i % q + 1 for i in range(cycles))
    seen: set[tuple[int, ...]] = set()
    for mask in range(1 << cycles):
        if mask.bit_count() != length:
            continue
        seen.add(tuple(stream[i] for i in range(cycles) if mask >> i & 1))
    return len(seen)


def _next_offer(pos: int, symbol: int, q: int) -> int:
    """First stream position >= pos (0-based) whose offer equals *symbol*."""
    return pos + (symbol - 1 - pos) % q


def _suffix_count(q: int, window: int, length: int, cache: CountCache | None) -> int:
    # the stream after any position is the full stream under a relabeling of
    # the alphabet, so suffix counts depend only on the window length
    if length > window:
        return 0
    return subsequence_count(q, window, length, cache)


def subsequence_rank(q: int, cycles: int, oligo: Oligo, cache: CountCache | None = None) -> int:
    """Index of *oligo* among the distinct same-length oligos reachable in
    *cycles* cycles, ordered lexicographically by symbol value.

    Raises DomainError when the oligo does not embed in the offer prefix.
    """
    if oligo.q > q:
        raise DomainError("oligo alphabet exceeds the stream alphabet")
    pos = 0
    index = 0
    remaining = len(oligo.symbols)
    for sym in oligo.symbols:
        for smaller in range(1, sym):
            branch = _next_offer(pos, smaller, q)
            if branch < cycles:
                index += _suffix_count(q, cycles - branch - 1, remaining - 1, cache)
        here = _next_offer(pos, sym, q)
        if here >= cycles:
            raise DomainError("oligo is not a subsequence of the offer prefix")
        pos = here + 1
        remaining -= 1
    return index


def subsequence_unrank(
    q: int, cycles: int, length: int, index: int, cache: CountCache | None = None
) -> Oligo:
    """Inverse of subsequence_rank: the oligo at *index* in lexicographic order."""
    total = subsequence_count(q, cycles, length, cache)
    if not 0 <= index < total:
        raise DomainError(f"index must lie in 0..{total - 1}")
    pos = 0
    out: list[int] = []
    for remaining in range(length, 0, -1):
        for sym in range(1, q + 1):
            here = _next_offer(pos, sym, q)
            if here >= cycles:
                continue
            below = _suffix_count(q, cycles - here - 1, remaining - 1, cache)
            if index < below:
                out.append(sym)
                pos = here + 1
                break
            index -= below
        else:
            raise RuntimeError("rank bookkeeping exhausted the alphabet")
    return Oligo(tuple(out), q)
