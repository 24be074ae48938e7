"""Slow, obviously-correct reference implementations for small inputs.

Nothing here shares code with the dynamic programs it checks. Chains are
built directly from the definition: collect every position pair where k
symbols agree, then combine them in increasing, non-overlapping order.

EDk per chain: the symbols between consecutive k-matches (and before the
first / after the last) form gaps of ``g_a`` symbols in A and ``g_b`` in B,
all of which must be edited. Pairing ``min(g_a, g_b)`` of them as
substitutions and covering the rest with ``|g_a - g_b|`` indels costs
``max(g_a, g_b)``; no schedule does better, since each operation covers at
most one symbol of each side. Without substitutions the gap costs
``g_a + g_b``.
"""

from __future__ import annotations

from typing import Iterator

from lcsk.edk_dp import OpsMode
from lcsk.seq import KMatchSpan, SeqLike, as_bytes, check_k

LCSK_MAX_LEN = 14
EDK_MAX_LEN = 12


class OracleGuardError(ValueError):
    """Input too large for exhaustive evaluation."""


def _guard(a: bytes, b: bytes, limit: int) -> None:
    if len(a) > limit or len(b) > limit:
        raise OracleGuardError(f"oracle limited to length {limit}, got {len(a)} and {len(b)}")


def k_match_positions(a: bytes, b: bytes, k: int) -> list[tuple[int, int]]:
    return [
        (s, t)
        for s in range(len(a) - k + 1)
        for t in range(len(b) - k + 1)
        if all(a[s + f] == b[t + f] for f in range(k))
    ]


def enumerate_chains(a: SeqLike, b: SeqLike, k: int) -> Iterator[list[KMatchSpan]]:
    """Yield every legal k-match chain, including the empty one.

    Exponential; meant for strings of a handful of symbols.
    """
    check_k(k)
    a, b = as_bytes(a), as_bytes(b)
    _guard(a, b, LCSK_MAX_LEN)
    positions = k_match_positions(a, b, k)

    def extend(chain, lo_a, lo_b, start):
        yield list(chain)
        for idx in range(start, len(positions)):
            s, t = positions[idx]
            if s >= lo_a and t >= lo_b:
                chain.append(KMatchSpan(s, t, k))
                yield from extend(chain, s + k, t + k, idx + 1)
                chain.pop()

    yield from extend([], 0, 0, 0)


def gap_cost(g_a: int, g_b: int, mode="full") -> int:
    if OpsMode.parse(mode) is OpsMode.FULL:
        return max(g_a, g_b)
    return g_a + g_b


def chain_cost(a: SeqLike, b: SeqLike, chain: list[KMatchSpan], mode="full") -> int:
    """Edit count when exactly the symbols in ``chain`` are left unedited."""
    a, b = as_bytes(a), as_bytes(b)
    cost = 0
    pa = pb = 0
    for span in chain:
        cost += gap_cost(span.a_start - pa, span.b_start - pb, mode)
        pa, pb = span.a_end, span.b_end
    return cost + gap_cost(len(a) - pa, len(b) - pb, mode)


def brute_lcsk(a: SeqLike, b: SeqLike, k: int) -> int:
    """Longest chain over all k-match combinations; memoized on the next free positions."""
    check_k(k)
    a, b = as_bytes(a), as_bytes(b)
    _guard(a, b, LCSK_MAX_LEN)
    positions = k_match_positions(a, b, k)
    memo: dict[tuple[int, int], int] = {}

    def best(lo_a, lo_b):
        key = (lo_a, lo_b)
        if key not in memo:
            memo[key] = max(
                [1 + best(s + k, t + k) for s, t in positions if s >= lo_a and t >= lo_b],
                default=0,
            )
        return memo[key]

    return best(0, 0)


def brute_edk(a: SeqLike, b: SeqLike, k: int, mode="full") -> int:
    """Minimum chain cost over every legal chain, the empty chain included."""
    check_k(k)
    a, b = as_bytes(a), as_bytes(b)
    _guard(a, b, EDK_MAX_LEN)
    n, m = len(a), len(b)
    positions = k_match_positions(a, b, k)
    memo: dict[tuple[int, int], int] = {}

    def best(lo_a, lo_b):
        key = (lo_a, lo_b)
        if key not in memo:
            options = [gap_cost(n - lo_a, m - lo_b, mode)]
            for s, t in positions:
                if s >= lo_a and t >= lo_b:
                    options.append(gap_cost(s - lo_a, t - lo_b, mode) + best(s + k, t + k))
            memo[key] = min(options)
        return memo[key]

    return best(0, 0)


def classic_lcs(a: SeqLike, b: SeqLike) -> int:
    a, b = as_bytes(a), as_bytes(b)
    table = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            if a[i - 1] == b[j - 1]:
                table[i][j] = table[i - 1][j - 1] + 1
            else:
                table[i][j] = max(table[i - 1][j], table[i][j - 1])
    return table[-1][-1]


def levenshtein(a: SeqLike, b: SeqLike) -> int:
    a, b = as_bytes(a), as_bytes(b)
    table = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
    for i in range(len(a) + 1):
        table[i][0] = i
    for j in range(len(b) + 1):
        table[0][j] = j
    for i in range(1, len(a) + 1):
        for j in range(1, len(b) + 1):
            table[i][j] = min(
                table[i - 1][j] + 1,
                table[i][j - 1] + 1,
                table[i - 1][j - 1] + (a[i - 1] != b[j - 1]),
            )
    return table[-1][-1]


def longest_common_suffix(a: SeqLike, b: SeqLike) -> int:
    a, b = as_bytes(a), as_bytes(b)
    n = 0
    while n < min(len(a), len(b)) and a[len(a) - 1 - n] == b[len(b) - 1 - n]:
        n += 1
    return n
