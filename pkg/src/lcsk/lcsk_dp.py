"""LCSk: the longest common subsequence built from non-overlapping k-length matches.

Two entry points share one recurrence::

    L(i, j) = max(L(i, j-1), L(i-1, j), L(i-k, j-k) + [k-match starting at (i, j)])

:func:`lcsk_score` keeps a rolling window of ``k + 1`` rows and returns the
score only. :func:`lcsk_traceback` fills the whole table, storing a single
predecessor per cell, and walks it back to recover a witness chain.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from lcsk.seq import KMatchSpan, SeqLike, as_bytes, check_k


class LcskCell(NamedTuple):
    score: int
    pred: Optional[tuple[int, int]]  # 0-based start of the chain's last k-match


EMPTY_CELL = LcskCell(0, None)


@dataclass
class LcskResult:
    length: int
    matches: list[KMatchSpan] = field(default_factory=list)

    def validate(self, a: SeqLike, b: SeqLike, k: int) -> None:
        """Raise ValueError unless this is a legal chain of ``length`` k-matches."""
        if self.length != len(self.matches):
            raise ValueError(f"length {self.length} != {len(self.matches)} matches")
        check_chain(a, b, k, self.matches)

    def to_dict(self) -> dict:
        return {"length": self.length, "matches": [m.to_dict() for m in self.matches]}


def check_chain(a: SeqLike, b: SeqLike, k: int, spans: list[KMatchSpan]) -> None:
    """Raise ValueError if ``spans`` is not an ordered, non-overlapping k-match chain."""
    a, b = as_bytes(a), as_bytes(b)
    prev = None
    for span in spans:
        if span.len != k:
            raise ValueError(f"{span} has length {span.len}, expected {k}")
        if span.a_start < 0 or span.b_start < 0 or span.a_end > len(a) or span.b_end > len(b):
            raise ValueError(f"{span} is out of range")
        if a[span.a_start:span.a_end] != b[span.b_start:span.b_end]:
            raise ValueError(f"{span} does not match")
        if prev is not None and (span.a_start < prev.a_end or span.b_start < prev.b_end):
            raise ValueError(f"{span} overlaps or precedes {prev}")
        prev = span


def lcsk_score(a: SeqLike, b: SeqLike, k: int) -> int:
    """Score-only LCSk in ``O(|A||B|)`` time and ``O(k * min(|A|, |B|))`` memory.

    Degenerate inputs (empty, or ``k`` longer than either sequence) score 0.

    >>> lcsk_score("TGCGTGTG", "GTTGTGCC", 2)
    2
    """
    check_k(k)
    a, b = as_bytes(a), as_bytes(b)
    if len(b) > len(a):
        a, b = b, a
    m = len(b)
    if k > m:
        return 0
    # Rows are indexed by prefix length here: row r holds L for a[:r]. The
    # deque holds rows r-k .. r-1, so rows[0] is the k-back diagonal source.
    rows = deque([[0] * (m + 1) for _ in range(k)], maxlen=k)
    dc_prev = [0] * (m + 1)
    for x in a:
        back = rows[0]
        up = rows[-1]
        cur = [0] * (m + 1)
        dc = [0] * (m + 1)
        left = 0
        for c in range(1, m + 1):
            if x == b[c - 1]:
                d = dc_prev[c - 1] + 1
                dc[c] = d
            else:
                d = 0
            v = up[c]
            if left > v:
                v = left
            if d >= k:
                diag = back[c - k] + 1
                if diag > v:
                    v = diag
            cur[c] = v
            left = v
        rows.append(cur)
        dc_prev = dc
    return rows[-1][m]


def update_pred(
    current: tuple[int, int],
    left: LcskCell,
    up: LcskCell,
    diag_k: LcskCell,
    is_k_match: bool,
) -> LcskCell:
    """Finalize one cell from its three sources, keeping a single predecessor.

    Only sources attaining the maximum may contribute a predecessor; among
    those, ties are broken diagonal k-match > left > up. Keeping just one of
    several equal-length predecessors never loses an optimal chain.
    """
    best = left.score if left.score >= up.score else up.score
    if is_k_match and diag_k.score + 1 >= best:
        return LcskCell(diag_k.score + 1, current)
    if best == 0:
        return EMPTY_CELL
    return left if left.score == best else up


@dataclass
class LcskTable:
    """Full DP table. ``cells[i][j]`` covers the match starting at ``(i-1, j-1)``.

    Row 0 and column 0 are boundary cells; the interior is
    ``(|A|-k+1) x (|B|-k+1)``.
    """

    k: int
    cells: list[list[LcskCell]]

    @property
    def score(self) -> int:
        return self.cells[-1][-1].score

    def scores(self) -> list[list[int]]:
        return [[c.score for c in row] for row in self.cells]


def lcsk_table(a: SeqLike, b: SeqLike, k: int) -> LcskTable:
    check_k(k)
    a, b = as_bytes(a), as_bytes(b)
    n, m = len(a), len(b)
    if k > min(n, m):
        return LcskTable(k, [[EMPTY_CELL]])
    width = m - k + 1
    cells = [[EMPTY_CELL] * (width + 1)]
    dc_prev = [0] * (m + 1)
    for r in range(1, n + 1):
        x = a[r - 1]
        dc = [0] * (m + 1)
        for c in range(1, m + 1):
            if x == b[c - 1]:
                dc[c] = dc_prev[c - 1] + 1
        dc_prev = dc
        if r < k:
            continue
        # dcount runs k-1 rows ahead of the score row it feeds.
        i = r - k + 1
        up_row = cells[i - 1]
        back_row = cells[i - k] if i > k else cells[0]
        row = [EMPTY_CELL] * (width + 1)
        for j in range(1, width + 1):
            diag = back_row[j - k] if j > k else EMPTY_CELL
            row[j] = update_pred((i - 1, j - 1), row[j - 1], up_row[j], diag, dc[j + k - 1] >= k)
        cells.append(row)
    return LcskTable(k, cells)


def lcsk_traceback(a: SeqLike, b: SeqLike, k: int) -> LcskResult:
    """LCSk score plus one witness chain, in ``O(|A||B|)`` time and memory.

    >>> r = lcsk_traceback("CTGCTTTG", "CTTGCTTT", 2)
    >>> r.length, [(s.a_start, s.b_start) for s in r.matches]
    (3, [(0, 0), (2, 3), (5, 5)])
    """
    table = lcsk_table(a, b, k)
    cells = table.cells
    i, j = len(cells) - 1, len(cells[0]) - 1
    chain = []
    while i > 0 and j > 0:
        cell = cells[i][j]
        if cell.pred is None:
            break
        x, y = cell.pred
        if (x + 1, y + 1) == (i, j):
            chain.append(KMatchSpan(x, y, k))
            i -= k
            j -= k
        else:
            i, j = x + 1, y + 1
    chain.reverse()
    return LcskResult(len(chain), chain)
