"""Sequence representation, k-match detection and the diagonal counter.

All positions in this package are 0-based. The classic formulation of the
problem indexes symbols from 1; a match reported there as ``(i, j)`` is
``KMatchSpan(i - 1, j - 1, k)`` here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

SeqLike = Union["Sequence", bytes, bytearray, str]


@dataclass(frozen=True)
class Sequence:
    """An immutable byte string with an identifier."""

    id: str
    symbols: bytes

    def __post_init__(self):
        if not isinstance(self.symbols, bytes):
            object.__setattr__(self, "symbols", bytes(self.symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.symbols.decode("latin-1")


@dataclass(frozen=True)
class Params:
    k: int

    def __post_init__(self):
        check_k(self.k)


@dataclass(frozen=True)
class KMatchSpan:
    """A matched pair of k-length substrings starting at ``a_start`` / ``b_start``."""

    a_start: int
    b_start: int
    len: int

    @property
    def a_end(self) -> int:
        return self.a_start + self.len

    @property
    def b_end(self) -> int:
        return self.b_start + self.len

    def to_dict(self) -> dict:
        return {"a_start": self.a_start, "b_start": self.b_start, "len": self.len}


def check_k(k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    return k


def as_bytes(seq: SeqLike) -> bytes:
    """Return the raw symbols of ``seq``; ``str`` is encoded as latin-1."""
    if isinstance(seq, Sequence):
        return seq.symbols
    if isinstance(seq, bytes):
        return seq
    if isinstance(seq, bytearray):
        return bytes(seq)
    if isinstance(seq, str):
        return seq.encode("latin-1")
    raise TypeError(f"expected a sequence, got {type(seq).__name__}")


def normalize(raw: bytes | str, uppercase: bool = False, id: str = "") -> Sequence:
    """Build a :class:`Sequence`, optionally folding ASCII letters to upper case.

    Non-ASCII bytes are left untouched (``bytes.upper`` only maps a-z).
    """
    data = as_bytes(raw)
    if uppercase:
        data = data.upper()
    return Sequence(id, data)


def k_match(a: SeqLike, b: SeqLike, i: int, j: int, k: int) -> bool:
    """True iff ``a[i:i+k] == b[j:j+k]``.

    Raises IndexError when either window does not fit inside its sequence.
    """
    check_k(k)
    a, b = as_bytes(a), as_bytes(b)
    if k > min(len(a), len(b)):
        raise IndexError(f"k={k} exceeds the shorter sequence length {min(len(a), len(b))}")
    if not 0 <= i <= len(a) - k:
        raise IndexError(f"i={i} out of range for |A|={len(a)}, k={k}")
    if not 0 <= j <= len(b) - k:
        raise IndexError(f"j={j} out of range for |B|={len(b)}, k={k}")
    return a[i:i + k] == b[j:j + k]


def dcount_cell(prev_diag: int, a_sym: int, b_sym: int) -> int:
    """One step of the diagonal counter: extend the common suffix or reset it."""
    return prev_diag + 1 if a_sym == b_sym else 0


def dcount_table(a: SeqLike, b: SeqLike) -> list[list[int]]:
    """Full ``(|A|+1) x (|B|+1)`` diagonal-counter table.

    ``table[i][j]`` is the length of the longest common suffix of ``a[:i]``
    and ``b[:j]``; row 0 and column 0 are zero. Quadratic memory, intended
    for inspection and tests; the DP modules keep a single rolling row.
    """
    a, b = as_bytes(a), as_bytes(b)
    m = len(b)
    table = [[0] * (m + 1)]
    for x in a:
        prev = table[-1]
        row = [0] * (m + 1)
        for j in range(1, m + 1):
            if x == b[j - 1]:
                row[j] = prev[j - 1] + 1
        table.append(row)
    return table


def advance_dcount(row: list[int], x: int, b: bytes) -> None:
    """Advance a rolling dcount row by one symbol ``x`` of A, in place.

    Iterates right to left so ``row[j - 1]`` still holds the previous row's
    value when ``row[j]`` is updated.
    """
    for j in range(len(b), 0, -1):
        row[j] = row[j - 1] + 1 if x == b[j - 1] else 0
