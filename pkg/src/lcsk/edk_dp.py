"""EDk: edit distance where every unedited symbol belongs to a k-match chain.

The recurrence, over prefix lengths ``i`` of A and ``j`` of B::

    E(i, 0) = i,  E(0, j) = j
    E(i, j) = min(E(i-1, j) + 1,                    # delete a[i-1]
                  E(i, j-1) + 1,                    # insert b[j-1]
                  E(i-k, j-k)      if dcount >= k   # k-match ending here
                  E(i-1, j-1) + 1  otherwise)       # substitute

Equal symbols outside a k-match still cost one substitution. With
``mode="indel"`` the substitute transition is dropped and the distance equals
``|A| + |B| - 2k * LCSk(A, B)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from lcsk.lcsk_dp import check_chain
from lcsk.seq import KMatchSpan, SeqLike, as_bytes, check_k


class OpsMode(str, Enum):
    FULL = "full"
    INDEL = "indel"

    @classmethod
    def parse(cls, mode) -> "OpsMode":
        if isinstance(mode, cls):
            return mode
        if mode == "indel_only":
            return cls.INDEL
        return cls(mode)


class OpKind(str, Enum):
    INSERT = "insert"
    DELETE = "delete"
    SUBSTITUTE = "substitute"
    KMATCH = "kmatch"


@dataclass(frozen=True)
class EditOp:
    kind: OpKind
    a_pos: Optional[int]
    b_pos: Optional[int]
    len: int = 1

    def to_dict(self) -> dict:
        return {"op": self.kind.value, "a_pos": self.a_pos, "b_pos": self.b_pos, "len": self.len}

    @classmethod
    def from_dict(cls, d: dict) -> "EditOp":
        return cls(OpKind(d["op"]), d.get("a_pos"), d.get("b_pos"), d.get("len", 1))


@dataclass
class EdkResult:
    distance: int
    script: list[EditOp] = field(default_factory=list)

    @property
    def matches(self) -> list[KMatchSpan]:
        return [KMatchSpan(op.a_pos, op.b_pos, op.len) for op in self.script if op.kind is OpKind.KMATCH]

    def validate(self, a: SeqLike, b: SeqLike, k: int, mode="full") -> None:
        """Raise ValueError unless the script is a legal, exact, fully covering edit of A into B."""
        a, b = as_bytes(a), as_bytes(b)
        mode = OpsMode.parse(mode)
        edits = sum(op.kind is not OpKind.KMATCH for op in self.script)
        if edits != self.distance:
            raise ValueError(f"distance {self.distance} != {edits} edit ops")
        ia = ib = 0
        for op in self.script:
            if op.kind is OpKind.INSERT:
                if op.a_pos is not None or op.b_pos != ib or op.len != 1:
                    raise ValueError(f"bad insert {op} at a={ia}, b={ib}")
                ib += 1
            elif op.kind is OpKind.DELETE:
                if op.b_pos is not None or op.a_pos != ia or op.len != 1:
                    raise ValueError(f"bad delete {op} at a={ia}, b={ib}")
                ia += 1
            elif op.kind is OpKind.SUBSTITUTE:
                if mode is OpsMode.INDEL:
                    raise ValueError("substitution in indel-only script")
                if (op.a_pos, op.b_pos, op.len) != (ia, ib, 1):
                    raise ValueError(f"bad substitution {op} at a={ia}, b={ib}")
                ia += 1
                ib += 1
            else:
                if (op.a_pos, op.b_pos, op.len) != (ia, ib, k):
                    raise ValueError(f"bad k-match {op} at a={ia}, b={ib}")
                ia += k
                ib += k
        if (ia, ib) != (len(a), len(b)):
            raise ValueError(f"script covers ({ia}, {ib}) of ({len(a)}, {len(b)})")
        check_chain(a, b, k, self.matches)
        if apply_script(a, b, self.script) != b:
            raise ValueError("replaying the script does not produce B")

    def to_dict(self) -> dict:
        return {"distance": self.distance, "script": [op.to_dict() for op in self.script]}


def apply_script(a: SeqLike, b: SeqLike, script: list[EditOp]) -> bytes:
    """Replay ``script`` on A. Inserted and substituted symbols are read from B."""
    a, b = as_bytes(a), as_bytes(b)
    out = bytearray()
    for op in script:
        if op.kind is OpKind.KMATCH:
            out += a[op.a_pos:op.a_pos + op.len]
        elif op.kind in (OpKind.INSERT, OpKind.SUBSTITUTE):
            out.append(b[op.b_pos])
    return bytes(out)


def edk_from_lcsk_identity(len_a: int, len_b: int, k: int, lcsk_value: int) -> int:
    """Indel-only EDk from an LCSk value: ``len_a + len_b - 2*k*lcsk_value``."""
    check_k(k)
    if lcsk_value < 0 or lcsk_value > min(len_a, len_b) // k:
        raise ValueError(f"LCSk value {lcsk_value} impossible for lengths {len_a}, {len_b} and k={k}")
    result = len_a + len_b - 2 * k * lcsk_value
    if result < 0:
        raise ValueError("inconsistent inputs: negative distance")
    return result


def edk_score(a: SeqLike, b: SeqLike, k: int, mode="full") -> int:
    """Score-only EDk in ``O(|A||B|)`` time and ``O(k * min(|A|, |B|))`` memory."""
    check_k(k)
    mode = OpsMode.parse(mode)
    a, b = as_bytes(a), as_bytes(b)
    # The distance is symmetric, so the shorter sequence indexes the columns.
    if len(b) > len(a):
        a, b = b, a
    m = len(b)
    substitute = mode is OpsMode.FULL
    first = list(range(m + 1))
    rows = deque([first] * k, maxlen=k)  # only rows[-1] is read until k rows are real
    dc_prev = [0] * (m + 1)
    for i, x in enumerate(a, 1):
        back = rows[0]
        up = rows[-1]
        cur = [i] * (m + 1)
        dc = [0] * (m + 1)
        left = i
        for c in range(1, m + 1):
            v = up[c] + 1
            if left + 1 < v:
                v = left + 1
            d = dc_prev[c - 1] + 1 if x == b[c - 1] else 0
            dc[c] = d
            if d >= k:
                diag = back[c - k]
                if diag < v:
                    v = diag
            elif substitute:
                diag = up[c - 1] + 1
                if diag < v:
                    v = diag
            cur[c] = v
            left = v
        rows.append(cur)
        dc_prev = dc
    return rows[-1][m]


# traceback pointers, in tie-break priority order
_KMATCH, _SUB, _DEL, _INS = 0, 1, 2, 3


def edk_table(a: SeqLike, b: SeqLike, k: int, mode="full") -> tuple[list[list[int]], list[list[int]]]:
    """Full ``(|A|+1) x (|B|+1)`` score and pointer tables."""
    check_k(k)
    substitute = OpsMode.parse(mode) is OpsMode.FULL
    a, b = as_bytes(a), as_bytes(b)
    n, m = len(a), len(b)
    score = [list(range(m + 1))]
    ptr = [[_INS] * (m + 1)]
    dc_prev = [0] * (m + 1)
    for i in range(1, n + 1):
        x = a[i - 1]
        up = score[i - 1]
        row = [i] * (m + 1)
        prow = [_DEL] * (m + 1)
        dc = [0] * (m + 1)
        for j in range(1, m + 1):
            d = dc_prev[j - 1] + 1 if x == b[j - 1] else 0
            dc[j] = d
            if d >= k:
                best, p = score[i - k][j - k], _KMATCH
            elif substitute:
                best, p = up[j - 1] + 1, _SUB
            else:
                best, p = up[j] + 1, _DEL
            if up[j] + 1 < best:
                best, p = up[j] + 1, _DEL
            if row[j - 1] + 1 < best:
                best, p = row[j - 1] + 1, _INS
            row[j] = best
            prow[j] = p
        score.append(row)
        ptr.append(prow)
        dc_prev = dc
    return score, ptr


def edk_traceback(a: SeqLike, b: SeqLike, k: int, mode="full") -> EdkResult:
    """EDk distance plus an edit script, using ``O(|A||B|)`` memory.

    >>> r = edk_traceback("AB", "AB", 2)
    >>> r.distance, [op.kind.value for op in r.script]
    (0, ['kmatch'])
    """
    score, ptr = edk_table(a, b, k, mode)
    i, j = len(score) - 1, len(score[0]) - 1
    script = []
    while i > 0 or j > 0:
        p = ptr[i][j]
        if p == _KMATCH:
            i -= k
            j -= k
            script.append(EditOp(OpKind.KMATCH, i, j, k))
        elif p == _SUB:
            i -= 1
            j -= 1
            script.append(EditOp(OpKind.SUBSTITUTE, i, j))
        elif p == _DEL:
            i -= 1
            script.append(EditOp(OpKind.DELETE, i, None))
        else:
            j -= 1
            script.append(EditOp(OpKind.INSERT, None, j))
    script.reverse()
    return EdkResult(score[-1][-1], script)
