"""Sequence ingestion (FASTA / plain text) and all-pairs score matrices."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from lcsk.edk_dp import OpsMode, edk_score
from lcsk.lcsk_dp import lcsk_score
from lcsk.seq import Sequence, check_k, normalize

log = logging.getLogger(__name__)


class FormatError(ValueError):
    pass


@dataclass
class Dataset:
    records: list[Sequence] = field(default_factory=list)
    source: str = "<inline>"

    def __len__(self) -> int:
        return len(self.records)

    @property
    def ids(self) -> list[str]:
        return [r.id for r in self.records]


def parse_fasta(data: bytes | str, uppercase: bool = False, source: str = "<inline>") -> Dataset:
    """Parse FASTA text. Sequence lines may wrap; all whitespace is dropped.

    >>> parse_fasta(b">s1\\nTGCG\\nTGTG\\n").records[0].symbols
    b'TGCGTGTG'
    """
    if isinstance(data, str):
        data = data.encode("latin-1")
    records: list[Sequence] = []
    seen: set[str] = set()
    current_id = None
    chunks: list[bytes] = []

    def flush():
        if current_id is None:
            return
        body = b"".join(chunks)
        if not body:
            log.warning("record %r in %s is empty", current_id, source)
        records.append(normalize(body, uppercase, id=current_id))

    for lineno, line in enumerate(data.splitlines(), 1):
        line = line.strip()
        if line.startswith(b">"):
            flush()
            header = line[1:].decode("latin-1").strip()
            current_id = header.split()[0] if header else ""
            if current_id in seen:
                raise FormatError(f"{source}:{lineno}: duplicate record id {current_id!r}")
            seen.add(current_id)
            chunks = []
        elif line:
            if current_id is None:
                raise FormatError(f"{source}:{lineno}: sequence data before the first '>' header")
            chunks.append(b"".join(line.split()))
    flush()
    return Dataset(records, source)


def parse_sequences(data: bytes, uppercase: bool = False, source: str = "<inline>") -> Dataset:
    """FASTA if the first non-blank byte is '>', otherwise one plain-text record."""
    if data.lstrip().startswith(b">"):
        return parse_fasta(data, uppercase, source)
    if data.endswith(b"\r\n"):
        data = data[:-2]
    elif data.endswith(b"\n"):
        data = data[:-1]
    return Dataset([normalize(data, uppercase, id=source)], source)


def read_dataset(path: str, uppercase: bool = False) -> Dataset:
    with open(path, "rb") as fh:
        return parse_sequences(fh.read(), uppercase, source=path)


@dataclass
class MatrixReport:
    metric: str
    k: int
    mode: str
    ids: list[str]
    values: list[list[int]]

    def to_tsv(self) -> str:
        lines = ["\t".join([self.metric, *self.ids])]
        for rid, row in zip(self.ids, self.values):
            lines.append("\t".join([rid, *map(str, row)]))
        return "\n".join(lines) + "\n"


def pair_score(metric: str, a: bytes, b: bytes, k: int, mode: str = "full") -> int:
    if metric == "lcsk":
        return lcsk_score(a, b, k)
    if metric == "edk":
        return edk_score(a, b, k, mode)
    raise ValueError(f"unknown metric {metric!r}")


def _score_task(args):
    return pair_score(*args)


def score_matrix(dataset: Dataset, metric: str, k: int, mode: str = "full", jobs: int = 1) -> MatrixReport:
    """All-pairs scores. Both metrics are symmetric, so only the upper triangle is computed.

    Output does not depend on ``jobs``: results are placed by record index.
    """
    check_k(k)
    mode = OpsMode.parse(mode).value
    if not dataset.records:
        raise ValueError("dataset has no records")
    seqs = [r.symbols for r in dataset.records]
    pairs = list(combinations_with_replacement(range(len(seqs)), 2))
    tasks = [(metric, seqs[i], seqs[j], k, mode) for i, j in pairs]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            scores = list(pool.map(_score_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        scores = [_score_task(t) for t in tasks]
    n = len(seqs)
    values = [[0] * n for _ in range(n)]
    for (i, j), s in zip(pairs, scores):
        values[i][j] = values[j][i] = s
    return MatrixReport(metric, k, mode, dataset.ids, values)
