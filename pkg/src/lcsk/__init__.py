"""LCSk similarity and EDk edit distance over k-length substring matches."""

from lcsk.edk_dp import EditOp, EdkResult, OpKind, OpsMode, edk_from_lcsk_identity, edk_score, edk_traceback
from lcsk.lcsk_dp import LcskCell, LcskResult, lcsk_score, lcsk_table, lcsk_traceback, update_pred
from lcsk.seq import KMatchSpan, Params, Sequence, dcount_cell, k_match, normalize

__all__ = [
    "EditOp",
    "EdkResult",
    "KMatchSpan",
    "LcskCell",
    "LcskResult",
    "OpKind",
    "OpsMode",
    "Params",
    "Sequence",
    "dcount_cell",
    "edk_from_lcsk_identity",
    "edk_score",
    "edk_traceback",
    "k_match",
    "lcsk_score",
    "lcsk_table",
    "lcsk_traceback",
    "normalize",
    "update_pred",
]
