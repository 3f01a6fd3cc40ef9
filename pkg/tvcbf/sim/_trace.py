# -*- coding: utf-8 -*-
# copyright: tvcbf developers, BSD-3-Clause License (see LICENSE file)
"""Per-step trace records and their CSV file format."""
import pathlib
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

import pandas as pd

from tvcbf.qp import ConstraintLabel
from tvcbf.traffic import SignalState

__author__: List[str] = ["tvcbf developers"]
__all__: List[str] = ["TRACE_COLUMNS", "TraceRecord", "export_trace", "read_trace"]

# separator of constraint labels inside the "active" column
LABEL_SEP = "|"


class TraceRecord(NamedTuple):
    """State, inputs and barrier values at one control step.

    Attributes
    ----------
    t : float
        Time ``k * dt``, in s.
    x_f, v_f, x_l, v_l : float
        Vehicle positions and speeds at ``t``.
    u, mu, u_nom : float
        Applied force, applied synthetic input and nominal force.
    h1 : float
        Spacing error δ.
    h2 : float
        Speed margin ``V_max - V_f``.
    h3 : float
        Traffic barrier enforced by the mode; NaN without signals.
    signal_index : int
        Zero-based index of the next signal, -1 without signals.
    signal_state : SignalState or None
        Light of that signal at ``t``.
    active : tuple of ConstraintLabel
        Constraints holding with equality at the applied input.
    qp_infeasible : bool
        Whether the feasible set was empty and a fallback was applied.
    """

    t: float
    x_f: float
    v_f: float
    x_l: float
    v_l: float
    u: float
    mu: float
    u_nom: float
    h1: float
    h2: float
    h3: float
    signal_index: int
    signal_state: Optional[SignalState]
    active: Tuple[ConstraintLabel, ...]
    qp_infeasible: bool


TRACE_COLUMNS = TraceRecord._fields
_FLOAT_COLUMNS = TRACE_COLUMNS[:11]


def _to_row(record: TraceRecord) -> dict:
    row = record._asdict()
    state = record.signal_state
    row["signal_state"] = "" if state is None else str(state)
    row["active"] = LABEL_SEP.join(str(label) for label in record.active)
    return row


def export_trace(
    trace: Sequence[TraceRecord], path: Union[str, pathlib.Path]
) -> None:
    """Write ``trace`` as CSV: one header row, then one row per step.

    Floats use fixed 12-decimal notation; the file is UTF-8 with LF line
    endings, so equal traces give byte-identical files.

    Raises
    ------
    OSError
        If the file cannot be written; the message names the path.
    """
    frame = pd.DataFrame([_to_row(r) for r in trace], columns=list(TRACE_COLUMNS))
    try:
        frame.to_csv(
            path,
            index=False,
            float_format="%.12f",
            na_rep="nan",
            encoding="utf-8",
            lineterminator="\n",
        )
    except OSError as exc:
        raise OSError(f"could not write trace to {path}: {exc}") from exc


def read_trace(path: Union[str, pathlib.Path]) -> List[TraceRecord]:
    """Parse a CSV written by :func:`export_trace` back into records.

    Raises
    ------
    OSError
        If the file cannot be read.
    ValueError
        If the header does not match the trace columns.
    """
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except OSError as exc:
        raise OSError(f"could not read trace from {path}: {exc}") from exc
    if tuple(frame.columns) != TRACE_COLUMNS:
        raise ValueError(
            f"{path} is not a trace file, found columns {list(frame.columns)}"
        )
    records = []
    for row in frame.itertuples(index=False):
        values = row._asdict()
        floats = [float(values[name]) for name in _FLOAT_COLUMNS]
        state = values["signal_state"]
        active = values["active"]
        records.append(
            TraceRecord(
                *floats,
                signal_index=int(values["signal_index"]),
                signal_state=SignalState(state) if state else None,
                active=tuple(ConstraintLabel(s) for s in active.split(LABEL_SEP))
                if active
                else (),
                qp_infeasible=values["qp_infeasible"] == "True",
            )
        )
    return records

