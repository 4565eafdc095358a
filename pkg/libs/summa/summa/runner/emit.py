"""Machine-readable outputs.

CSV floats are written with 17 significant digits so that every value parses
back to the same double; JSON floats use the shortest round-tripping repr.
"""
from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Optional, Sequence

import pandas as pd
from theflow.settings import settings as flowsettings

from summa.base import ProbeResult, VerificationRecord

from .config import VERSION_KEY, ExperimentConfig
from .tables import TableRow

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"
RECORD_COLUMNS = [
    "form_id",
    "field",
    "m",
    "k",
    "N",
    "pspec",
    "partition",
    "q",
    "lhs",
    "norm",
    "certified",
    "constant",
    "formula_id",
    "ratio",
    "holds",
]
PROBE_COLUMNS = ["family", "s", "N", "lhs", "norm", "certified", "ratio"]


def _extent(dims: Sequence[int]) -> int | str:
    if len(set(dims)) == 1:
        return dims[0]
    return "x".join(str(n) for n in dims)


def record_row(record: VerificationRecord) -> dict[str, Any]:
    return {
        "form_id": record.form_id,
        "field": record.field.value,
        "m": record.m,
        "k": record.k,
        "N": _extent(record.dims),
        "pspec": record.pspec,
        "partition": record.partition,
        "q": record.q,
        "lhs": record.lhs,
        "norm": record.norm.value,
        "certified": record.norm.certified,
        "constant": record.constant_bound.value,
        "formula_id": record.constant_bound.formula_id,
        "ratio": record.ratio,
        "holds": record.holds,
    }


def records_frame(records: Sequence[VerificationRecord]) -> pd.DataFrame:
    return pd.DataFrame([record_row(r) for r in records], columns=RECORD_COLUMNS)


def probe_frame(result: ProbeResult) -> pd.DataFrame:
    rows = [
        {
            "family": result.family,
            "s": result.exponent_s,
            "N": point.n,
            "lhs": point.lhs,
            "norm": point.norm,
            "certified": point.certified,
            "ratio": point.ratio,
        }
        for point in result.points
    ]
    return pd.DataFrame(rows, columns=PROBE_COLUMNS)


def table_frame(rows: Sequence[TableRow]) -> pd.DataFrame:
    return pd.DataFrame([row.flat() for row in rows])


def to_csv(payload: Any) -> str:
    if isinstance(payload, ProbeResult):
        frame = probe_frame(payload)
    elif payload and isinstance(payload[0], TableRow):
        frame = table_frame(payload)
    else:
        frame = records_frame(payload)
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def to_json(payload: Any) -> str:
    if isinstance(payload, ProbeResult):
        data: Any = payload.model_dump(mode="json")
    else:
        data = [item.model_dump(mode="json") for item in payload]
    return json.dumps(data, indent=2)


def emit(payload: Any, format: str = "csv", path: Optional[str | Path] = None) -> str:
    """Render records, a probe result or table rows; write them to `path`
    when given. Returns the rendered text.
    """
    if format == "csv":
        text = to_csv(payload)
    elif format == "json":
        text = to_json(payload)
    else:
        raise ValueError(f"unknown output format {format!r}")

    if path is not None:
        path = Path(path)
        try:
            path.write_text(text)
        except OSError as e:
            raise OSError(f"cannot write {path}: {e.strerror or e}") from e
        logger.info(f"Wrote {format} output to {path}")
    return text


def write_provenance(config: ExperimentConfig, out: str | Path) -> Path:
    """Write the resolved config next to an output file as <out>.config.json,
    stamped with the summa version that produced it
    """
    out = Path(out)
    path = out.with_name(out.name + ".config.json")
    data = config.model_dump(mode="json")
    data[VERSION_KEY] = getattr(flowsettings, "SUMMA_APP_VERSION", "local")
    try:
        path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    except OSError as e:
        raise OSError(f"cannot write {path}: {e.strerror or e}") from e
    return path
