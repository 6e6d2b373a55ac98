"""
This module turns analysis results into report documents (json, csv, plotdata)
and reads json reports back.
"""


import dataclasses
import io
import json
import logging
import math
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

log = logging.getLogger("main.utils.report")

SCHEMA = "laminate-spectra/1"


def to_serialisable(value: Any) -> Any:
    if hasattr(value, "to_dict"):
        return to_serialisable(value.to_dict())

    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return to_serialisable(dataclasses.asdict(value))

    if isinstance(value, Enum):
        return value.value

    if isinstance(value, dict):
        return {str(k): to_serialisable(v) for k, v in value.items()}

    if isinstance(value, (list, tuple, set, np.ndarray)):
        return [to_serialisable(i) for i in value]

    if isinstance(value, (bool, np.bool_)):
        return bool(value)

    if isinstance(value, (int, np.integer)):
        return int(value)

    if isinstance(value, (complex, np.complexfloating)):
        if value.imag == 0:
            return to_serialisable(value.real)

        return {"re": to_serialisable(value.real), "im": to_serialisable(value.imag)}

    if isinstance(value, (float, np.floating)):
        value = float(value)

        # -0.0 and 0.0 render identically
        return value + 0.0 if math.isfinite(value) else None

    return value


def render_json(
    job: Dict[str, Any], result: Dict[str, Any], schema: str = SCHEMA
) -> str:
    document = {
        "schema": schema,
        "job": to_serialisable(job),
        "result": to_serialisable(result),
    }

    return json.dumps(document, sort_keys=True, indent=2, allow_nan=False) + "\n"


def load_report(text: str) -> Tuple[Dict[str, Any], Dict[str, Any]]:
    document = json.loads(text)

    if document.get("schema") != SCHEMA:
        log.warning(f"Unknown report schema {document.get('schema')!r}")

    return document["job"], document["result"]


def render_csv(rows: List[Dict[str, Any]], columns: Sequence[str]) -> str:
    data = pd.DataFrame(
        [{c: to_serialisable(row.get(c)) for c in columns} for row in rows],
        columns=list(columns),
    )

    buffer = io.StringIO()
    data.to_csv(buffer, index=False, float_format="%.17g")

    return buffer.getvalue()


def render_plotdata(
    families: Dict[str, List[Tuple[float, float]]], title: Optional[str] = None
) -> str:
    """
    Two-column whitespace separated (x, value) blocks, one block per family,
    blocks separated by a blank line.
    """

    blocks = []

    if title is not None:
        blocks.append(f"# {title}")

    for label, points in families.items():
        lines = [f"# {label}"]
        lines += [f"{float(x)!r} {float(y)!r}" for x, y in points]
        blocks.append("\n".join(lines))

    return "\n\n".join(blocks) + "\n"
