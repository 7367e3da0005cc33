"""CSV and JSON writers for score vectors and measure tables.

CSV outputs open with ``#`` comment lines carrying the parameters; the JSON
form holds the same parameters and rows and nothing else. No timestamps, so
identical inputs give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json

import numpy as np

from .lec import ScoreVector


def _fmt(v):
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if isinstance(v, np.integer):
        return int(v)
    return v


def _param_text(params: dict) -> str:
    return " ".join(f"{k}={json.dumps(_plain(v), sort_keys=True)}" for k, v in params.items())


def _plain(v):
    if isinstance(v, np.ndarray):
        return v.tolist()
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    if isinstance(v, dict):
        return {k: _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


def table_csv(header: list[str], rows, meta: dict | None = None) -> str:
    buf = io.StringIO()
    for line in (meta or {}).items():
        buf.write(f"# {_param_text(dict([line]))}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def table_json(header: list[str], rows, meta: dict | None = None) -> str:
    doc = {
        "meta": _plain(meta or {}),
        "columns": list(header),
        "rows": [[_plain(v) for v in row] for row in rows],
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def render(header, rows, meta=None, fmt: str = "csv") -> str:
    if fmt == "csv":
        return table_csv(header, rows, meta)
    if fmt == "json":
        return table_json(header, rows, meta)
    raise ValueError(f"unknown format {fmt!r}")


def score_table(labels, sv: ScoreVector, fmt: str = "csv") -> str:
    meta = {"measure": sv.measure, **sv.params}
    return render(["label", "score"], zip(labels, sv.scores), meta, fmt)


def parse_csv(text: str) -> tuple[dict, list[str], list[list[str]]]:
    """Read back a table written by :func:`table_csv` (values stay strings)."""
    meta = {}
    lines = text.splitlines()
    body = []
    for line in lines:
        if line.startswith("# "):
            key, _, val = line[2:].partition("=")
            meta[key] = json.loads(val)
        else:
            body.append(line)
    reader = csv.reader(body)
    header = next(reader)
    return meta, header, [row for row in reader]
