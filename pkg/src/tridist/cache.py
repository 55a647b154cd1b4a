"""Line-delimited JSON result cache.

One self-describing record per line in <cache-dir>/reports.jsonl, keyed by
(m, method, menu).  Records carry a SHA-256 checksum over their canonical
JSON payload; a record that fails the checksum (or does not parse) is
skipped, and the last valid writer wins for duplicate keys.
"""

from __future__ import annotations

import hashlib
import json
import logging
from pathlib import Path

from .search import SearchReport

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
CACHE_FILENAME = "reports.jsonl"


def _payload(report: SearchReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "m": report.m,
        "method": report.method,
        "menu": list(report.menu),
        "points": [list(p) for p in report.points],
        "size": report.size,
        "multiplicities": list(report.multiplicities),
        "optimal": report.optimal,
        "elapsed": report.elapsed,
        "clique": [list(p) for p in report.clique],
        "nodes_explored": report.nodes_explored,
        "hexagon": report.hexagon,
        "overshoot": report.overshoot,
    }


def _checksum(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _from_payload(payload: dict) -> SearchReport:
    return SearchReport(
        m=payload["m"],
        method=payload["method"],
        menu=tuple(payload["menu"]),
        points=tuple((a, b) for a, b in payload["points"]),
        size=payload["size"],
        multiplicities=tuple(payload["multiplicities"]),
        optimal=payload["optimal"],
        elapsed=payload["elapsed"],
        clique=tuple((a, b) for a, b in payload["clique"]),
        nodes_explored=payload["nodes_explored"],
        hexagon=payload["hexagon"],
        overshoot=payload["overshoot"],
    )


def cache_store(report: SearchReport, cache_dir) -> Path:
    """Append the report to the cache; returns the cache file path."""
    directory = Path(cache_dir)
    directory.mkdir(parents=True, exist_ok=True)
    payload = _payload(report)
    record = dict(payload)
    record["checksum"] = _checksum(payload)
    path = directory / CACHE_FILENAME
    with path.open("a", encoding="utf-8") as fh:
        fh.write(json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n")
    return path


def cache_load(m: int, method: str, cache_dir, menu=None) -> SearchReport | None:
    """Last valid cached report for (m, method[, menu]), or None."""
    path = Path(cache_dir) / CACHE_FILENAME
    if not path.exists():
        return None
    wanted_menu = None if menu is None else list(menu)
    found = None
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError:
                log.warning("%s:%d: unparseable cache record skipped", path, lineno)
                continue
            stored_sum = record.pop("checksum", None)
            if record.get("schema_version") != SCHEMA_VERSION:
                continue
            if record.get("m") != m or record.get("method") != method:
                continue
            if wanted_menu is not None and record.get("menu") != wanted_menu:
                continue
            if stored_sum != _checksum(record):
                log.warning("%s:%d: checksum mismatch, record ignored", path, lineno)
                continue
            try:
                found = _from_payload(record)
            except (KeyError, TypeError, ValueError):
                log.warning("%s:%d: malformed cache record skipped", path, lineno)
    return found
