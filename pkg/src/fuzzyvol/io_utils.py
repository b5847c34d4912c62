"""Atomic file emission with metadata sidecars.

Every data file is written to a temp name and renamed into place, and gets a
`<name>.meta.json` sidecar recording the effective configuration that
produced it, so any output can be traced back to its exact run.
"""

from __future__ import annotations

import json
import os
from pathlib import Path


def atomic_write_text(path: Path, text: str) -> None:
    path = Path(path)
    tmp = path.with_name(f"{path.name}.tmp-{os.getpid()}")
    tmp.write_text(text, encoding="utf-8", newline="\n")
    os.replace(tmp, path)


def write_json(path: Path, payload: dict) -> None:
    atomic_write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def write_sidecar(path: Path, config: dict) -> Path:
    """Write `<path>.meta.json` describing the file at `path`."""
    path = Path(path)
    sidecar = path.with_name(path.name + ".meta.json")
    write_json(sidecar, {"file": path.name, "config": config})
    return sidecar


def write_csv(path: Path, header: str, lines, config: dict | None = None) -> Path:
    """Write a CSV atomically; attach a sidecar when config is given."""
    path = Path(path)
    body = "\n".join([header, *lines]) + "\n"
    atomic_write_text(path, body)
    if config is not None:
        write_sidecar(path, config)
    return path
