"""Loader for series documents."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .document import document_to_series
from .errors import DocumentError
from .schema import validate_series_document
from .series import TruncatedSeries

try:  # optional YAML support
    import yaml  # type: ignore
except Exception:  # pragma: no cover - yaml not installed
    yaml = None  # type: ignore


def load_document(path: str) -> TruncatedSeries:
    """Load a series (or formal group law) from a JSON or YAML file."""
    data = load_data(Path(path))
    validate_series_document(data)
    return document_to_series(data)


def load_data(path: Path) -> Any:
    if path.suffix in {".yaml", ".yml"}:
        if yaml is None:
            raise RuntimeError("YAML support requires PyYAML")
        with path.open("r", encoding="utf8") as fh:
            return yaml.safe_load(fh)
    with path.open("r", encoding="utf8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from exc
