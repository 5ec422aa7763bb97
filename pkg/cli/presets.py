"""Default command-line parameters and JSON settings overrides."""
from __future__ import annotations

import json
from typing import Any, Dict

import config

DEFAULT_CLI_PARAMS: Dict[str, Any] = {
    "degree": config.DEFAULT_DEGREE,
    "format": "json",
    "builtin": None,
    "count": 1,
    "n": 2,
    "m": None,
    "a": "1",
    "plugins": ["fgl.builtins", "universal.lazard"],
}


def load_cli_params(path: str | None) -> Dict[str, Any]:
    """Load CLI parameters from *path* on top of :data:`DEFAULT_CLI_PARAMS`.

    Only the ``"parameters"`` mapping of the file is read; a missing file
    leaves the defaults untouched.
    """

    params = dict(DEFAULT_CLI_PARAMS)
    if path is None:
        return params
    try:
        with open(path, "r", encoding="utf8") as fh:
            data = json.load(fh)
        params.update(data.get("parameters", {}))
    except FileNotFoundError:
        pass
    return params
