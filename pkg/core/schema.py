"""Schema validation utilities for series documents."""
from __future__ import annotations

import re
from typing import Any

try:  # optional dependency
    from jsonschema import Draft7Validator, ValidationError  # type: ignore
except Exception:  # pragma: no cover - jsonschema not installed
    Draft7Validator = None  # type: ignore

    class ValidationError(Exception):
        """Raised when document validation fails."""


RATIONAL_PATTERN = r"^-?\d+(/\d+)?$"
_EXPONENT = {"type": "integer", "minimum": 0}

SERIES_SCHEMA = {
    "type": "object",
    "required": ["ring", "truncation", "coefficients"],
    "properties": {
        "arity": {"enum": [1]},
        "ring": {"$ref": "#/definitions/ring"},
        "truncation": {"type": "integer", "minimum": 0},
        "coefficients": {
            "type": "array",
            "items": {"$ref": "#/definitions/coefficient"},
        },
    },
    "additionalProperties": False,
    "definitions": {
        "ring": {
            "type": "object",
            "required": ["base"],
            "properties": {
                "base": {
                    "oneOf": [
                        {"enum": ["Q", "Z"]},
                        {
                            "type": "object",
                            "required": ["Zp"],
                            "properties": {"Zp": {"type": "integer", "minimum": 2}},
                            "additionalProperties": False,
                        },
                    ]
                },
                "generators": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["name", "weight"],
                        "properties": {
                            "name": {"type": "string", "minLength": 1},
                            "weight": _EXPONENT,
                        },
                        "additionalProperties": False,
                    },
                },
            },
            "additionalProperties": False,
        },
        "coefficient": {
            "type": "object",
            "required": ["value"],
            "properties": {
                "texp": _EXPONENT,
                "xexp": _EXPONENT,
                "yexp": _EXPONENT,
                "monomial": {"type": "object", "additionalProperties": _EXPONENT},
                "value": {"type": "string", "pattern": RATIONAL_PATTERN},
            },
            "additionalProperties": False,
        },
    },
}

if Draft7Validator is not None:  # pragma: no cover - exercised in environments with jsonschema
    _validator = Draft7Validator(SERIES_SCHEMA)

    def validate_series_document(data: Any) -> None:
        """Validate a series document using :mod:`jsonschema` if available."""

        _validator.validate(data)

else:

    def validate_series_document(data: Any) -> None:
        """Validate a series document using a simple Python implementation."""

        _validate_root(data)


def _is_count(value: Any, minimum: int = 0) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value >= minimum


def _validate_root(data: Any) -> None:
    if not isinstance(data, dict):
        raise ValidationError("Series document must be a mapping")
    missing = {"ring", "truncation", "coefficients"} - data.keys()
    if missing:
        raise ValidationError(f"Missing keys in series document: {missing}")
    extra = set(data) - {"arity", "ring", "truncation", "coefficients"}
    if extra:
        raise ValidationError(f"Unknown keys in series document: {extra}")
    if "arity" in data and (data["arity"] != 1 or isinstance(data["arity"], bool)):
        raise ValidationError("'arity' is 1 for univariate series and absent otherwise")
    if not _is_count(data["truncation"]):
        raise ValidationError("'truncation' must be a non-negative integer")
    _validate_ring(data["ring"])
    if not isinstance(data["coefficients"], list):
        raise ValidationError("'coefficients' must be a list")
    for entry in data["coefficients"]:
        _validate_coefficient(entry)


def _validate_ring(ring: Any) -> None:
    if not isinstance(ring, dict) or "base" not in ring:
        raise ValidationError("'ring' must be a mapping with a 'base'")
    extra = set(ring) - {"base", "generators"}
    if extra:
        raise ValidationError(f"Unknown keys in ring: {extra}")
    base = ring["base"]
    if isinstance(base, dict):
        if set(base) != {"Zp"} or not _is_count(base["Zp"], 2):
            raise ValidationError("p-local base must be {'Zp': p} with p >= 2")
    elif base not in ("Q", "Z"):
        raise ValidationError(f"Unknown base ring {base!r}")
    gens = ring.get("generators", [])
    if not isinstance(gens, list):
        raise ValidationError("'generators' must be a list")
    for gen in gens:
        if not isinstance(gen, dict) or set(gen) != {"name", "weight"}:
            raise ValidationError("Generators need exactly 'name' and 'weight'")
        if not isinstance(gen["name"], str) or not gen["name"]:
            raise ValidationError("Generator names must be non-empty strings")
        if not _is_count(gen["weight"]):
            raise ValidationError("Generator weights must be non-negative integers")


def _validate_coefficient(entry: Any) -> None:
    if not isinstance(entry, dict) or "value" not in entry:
        raise ValidationError("Coefficients must be mappings with a 'value'")
    extra = set(entry) - {"texp", "xexp", "yexp", "monomial", "value"}
    if extra:
        raise ValidationError(f"Unknown keys in coefficient: {extra}")
    for key in ("texp", "xexp", "yexp"):
        if key in entry and not _is_count(entry[key]):
            raise ValidationError(f"'{key}' must be a non-negative integer")
    monomial = entry.get("monomial", {})
    if not isinstance(monomial, dict) or not all(_is_count(e) for e in monomial.values()):
        raise ValidationError("'monomial' must map generator names to non-negative integers")
    if not isinstance(entry["value"], str) or not re.match(RATIONAL_PATTERN, entry["value"]):
        raise ValidationError(f"Malformed rational value {entry['value']!r}")


__all__ = ["validate_series_document", "ValidationError", "SERIES_SCHEMA"]
