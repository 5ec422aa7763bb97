"""Canonical JSON documents for rings, polynomials and series.

Rationals are written as ``"num/den"`` strings and every list is emitted in
graded-lexicographic order, so equal values always serialize to equal bytes.
"""
from __future__ import annotations

import json
from typing import Any, Dict, List

import config

from .errors import DocumentError
from .polynomial import Exponents, GradedPolynomial
from .ring import INTEGERS, P_LOCAL, RATIONALS, BaseRing, PLocalIntegers, RingDescriptor, make_ring
from .scalars import format_rational, parse_rational
from .series import TruncatedSeries

_EXPONENT_KEYS = {1: ("texp",), 2: ("xexp", "yexp")}


# ----------------------------------------------------------------------
# Rings
# ----------------------------------------------------------------------
def ring_to_document(ring: RingDescriptor) -> Dict[str, Any]:
    base: Any = {P_LOCAL: ring.base.prime} if ring.base.is_p_local else ring.base.kind
    return {
        "base": base,
        "generators": [{"name": g.name, "weight": g.weight} for g in ring.generators],
    }


def document_to_ring(data: Dict[str, Any]) -> RingDescriptor:
    base_doc = data.get("base")
    if base_doc in (INTEGERS, RATIONALS):
        base = BaseRing(base_doc)
    elif isinstance(base_doc, dict) and set(base_doc) == {P_LOCAL}:
        base = PLocalIntegers(base_doc[P_LOCAL])
    else:
        raise DocumentError(f"unknown base ring {base_doc!r}")
    return make_ring(base, [(g["name"], g["weight"]) for g in data.get("generators", [])])


# ----------------------------------------------------------------------
# Polynomials
# ----------------------------------------------------------------------
def _monomial(ring: RingDescriptor, exps: Exponents) -> Dict[str, int]:
    return {name: e for name, e in zip(ring.names, exps) if e}


def _exponents(ring: RingDescriptor, monomial: Dict[str, int]) -> Exponents:
    exps = [0] * ring.rank
    for name, e in monomial.items():
        try:
            exps[ring.index(name)] = e
        except KeyError as exc:
            raise DocumentError(str(exc.args[0])) from None
    return tuple(exps)


def polynomial_to_document(p: GradedPolynomial) -> Dict[str, Any]:
    return {
        "ring": ring_to_document(p.ring),
        "terms": [
            {"monomial": _monomial(p.ring, exps), "value": format_rational(value)}
            for exps, value in p.sorted_terms()
        ],
    }


def document_to_polynomial(data: Dict[str, Any]) -> GradedPolynomial:
    ring = document_to_ring(data["ring"])
    return GradedPolynomial(ring, _read_terms(ring, data.get("terms", [])))


def _read_terms(ring: RingDescriptor, entries: List[Dict[str, Any]]) -> Dict[Exponents, Any]:
    terms: Dict[Exponents, Any] = {}
    for entry in entries:
        exps = _exponents(ring, entry.get("monomial", {}))
        if exps in terms:
            raise DocumentError(f"duplicate monomial {entry.get('monomial', {})}")
        terms[exps] = parse_rational(entry["value"])
    return terms


# ----------------------------------------------------------------------
# Series
# ----------------------------------------------------------------------
def series_to_document(series: TruncatedSeries) -> Dict[str, Any]:
    """Serialize a series in one or two variables."""
    if series.arity not in _EXPONENT_KEYS:
        raise DocumentError(f"series of arity {series.arity} have no document form")
    keys = _EXPONENT_KEYS[series.arity]
    entries = []
    for exps, coeff in series.items():
        for gen_exps, value in coeff.sorted_terms():
            entry: Dict[str, Any] = dict(zip(keys, exps))
            entry["monomial"] = _monomial(series.ring, gen_exps)
            entry["value"] = format_rational(value)
            entries.append(entry)
    doc: Dict[str, Any] = {
        "ring": ring_to_document(series.ring),
        "truncation": series.truncation,
        "coefficients": entries,
    }
    if series.arity == 1:
        doc["arity"] = 1
    return doc


def document_to_series(data: Dict[str, Any]) -> TruncatedSeries:
    """Rebuild a series; raises :class:`DocumentError` on inconsistent content."""
    # Bivariate documents carry no arity key; "arity": 1 marks univariate ones.
    if "arity" in data and (data["arity"] != 1 or isinstance(data["arity"], bool)):
        raise DocumentError(f"unsupported arity {data['arity']!r}")
    arity = data.get("arity", 2)
    keys = _EXPONENT_KEYS[arity]
    ring = document_to_ring(data["ring"])
    grouped: Dict[Exponents, Dict[Exponents, Any]] = {}
    for entry in data.get("coefficients", []):
        stray = {"texp", "xexp", "yexp"} & set(entry) - set(keys)
        if stray:
            raise DocumentError(f"exponent keys {sorted(stray)} do not fit arity {arity}")
        exps = tuple(entry.get(key, 0) for key in keys)
        gen_exps = _exponents(ring, entry.get("monomial", {}))
        slot = grouped.setdefault(exps, {})
        if gen_exps in slot:
            raise DocumentError(f"duplicate coefficient at {exps} {entry.get('monomial', {})}")
        slot[gen_exps] = parse_rational(entry["value"])
    truncation = data["truncation"]
    for exps in grouped:
        if sum(exps) > truncation:
            raise DocumentError(f"coefficient at {exps} exceeds truncation {truncation}")
    coeffs = {exps: GradedPolynomial(ring, terms) for exps, terms in grouped.items()}
    return TruncatedSeries(ring, arity, truncation, coeffs)


def fgl_to_document(law: Any) -> Dict[str, Any]:
    """Document of a formal group law (anything with a ``series`` attribute)."""
    return series_to_document(law.series)


def dumps_canonical(document: Any) -> str:
    """Deterministic JSON text, newline-terminated."""
    return json.dumps(document, sort_keys=True, indent=config.JSON_INDENT) + "\n"
