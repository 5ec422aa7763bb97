"""Machine-readable verdicts of the checking subcommands."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List

import config
from core.document import dumps_canonical, polynomial_to_document
from fgl.law import AxiomViolation

AXIOMS = "axioms"
STRICT_ISO = "strict_iso"
IDEMPOTENCY = "idempotency"
P_LOCALITY = "p_locality"
ROUNDTRIP = "roundtrip"
MULTIPLICATIVITY = "multiplicativity"

KINDS = (AXIOMS, STRICT_ISO, IDEMPOTENCY, P_LOCALITY, ROUNDTRIP, MULTIPLICATIVITY)


def inputs_digest(inputs: Any) -> str:
    """Content hash of the canonical JSON form of *inputs*."""
    digest = hashlib.new(config.DIGEST_ALGORITHM)
    digest.update(dumps_canonical(inputs).encode("utf8"))
    return f"{config.DIGEST_ALGORITHM}:{digest.hexdigest()}"


def violation_to_document(violation: AxiomViolation) -> Dict[str, Any]:
    return {
        "axiom": violation.axiom,
        "exponents": list(violation.exponents),
        "defect": polynomial_to_document(violation.defect)["terms"],
    }


@dataclass(frozen=True)
class Certificate:
    """A verdict with the evidence against it; ``verdict`` is false iff ``violations`` is nonempty."""

    kind: str
    violations: List[Dict[str, Any]] = field(default_factory=list)
    inputs_digest: str = ""

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")

    @property
    def verdict(self) -> bool:
        return not self.violations

    @classmethod
    def from_axioms(cls, kind: str, violations: Iterable[AxiomViolation], inputs: Any) -> "Certificate":
        return cls(kind, [violation_to_document(v) for v in violations], inputs_digest(inputs))

    @classmethod
    def from_checks(cls, kind: str, checks: Dict[str, bool], inputs: Any) -> "Certificate":
        """One violation per failed named check."""
        failed = [{"check": name} for name, ok in sorted(checks.items()) if not ok]
        return cls(kind, failed, inputs_digest(inputs))

    def to_document(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "verdict": self.verdict,
            "violations": self.violations,
            "inputs_digest": self.inputs_digest,
        }

    def __str__(self) -> str:
        status = "ok" if self.verdict else f"{len(self.violations)} violation(s)"
        return f"{self.kind}: {status}"
