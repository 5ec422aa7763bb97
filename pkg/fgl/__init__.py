"""Expose formal group law tools and trigger registration of the built-in laws."""

from .law import (  # noqa: F401
    AxiomViolation,
    FormalGroupLaw,
    OrientationSeries,
    StrictIso,
    check_fgl_axioms,
    check_homogeneity,
    fgl_exp,
    fgl_from_logarithm,
    fgl_log,
    formal_inverse,
    n_series,
    transport_fgl,
)
from .typification import (  # noqa: F401
    IdempotencyCertificate,
    idempotency_certificate,
    is_p_typical,
    p_typify,
    quillen_idempotent,
)
from .orientation import orientation_roundtrip  # noqa: F401
from .builtins import additive_fgl, multiplicative_fgl, scaled_fgl  # noqa: F401

__all__ = [
    "AxiomViolation",
    "FormalGroupLaw",
    "IdempotencyCertificate",
    "OrientationSeries",
    "StrictIso",
    "additive_fgl",
    "check_fgl_axioms",
    "check_homogeneity",
    "fgl_exp",
    "fgl_from_logarithm",
    "fgl_log",
    "formal_inverse",
    "idempotency_certificate",
    "is_p_typical",
    "multiplicative_fgl",
    "n_series",
    "orientation_roundtrip",
    "p_typify",
    "quillen_idempotent",
    "scaled_fgl",
    "transport_fgl",
]
