"""Expose the universal laws and register the universal one as a built-in."""

from .lazard import (  # noqa: F401
    UniversalContext,
    multiplicative_specialization,
    specialize_law,
    universal_fgl,
    universal_p_typical,
    universal_ring,
)
from .hazewinkel import (  # noqa: F401
    HazewinkelData,
    brown_peterson_fgl,
    brown_peterson_ring,
    hazewinkel_generators,
)

__all__ = [
    "HazewinkelData",
    "UniversalContext",
    "brown_peterson_fgl",
    "brown_peterson_ring",
    "hazewinkel_generators",
    "multiplicative_specialization",
    "specialize_law",
    "universal_fgl",
    "universal_p_typical",
    "universal_ring",
]
