"""Central configuration for the formal group law engine."""

# Series and formal group laws
# A formal group law needs at least the degree-2 coefficients for its axioms to say anything
MIN_TRUNCATION = 2
DEFAULT_DEGREE = 8

# Chern calculus
# Symmetry is checked against every permutation up to this many roots,
# adjacent transpositions beyond
FULL_PERMUTATION_LIMIT = 4

# Output documents
JSON_INDENT = 2
DIGEST_ALGORITHM = "sha256"

# Logging
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
DEFAULT_LOG_LEVEL = "WARNING"
