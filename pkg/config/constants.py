"""
Configuration constants for the Jensen solver and verifier
"""

# ==================== GROUP CONSTRUCTION ====================
MAX_SYMMETRIC_DEGREE = 8
MAX_DIHEDRAL_ORDER = 64  # m in D_m, group has 2m elements
MAX_CYCLIC_ORDER = 128
MAX_GROUP_ORDER = 4096  # hard cap on any Cayley table

# Associativity is checked on every triple up to this size,
# above it on ASSOCIATIVITY_SPOT_FACTOR * size random triples
EXHAUSTIVE_ASSOCIATIVITY_LIMIT = 64
ASSOCIATIVITY_SPOT_FACTOR = 10
ASSOCIATIVITY_SEED = 0

# ==================== LINEAR ALGEBRA ====================
MAX_SNF_ENTRIES = 10**7  # rows * cols
DETERMINANT_CHECK_LIMIT = 12  # exact |det| checks on U, V up to this dimension

# ==================== ENUMERATION ====================
DEFAULT_MAX_ENUM = 2**20  # search spaces / enumerations, overridable by JENSEN_MAX_ENUM
BRUTE_FORCE_CHUNK = 2048  # candidate maps evaluated per numpy batch

# ==================== REPORTS ====================
REPORT_TABLE_LIMIT = 256  # full solution tables only up to this many maps

# ==================== VERIFICATION SUITE ====================
MAX_DICHOTOMY_ORDER = 32  # largest m accepted by the dihedral dichotomy check
SUITE_SYMMETRIC_DEGREES = (2, 3, 4, 5)
SUITE_DIHEDRAL_ORDERS = tuple(range(1, 13))
SUITE_TARGETS = ("Z:2", "Z:4", "Z:2x2", "Z:3")
SUITE_PRODUCT_INSTANCES = (("prod(D:3,D:3)", ("Z:2",)),)
