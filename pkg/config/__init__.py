"""
Configuration package for the Jensen solver
"""

from .constants import (
    # Group construction
    MAX_SYMMETRIC_DEGREE,
    MAX_DIHEDRAL_ORDER,
    MAX_CYCLIC_ORDER,
    MAX_GROUP_ORDER,
    EXHAUSTIVE_ASSOCIATIVITY_LIMIT,
    ASSOCIATIVITY_SPOT_FACTOR,
    ASSOCIATIVITY_SEED,

    # Linear algebra
    MAX_SNF_ENTRIES,
    DETERMINANT_CHECK_LIMIT,

    # Enumeration
    DEFAULT_MAX_ENUM,
    BRUTE_FORCE_CHUNK,

    # Reports
    REPORT_TABLE_LIMIT,

    # Verification suite
    MAX_DICHOTOMY_ORDER,
    SUITE_SYMMETRIC_DEGREES,
    SUITE_DIHEDRAL_ORDERS,
    SUITE_TARGETS,
    SUITE_PRODUCT_INSTANCES,
)

__all__ = [
    'MAX_SYMMETRIC_DEGREE',
    'MAX_DIHEDRAL_ORDER',
    'MAX_CYCLIC_ORDER',
    'MAX_GROUP_ORDER',
    'EXHAUSTIVE_ASSOCIATIVITY_LIMIT',
    'ASSOCIATIVITY_SPOT_FACTOR',
    'ASSOCIATIVITY_SEED',
    'MAX_SNF_ENTRIES',
    'DETERMINANT_CHECK_LIMIT',
    'DEFAULT_MAX_ENUM',
    'BRUTE_FORCE_CHUNK',
    'REPORT_TABLE_LIMIT',
    'MAX_DICHOTOMY_ORDER',
    'SUITE_SYMMETRIC_DEGREES',
    'SUITE_DIHEDRAL_ORDERS',
    'SUITE_TARGETS',
    'SUITE_PRODUCT_INSTANCES',
]
