"""
Utility functions and helpers
"""

from .int_linalg import IntMatrix, kernel_mod, smith_normal_form
from .formatting import format_residues, render_table

__all__ = [
    'IntMatrix',
    'kernel_mod',
    'smith_normal_form',
    'format_residues',
    'render_table',
]
