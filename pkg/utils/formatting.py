"""
Plain-text rendering helpers
"""

from typing import Iterable, List, Mapping, Sequence


def format_residues(residues: Sequence[int]) -> str:
    """Residue vector as a comma-separated tuple, e.g. (1,0)"""
    return "(" + ",".join(str(int(r)) for r in residues) + ")"


def format_factors(factors: Sequence[int]) -> str:
    if not factors:
        return "0"
    return " + ".join(f"Z/{d}" for d in factors)


def render_table(headers: Sequence[str], rows: Iterable[Sequence[object]]) -> List[str]:
    """Left-aligned columns separated by two spaces"""
    rows = [[str(cell) for cell in row] for row in rows]
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return lines


def render_maps(maps: Sequence[Mapping[str, Sequence[int]]]) -> List[str]:
    """Maps side by side: one row per element, one column per map"""
    if not maps:
        return []
    names = list(maps[0].keys())
    headers = ["g"] + [f"f{i}" for i in range(len(maps))]
    rows = [[name] + [format_residues(m[name]) for m in maps] for name in names]
    return render_table(headers, rows)
