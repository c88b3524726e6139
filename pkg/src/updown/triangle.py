"""de Bruijn-Viennot boustrophedon triangle.

Rows are built from the last comparison backwards.  Entry j of a row counts
the admissible permutations of the current suffix whose first element has
rank j, so the row sum is the number of permutations with the signature.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .signatures import Signature, validate


@dataclass
class Triangle:
    rows: list[list[int]]
    # side on which the fresh 0 was placed for each row after the first
    sides: list[str] = field(default_factory=list)
    additions: int = 0

    @property
    def last_row(self) -> list[int]:
        return self.rows[-1]

    def pretty(self) -> str:
        """Centered layout with entries on alternating columns."""
        cells = [[str(v) for v in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        n = len(self.rows)
        lines = []
        for r, row in enumerate(cells):
            grid = [" " * width] * (2 * n - 1)
            for j, c in enumerate(row):
                grid[n - 1 - r + 2 * j] = c.rjust(width)
            lines.append(" ".join(grid).rstrip())
        return "\n".join(lines)


def triangle_rows(sig: Signature) -> Triangle:
    sig = validate(sig)
    tri = Triangle(rows=[[1]])
    prev = [1]
    for q in reversed(sig):
        size = len(prev) + 1
        new = [0] * size
        if q == 1:
            # fresh 0 on the right, accumulate right to left
            tri.sides.append("right")
            for j in range(size - 2, -1, -1):
                new[j] = new[j + 1] + prev[j]
        else:
            tri.sides.append("left")
            for j in range(1, size):
                new[j] = new[j - 1] + prev[j - 1]
        tri.additions += size - 1
        tri.rows.append(new)
        prev = new
    return tri


def count_by_triangle(sig: Signature) -> int:
    return sum(triangle_rows(sig).last_row)
