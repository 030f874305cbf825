"""Young diagrams and the head/tail/expansion calculus.

A diagram is stored as a tuple of row lengths with trailing zeros removed, so
two diagrams compare equal exactly when they have the same boxes.  Rows are
1-based in docstrings and 0-based in code.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Optional


def _normalize(rows: Iterable[int]) -> tuple[int, ...]:
    rows = tuple(int(r) for r in rows)
    for a, b in zip(rows, rows[1:]):
        if a < b:
            raise ValueError(f"rows must be weakly decreasing: {rows}")
    if rows and rows[-1] < 0:
        raise ValueError(f"rows must be nonnegative: {rows}")
    end = len(rows)
    while end and rows[end - 1] == 0:
        end -= 1
    return rows[:end]


@dataclass(frozen=True, order=True)
class YoungDiagram:
    rows: tuple[int, ...] = ()

    def __init__(self, rows: Iterable[int] = ()):
        object.__setattr__(self, "rows", _normalize(rows))

    @classmethod
    def parse(cls, text: str) -> "YoungDiagram":
        """Parse ``"5,5,4,3,1,1"``; ``"0"`` and ``""`` give the empty diagram."""
        text = text.strip()
        if text in ("", "0", "()", "∅"):
            return cls()
        return cls(int(part) for part in text.strip("()").split(","))

    def __str__(self) -> str:
        return ",".join(map(str, self.rows)) if self.rows else "0"

    def __repr__(self) -> str:
        return f"YoungDiagram({self.rows})"

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def __getitem__(self, i: int) -> int:
        """Row ``i`` (0-based); rows past the height have length 0."""
        return self.rows[i] if 0 <= i < len(self.rows) else 0

    def __bool__(self) -> bool:
        return bool(self.rows)

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def height(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return self.rows[0] if self.rows else 0

    @property
    def diag_length(self) -> int:
        """Side of the largest square fitting in the top-left corner."""
        s = 0
        for i, r in enumerate(self.rows, start=1):
            if r < i:
                break
            s = i
        return s

    def padded(self, length: int) -> tuple[int, ...]:
        if length < self.height:
            raise ValueError(f"{self} does not fit in {length} rows")
        return self.rows + (0,) * (length - self.height)

    def fits_in(self, width: int, height: int) -> bool:
        return self.height <= height and self.width <= width

    def transpose(self) -> "YoungDiagram":
        return transpose(self)

    def head_tail(self) -> tuple["YoungDiagram", "YoungDiagram"]:
        return head_tail(self)

    @property
    def head(self) -> "YoungDiagram":
        return head_tail(self)[0]

    @property
    def tail(self) -> "YoungDiagram":
        return head_tail(self)[1]

    def is_symmetric(self) -> bool:
        return is_symmetric(self)


EMPTY = YoungDiagram()


def transpose(alpha: YoungDiagram) -> YoungDiagram:
    return YoungDiagram(
        sum(1 for r in alpha.rows if r >= j) for j in range(1, alpha.width + 1)
    )


def head_tail(alpha: YoungDiagram) -> tuple[YoungDiagram, YoungDiagram]:
    """Split ``alpha`` along its diagonal square.

    The head is what lies to the right of the ``s x s`` square (``s`` the
    diagonal length), the tail is what lies below it.
    """
    s = alpha.diag_length
    rows = alpha.rows
    return YoungDiagram(r - s for r in rows[:s]), YoungDiagram(rows[s:])


def expand_horizontal(alpha: YoungDiagram, p: int) -> YoungDiagram:
    if p < 0:
        raise ValueError("expansion amount must be nonnegative")
    s = alpha.diag_length
    rows = alpha.rows
    return YoungDiagram(tuple(r + p for r in rows[:s]) + rows[s:])


def expand_vertical(alpha: YoungDiagram, q: int) -> YoungDiagram:
    if q < 0:
        raise ValueError("expansion amount must be nonnegative")
    s = alpha.diag_length
    rows = alpha.rows
    return YoungDiagram(rows[:s] + (s,) * q + rows[s:])


def is_symmetric(alpha: YoungDiagram) -> bool:
    return transpose(alpha) == alpha


def enumerate_diagrams(
    width: int,
    height: int,
    symmetric_only: bool = False,
    weight_target: Optional[int] = None,
) -> list[YoungDiagram]:
    """All diagrams inside a ``width x height`` rectangle, lexicographically.

    ``weight_target`` keeps only diagrams with ``|nu| + diag_length(nu)``
    equal to it.  Order is ascending on the row tuples, so the empty diagram
    comes first.
    """
    if width < 0 or height < 0:
        raise ValueError("rectangle sides must be nonnegative")
    found = set()
    for combo in combinations_with_replacement(range(width + 1), height):
        found.add(YoungDiagram(sorted(combo, reverse=True)))
    out = []
    for d in sorted(found):
        if symmetric_only and not is_symmetric(d):
            continue
        if weight_target is not None and d.size + d.diag_length != weight_target:
            continue
        out.append(d)
    return out
