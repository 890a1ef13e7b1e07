"""Young shapes with border labels, Le diagrams and nearest-northwest queries.

Squares are addressed by ``(row label, column label)``.  Row labels grow from
top to bottom and column labels grow from right to left, so "northwest" of a
square means a smaller row label and a larger column label.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import DominanceError, InvalidArgumentError, OutOfShapeError


class Square(NamedTuple):
    row: int
    col: int


def is_strictly_nw(a, b) -> bool:
    """True if square ``a`` is strictly northwest of square ``b``."""
    return a[0] < b[0] and a[1] > b[1]


def is_weakly_nw(a, b) -> bool:
    return a[0] <= b[0] and a[1] >= b[1]


@dataclass(frozen=True)
class ShapeType:
    """The pair (k, n).  ``degenerate=True`` admits k = 0 or k = n."""

    k: int
    n: int
    degenerate: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.k, int) or not isinstance(self.n, int):
            raise InvalidArgumentError(f"k and n must be integers, got {self.k!r}, {self.n!r}")
        if self.n < 1:
            raise InvalidArgumentError(f"n must be positive, got {self.n}")
        if self.degenerate:
            if not 0 <= self.k <= self.n:
                raise InvalidArgumentError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")
        elif not 0 < self.k < self.n:
            raise InvalidArgumentError(f"need 0 < k < n, got k={self.k}, n={self.n}")


@dataclass(frozen=True)
class LabeledShape:
    """A Young shape inside a k x (n-k) box, determined by its row labels."""

    k: int
    n: int
    rows: tuple
    cols: tuple = field(init=False, repr=False, compare=False)
    _lengths: dict = field(init=False, repr=False, compare=False)
    _heights: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        row_set = set(rows)
        cols = tuple(c for c in range(1, self.n + 1) if c not in row_set)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(
            self, "_lengths", {r: sum(1 for c in cols if c > r) for r in rows}
        )
        object.__setattr__(
            self, "_heights", {c: sum(1 for r in rows if r < c) for c in cols}
        )

    @property
    def type(self) -> ShapeType:
        return ShapeType(self.k, self.n, degenerate=self.k in (0, self.n))

    @property
    def cols_left_to_right(self) -> tuple:
        return tuple(reversed(self.cols))

    def row_length(self, r: int) -> int:
        try:
            return self._lengths[r]
        except KeyError:
            raise InvalidArgumentError(f"{r} is not a row label of {self.rows}") from None

    def col_height(self, c: int) -> int:
        try:
            return self._heights[c]
        except KeyError:
            raise InvalidArgumentError(f"{c} is not a column label") from None

    @property
    def partition(self) -> tuple:
        """Row lengths from top to bottom."""
        return tuple(self._lengths[r] for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self._lengths.values())

    def row_squares(self, r: int) -> list:
        """Squares of row ``r`` from left to right."""
        return [Square(r, c) for c in reversed(self.cols) if c > r]

    def squares(self) -> Iterator[Square]:
        """All squares, rows top to bottom, each row left to right."""
        for r in self.rows:
            yield from self.row_squares(r)

    def contains(self, square) -> bool:
        r, c = square
        return r in self._lengths and c in self._heights and c > r

    def border_steps(self) -> list:
        """Walk the southeast border from the box's northeast corner.

        Returns ``(label, kind)`` pairs with kind ``"v"`` or ``"h"``.  The
        walk uses only the partition, so it is an independent check on the
        labels.
        """
        lengths = self.partition
        x, y = self.n - self.k, 0
        steps = []
        label = 1
        while x > 0 or y < self.k:
            if y < self.k and lengths[y] == x:
                steps.append((label, "v"))
                y += 1
            else:
                steps.append((label, "h"))
                x -= 1
            label += 1
        return steps


def shape_from_rows(k: int, n: int, rows: Iterable[int]) -> LabeledShape:
    """Build the shape whose vertical border steps carry the labels ``rows``."""
    ShapeType(k, n, degenerate=True)
    rows = list(rows)
    for r in rows:
        if not isinstance(r, int) or not 1 <= r <= n:
            raise InvalidArgumentError(f"row label {r!r} is outside [1, {n}]")
    if len(set(rows)) != len(rows):
        dup = next(r for r in rows if rows.count(r) > 1)
        raise InvalidArgumentError(f"row label {dup} is repeated")
    if len(rows) != k:
        raise InvalidArgumentError(f"expected {k} row labels, got {len(rows)}: {sorted(rows)}")
    return LabeledShape(k, n, tuple(sorted(rows)))


def is_in_shape(shape: LabeledShape, s) -> bool:
    return shape.contains(s)


@dataclass(frozen=True)
class LeDiagram:
    """A shape plus a set of + squares.  Construction does not validate."""

    shape: LabeledShape
    plus: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "plus", frozenset(Square(*s) for s in self.plus))

    @property
    def k(self) -> int:
        return self.shape.k

    @property
    def n(self) -> int:
        return self.shape.n

    def is_plus(self, s) -> bool:
        return Square(*s) in self.plus

    def sorted_plus(self) -> list:
        return sorted(self.plus)


@dataclass
class LeReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [[list(a), list(b), list(c)] for a, b, c in self.violations],
        }


def check_in_shape(d: LeDiagram) -> None:
    for s in sorted(d.plus):
        if not d.shape.contains(s):
            raise OutOfShapeError(s)


def le_validate(d: LeDiagram) -> LeReport:
    """Report every triple ((i,j), (k,l), (k,j)) breaking the Le condition.

    Raises OutOfShapeError first if a + square lies outside the shape.
    """
    check_in_shape(d)
    plus = sorted(d.plus)
    violations = []
    for i, j in plus:
        for k, l in plus:
            if i < k and j < l:
                corner = Square(k, j)
                if d.shape.contains(corner) and corner not in d.plus:
                    violations.append((Square(i, j), Square(k, l), corner))
    return LeReport(violations)


def _nearest(d: LeDiagram, candidates: list, s) -> Optional[Square]:
    if not candidates:
        return None
    best = max(candidates, key=lambda sq: (sq.row, -sq.col))
    for other in candidates:
        if not is_weakly_nw(other, best):
            raise DominanceError(
                f"{tuple(other)} is not weakly northwest of {tuple(best)}, "
                f"the nearest + square to {tuple(s)}"
            )
    return best


def _require_in_shape(d: LeDiagram, s) -> Square:
    s = Square(*s)
    if not d.shape.contains(s):
        raise OutOfShapeError(s)
    return s


def nearest_plus_strict_nw(d: LeDiagram, s) -> Optional[Square]:
    """Nearest + square strictly northwest of ``s``, or None."""
    s = _require_in_shape(d, s)
    return _nearest(d, [p for p in d.plus if is_strictly_nw(p, s)], s)


def nearest_plus_weak_nw(d: LeDiagram, s) -> Optional[Square]:
    """Nearest + square weakly northwest of ``s``; ``s`` itself if it is a +."""
    s = _require_in_shape(d, s)
    if s in d.plus:
        return s
    return _nearest(d, [p for p in d.plus if is_weakly_nw(p, s)], s)
