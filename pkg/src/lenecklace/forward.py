"""Oh's construction of the Grassmann necklace of a Le diagram."""

from __future__ import annotations

from typing import Optional

from .diagram import LabeledShape, LeDiagram, Square, nearest_plus_strict_nw, nearest_plus_weak_nw
from .errors import InvalidArgumentError, LeNecklaceError
from .necklace import GrassmannNecklace


def boundary_square(shape: LabeledShape, i: int) -> Optional[Square]:
    """The square labelled i-bar along the southeast boundary, or None.

    A column label names the bottom square of its column.  A row label names
    the square directly above the easternmost square of that row; the top
    row and empty rows get nothing, as do columns of height zero.
    """
    if not isinstance(i, int) or not 2 <= i <= shape.n:
        raise InvalidArgumentError(f"boundary label {i!r} is outside [2, {shape.n}]")
    if i in shape.cols:
        above = [r for r in shape.rows if r < i]
        return Square(above[-1], i) if above else None
    idx = shape.rows.index(i)
    if idx == 0 or shape.row_length(i) == 0:
        return None
    return Square(shape.rows[idx - 1], min(c for c in shape.cols if c > i))


def boundary_squares(shape: LabeledShape) -> dict:
    return {i: boundary_square(shape, i) for i in range(2, shape.n + 1)}


def path_from(d: LeDiagram, i: int) -> list:
    """Squares visited by the walk starting near i-bar."""
    start = boundary_square(d.shape, i)
    if start is None:
        return []
    current = nearest_plus_weak_nw(d, start)
    path = []
    while current is not None:
        path.append(current)
        current = nearest_plus_strict_nw(d, current)
    return path


def paths(d: LeDiagram) -> dict:
    return {i: path_from(d, i) for i in range(2, d.n + 1)}


def term_from_path(first: tuple, path: list) -> tuple:
    rows = {s.row for s in path}
    cols = {s.col for s in path}
    return tuple(sorted((set(first) - rows) | cols))


def necklace_from_le(d: LeDiagram) -> GrassmannNecklace:
    """Expects a diagram that passes ``le_validate``."""
    first = d.shape.rows
    terms = [first]
    for i in range(2, d.n + 1):
        term = term_from_path(first, path_from(d, i))
        if len(term) != d.k:
            raise LeNecklaceError(f"I_{i} = {term} has {len(term)} elements, expected {d.k}")
        terms.append(term)
    return GrassmannNecklace(d.k, d.n, tuple(terms))
