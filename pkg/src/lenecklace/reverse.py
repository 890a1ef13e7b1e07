"""Reconstruction of the Le diagram of a Grassmann necklace."""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import LeDiagram, Square, le_validate, shape_from_rows
from .errors import InconsistentNecklaceError
from .necklace import GrassmannNecklace, necklace_validate


def plus_squares_for_term(first, term) -> list:
    """Pair I_1 minus I_i (descending) with I_i minus I_1 (ascending)."""
    first, term = set(first), set(term)
    removed = sorted(first - term, reverse=True)
    added = sorted(term - first)
    return [Square(a, b) for a, b in zip(removed, added)]


def _build(N: GrassmannNecklace) -> LeDiagram:
    shape = shape_from_rows(N.k, N.n, N[1])
    plus = set()
    for i in range(2, N.n + 1):
        for s in plus_squares_for_term(N[1], N[i]):
            if not shape.contains(s):
                raise InconsistentNecklaceError(
                    f"I_{i} places a + at {tuple(s)}, outside the shape of I_1 = {N[1]}",
                    index=i,
                    square=s,
                )
            plus.add(s)
    d = LeDiagram(shape, frozenset(plus))
    report = le_validate(d)
    if not report.ok:
        a, b, c = report.violations[0]
        raise InconsistentNecklaceError(
            f"the resulting filling breaks the Le condition: + at {tuple(a)} and {tuple(b)} "
            f"but not at {tuple(c)}",
            square=c,
        )
    return d


def le_from_necklace(N: GrassmannNecklace, check: bool = True) -> LeDiagram:
    """Build the Le diagram of ``N``.

    With ``check=True`` the necklace axioms (lenient) are verified first and
    a failure raises InconsistentNecklaceError.  ``check=False`` skips that
    step; the output is still required to be a valid Le diagram.
    """
    if check:
        report = necklace_validate(N)
        if not report.ok:
            i, a, b = report.failures[0]
            raise InconsistentNecklaceError(
                f"not a Grassmann necklace: I_{i} = {a} cannot be followed by {b}", index=i
            )
    return _build(N)


@dataclass
class ReverseResult:
    diagram: LeDiagram
    necklace_valid: bool
    warnings: list = field(default_factory=list)


def le_from_necklace_report(N: GrassmannNecklace) -> ReverseResult:
    """Run the reverse construction without rejecting invalid input up front.

    An invalid necklace whose output still satisfies the Le condition comes
    back with ``necklace_valid=False`` and a warning.
    """
    report = necklace_validate(N)
    d = _build(N)
    result = ReverseResult(d, report.ok)
    if not report.ok:
        result.warnings.append(
            f"input fails the necklace axioms at indices {report.failing_indices}; "
            "the diagram need not map back to it"
        )
    return result


def positroid_dimension(d: LeDiagram) -> int:
    return len(d.plus)
