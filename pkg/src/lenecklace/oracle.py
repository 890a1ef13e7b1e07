"""Exhaustive enumerators for small types and the round-trip checks built on them."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .diagram import (
    LabeledShape,
    LeDiagram,
    ShapeType,
    is_weakly_nw,
    is_strictly_nw,
    nearest_plus_strict_nw,
    nearest_plus_weak_nw,
    shape_from_rows,
)
from .errors import LeNecklaceError, ScaleGuardError
from .forward import necklace_from_le, paths
from .necklace import GrassmannNecklace, necklace_validate, step_ok
from .reverse import le_from_necklace

DEFAULT_MAX_N = 8
MAX_N_ENV = "LENECKLACE_MAX_N"


def scale_limit(override: Optional[int] = None) -> int:
    if override is not None:
        return override
    return int(os.environ.get(MAX_N_ENV, DEFAULT_MAX_N))


def _guard(k: int, n: int, max_n: Optional[int]) -> None:
    ShapeType(k, n)
    limit = scale_limit(max_n)
    if n > limit:
        raise ScaleGuardError(
            f"n={n} exceeds the enumeration limit {limit}; pass max_n={n} "
            f"(--max-n {n} on the command line) or set {MAX_N_ENV}={n} to proceed"
        )


def enumerate_shapes(k: int, n: int) -> Iterator[LabeledShape]:
    """One shape per k-subset of [n], in lexicographic order of row labels."""
    ShapeType(k, n)
    for rows in itertools.combinations(range(1, n + 1), k):
        yield shape_from_rows(k, n, rows)


def _le_ok(squares, plus_mask) -> bool:
    plus = [s for s, on in zip(squares, plus_mask) if on]
    zeros = {s for s, on in zip(squares, plus_mask) if not on}
    for i, j in plus:
        for k, l in plus:
            if i < k and j < l and (k, j) in zeros:
                return False
    return True


def enumerate_le(k: int, n: int, max_n: Optional[int] = None) -> Iterator[LeDiagram]:
    """Every filling of every shape that satisfies the Le condition.

    Order: shapes as in :func:`enumerate_shapes`, then fillings by binary
    counting over the squares read row by row, left to right.
    """
    _guard(k, n, max_n)
    for shape in enumerate_shapes(k, n):
        squares = list(shape.squares())
        for mask in itertools.product((False, True), repeat=len(squares)):
            if _le_ok(squares, mask):
                yield LeDiagram(shape, frozenset(s for s, on in zip(squares, mask) if on))


def enumerate_necklaces(k: int, n: int, max_n: Optional[int] = None) -> Iterator[GrassmannNecklace]:
    """Depth-first search over lenient exchange transitions, closing the cycle."""
    _guard(k, n, max_n)
    ground = range(1, n + 1)

    def successors(i, term):
        if i not in term:
            yield term
            return
        kept = tuple(x for x in term if x != i)
        for j in ground:
            if j not in kept:
                yield tuple(sorted(kept + (j,)))

    def extend(terms):
        i = len(terms)
        if i == n:
            if step_ok(n, terms[-1], terms[0]):
                yield GrassmannNecklace(k, n, tuple(terms))
            return
        for nxt in successors(i, terms[-1]):
            terms.append(nxt)
            yield from extend(terms)
            terms.pop()

    for first in itertools.combinations(ground, k):
        yield from extend([first])


def dominance_failures(d: LeDiagram) -> list:
    """Squares where a nearest-northwest query fails to dominate its candidates.

    Candidates are collected here by a plain scan, independent of the
    selection rule inside the query functions.
    """
    failures = []
    for s in d.shape.squares():
        for name, query, rel in (
            ("strict", nearest_plus_strict_nw, is_strictly_nw),
            ("weak", nearest_plus_weak_nw, is_weakly_nw),
        ):
            try:
                chosen = query(d, s)
            except LeNecklaceError as exc:
                failures.append((name, s, str(exc)))
                continue
            candidates = [p for p in d.plus if rel(p, s)]
            if chosen is None:
                if candidates:
                    failures.append((name, s, "no square chosen despite candidates"))
            elif chosen not in candidates or not all(is_weakly_nw(p, chosen) for p in candidates):
                failures.append((name, s, f"chosen {tuple(chosen)} does not dominate"))
    return failures


def coverage_failures(d: LeDiagram) -> list:
    """Symmetric difference between the union of forward paths and the + set."""
    covered = set()
    for path in paths(d).values():
        covered.update(path)
    return sorted(covered ^ d.plus)


def readback_failures(d: LeDiagram, N: GrassmannNecklace) -> list:
    """Indices whose path rows/columns differ from I_1 - I_i and I_i - I_1."""
    bad = []
    first = set(N[1])
    for i, path in paths(d).items():
        rows = [s.row for s in path]
        cols = [s.col for s in path]
        if rows != sorted(first - set(N[i]), reverse=True) or cols != sorted(set(N[i]) - first):
            bad.append(i)
    return bad


def check_diagram(d: LeDiagram) -> tuple:
    """Run every per-diagram check; returns (roundtrip_failures, invariant_failures)."""
    roundtrip, invariants = [], []
    try:
        N = necklace_from_le(d)
        back = le_from_necklace(N)
    except LeNecklaceError as exc:
        roundtrip.append({"expected": diagram_key(d), "got": repr(exc), "witness": diagram_key(d)})
        return roundtrip, invariants
    if back != d:
        roundtrip.append({"expected": diagram_key(d), "got": diagram_key(back), "witness": necklace_key(N)})
    if not necklace_validate(N).ok:
        invariants.append({"check": "necklace-validity", "witness": diagram_key(d)})
    if coverage_failures(d):
        invariants.append({"check": "plus-coverage", "witness": diagram_key(d)})
    if readback_failures(d, N):
        invariants.append({"check": "path-readback", "witness": diagram_key(d)})
    return roundtrip, invariants


def check_necklace(N: GrassmannNecklace) -> list:
    try:
        back = necklace_from_le(le_from_necklace(N))
    except LeNecklaceError as exc:
        return [{"expected": necklace_key(N), "got": repr(exc), "witness": necklace_key(N)}]
    if back != N:
        return [{"expected": necklace_key(N), "got": necklace_key(back), "witness": necklace_key(N)}]
    return []


def diagram_key(d: LeDiagram) -> dict:
    return {"k": d.k, "n": d.n, "rows": list(d.shape.rows), "plus": [list(s) for s in d.sorted_plus()]}


def necklace_key(N: GrassmannNecklace) -> dict:
    return {"k": N.k, "n": N.n, "terms": [list(t) for t in N.terms]}


@dataclass
class EnumerationReport:
    k: int
    n: int
    shapes: int = 0
    le_diagrams: int = 0
    necklaces: int = 0
    roundtrip_failures: list = field(default_factory=list)
    invariant_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            not self.roundtrip_failures
            and not self.invariant_failures
            and self.le_diagrams == self.necklaces
        )

    def merge(self, other: "EnumerationReport") -> "EnumerationReport":
        return EnumerationReport(
            self.k,
            self.n,
            self.shapes + other.shapes,
            self.le_diagrams + other.le_diagrams,
            self.necklaces + other.necklaces,
            self.roundtrip_failures + other.roundtrip_failures,
            self.invariant_failures + other.invariant_failures,
        )

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "ok": self.ok,
            "counts": {
                "shapes": self.shapes,
                "le_diagrams": self.le_diagrams,
                "necklaces": self.necklaces,
            },
            "roundtrip_failures": self.roundtrip_failures,
            "invariant_failures": self.invariant_failures,
        }


def roundtrip_report(k: int, n: int, max_n: Optional[int] = None) -> EnumerationReport:
    """Certify both round trips, necklace validity and + coverage for type (k, n)."""
    report = EnumerationReport(k, n)
    report.shapes = sum(1 for _ in enumerate_shapes(k, n))
    images = set()
    for d in enumerate_le(k, n, max_n):
        report.le_diagrams += 1
        rt, inv = check_diagram(d)
        report.roundtrip_failures.extend(rt)
        report.invariant_failures.extend(inv)
        if not rt:
            images.add(necklace_from_le(d))
    necklaces = set()
    for N in enumerate_necklaces(k, n, max_n):
        report.necklaces += 1
        necklaces.add(N)
        report.roundtrip_failures.extend(check_necklace(N))
    if not report.roundtrip_failures and len(images) != report.le_diagrams:
        report.invariant_failures.append({"check": "injectivity", "witness": None})
    if images != necklaces:
        report.invariant_failures.append(
            {
                "check": "image",
                "witness": {
                    "missing": [necklace_key(N) for N in sorted(necklaces - images, key=lambda x: x.terms)],
                    "extra": [necklace_key(N) for N in sorted(images - necklaces, key=lambda x: x.terms)],
                },
            }
        )
    return report
