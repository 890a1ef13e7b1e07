"""Grassmann necklaces and validation of the exchange axioms."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .diagram import ShapeType
from .errors import InvalidArgumentError


@dataclass(frozen=True)
class GrassmannNecklace:
    """Terms I_1..I_n, each stored as a sorted tuple.

    Only cardinality and range are enforced here; the exchange axioms are
    checked by :func:`necklace_validate`.
    """

    k: int
    n: int
    terms: tuple

    def __post_init__(self):
        ShapeType(self.k, self.n, degenerate=True)
        if len(self.terms) != self.n:
            raise InvalidArgumentError(
                f"a necklace of type ({self.k},{self.n}) needs {self.n} terms, got {len(self.terms)}"
            )
        terms = []
        for i, term in enumerate(self.terms, start=1):
            t = tuple(sorted(term))
            if len(set(t)) != len(t):
                raise InvalidArgumentError(f"term I_{i} = {t} repeats an element")
            if len(t) != self.k:
                raise InvalidArgumentError(f"term I_{i} = {t} has {len(t)} elements, expected {self.k}")
            for x in t:
                if not isinstance(x, int) or not 1 <= x <= self.n:
                    raise InvalidArgumentError(f"element {x!r} of I_{i} is outside [1, {self.n}]")
            terms.append(t)
        object.__setattr__(self, "terms", tuple(terms))

    @classmethod
    def from_terms(cls, terms: Sequence) -> "GrassmannNecklace":
        terms = [tuple(t) for t in terms]
        if not terms:
            raise InvalidArgumentError("a necklace needs at least one term")
        return cls(len(terms[0]), len(terms), tuple(terms))

    def __getitem__(self, i: int) -> tuple:
        """1-based, cyclic: ``N[n + 1] == N[1]``."""
        return self.terms[(i - 1) % self.n]

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return self.n


@dataclass
class NecklaceReport:
    strict: bool = False
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def failing_indices(self) -> list:
        return [i for i, _, _ in self.failures]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "strict": self.strict,
            "failures": [
                {"i": i, "I_i": list(a), "I_next": list(b)} for i, a, b in self.failures
            ],
        }


def step_ok(i: int, current, following, strict: bool = False) -> bool:
    """Check the transition I_i -> I_{i+1}."""
    current, following = set(current), set(following)
    if i not in current:
        return current == following
    kept = current - {i}
    if not kept <= following or len(following) != len(current):
        return False
    (j,) = following - kept
    return not (strict and j == i)


def necklace_validate(N: GrassmannNecklace, strict: bool = False) -> NecklaceReport:
    """Check every cyclic transition.

    Lenient mode lets an element i in I_i stay (I_{i+1} = I_i), which is how
    coloops appear.  Strict mode requires the incoming element to come from
    outside I_i.
    """
    report = NecklaceReport(strict=strict)
    for i in range(1, N.n + 1):
        if not step_ok(i, N[i], N[i + 1], strict):
            report.failures.append((i, N[i], N[i + 1]))
    return report


def term_diffs(N: GrassmannNecklace, i: int):
    """Return (I_1 minus I_i descending, I_i minus I_1 ascending)."""
    if not 2 <= i <= N.n:
        raise InvalidArgumentError(f"index {i} is outside [2, {N.n}]")
    first, term = set(N[1]), set(N[i])
    return tuple(sorted(first - term, reverse=True)), tuple(sorted(term - first))
