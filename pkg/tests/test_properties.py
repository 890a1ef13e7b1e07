"""Property tests on larger random diagrams than exhaustive enumeration reaches."""

from hypothesis import given, settings, strategies as st

from lenecklace import (
    LeDiagram,
    le_from_necklace,
    le_validate,
    necklace_from_le,
    necklace_validate,
    nearest_plus_weak_nw,
    parse_diagram,
    parse_necklace,
    render_diagram,
    render_necklace,
    shape_from_rows,
)
from lenecklace.oracle import coverage_failures, dominance_failures, readback_failures


def le_closure(shape, plus):
    """Smallest Le filling containing ``plus``."""
    plus = set(plus)
    changed = True
    while changed:
        changed = False
        for i, j in list(plus):
            for k, l in list(plus):
                if i < k and j < l and shape.contains((k, j)) and (k, j) not in plus:
                    plus.add((k, j))
                    changed = True
    return LeDiagram(shape, frozenset(plus))


@st.composite
def le_diagrams(draw, max_n=12):
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, n - 1))
    rows = draw(st.lists(st.integers(1, n), min_size=k, max_size=k, unique=True))
    shape = shape_from_rows(k, n, rows)
    squares = list(shape.squares())
    plus = draw(st.lists(st.sampled_from(squares), max_size=len(squares))) if squares else []
    return le_closure(shape, plus)


@given(le_diagrams())
@settings(max_examples=300, deadline=None)
def test_closure_is_le(d):
    assert le_validate(d).ok


@given(le_diagrams())
@settings(max_examples=300, deadline=None)
def test_round_trip_le_side(d):
    N = necklace_from_le(d)
    assert necklace_validate(N).ok
    assert le_from_necklace(N) == d


@given(le_diagrams())
@settings(max_examples=200, deadline=None)
def test_round_trip_necklace_side(d):
    N = necklace_from_le(d)
    assert necklace_from_le(le_from_necklace(N)) == N


@given(le_diagrams())
@settings(max_examples=200, deadline=None)
def test_coverage_readback_dominance(d):
    assert coverage_failures(d) == []
    assert readback_failures(d, necklace_from_le(d)) == []
    assert dominance_failures(d) == []


@given(le_diagrams())
@settings(max_examples=100, deadline=None)
def test_weak_query_fixes_plus_squares(d):
    for s in d.plus:
        assert nearest_plus_weak_nw(d, s) == s


@given(le_diagrams(max_n=14))
@settings(max_examples=200, deadline=None)
def test_text_round_trips(d):
    assert parse_diagram(render_diagram(d)) == d
    N = necklace_from_le(d)
    assert parse_necklace(render_necklace(N, "brace")) == N
    assert parse_necklace(render_necklace(N)) == N
