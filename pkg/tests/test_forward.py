import pytest

from lenecklace import (
    InvalidArgumentError,
    LeDiagram,
    boundary_square,
    necklace_from_le,
    necklace_validate,
    path_from,
    shape_from_rows,
)
from lenecklace.oracle import enumerate_le

from .conftest import EX38_TERMS
from .test_diagram import brute_nearest


def brute_path(d, start):
    sq = brute_nearest(d, start, True)
    out = []
    while sq is not None:
        out.append(sq)
        sq = brute_nearest(d, sq, False)
    return out


class TestBoundarySquare:
    def test_ex38_figure(self):
        sh = shape_from_rows(3, 8, {1, 3, 6})
        got = {i: boundary_square(sh, i) for i in range(2, 9)}
        assert got == {2: (1, 2), 3: (1, 4), 4: (3, 4), 5: (3, 5), 6: (3, 7), 7: (6, 7), 8: (6, 8)}

    def test_top_row_label_absent(self):
        assert boundary_square(shape_from_rows(3, 8, {2, 4, 7}), 2) is None

    def test_empty_shape_all_absent(self):
        sh = shape_from_rows(2, 4, {3, 4})
        assert all(boundary_square(sh, i) is None for i in range(2, 5))

    def test_height_zero_column(self):
        # rows {2,3} in n=4: column 1 has height 0 but 1 is never labelled;
        # rows {1,3} with n=4 give column 2 of height 1
        assert boundary_square(shape_from_rows(2, 4, {1, 3}), 2) == (1, 2)

    @pytest.mark.parametrize("i", [0, 1, 9])
    def test_range(self, i):
        with pytest.raises(InvalidArgumentError):
            boundary_square(shape_from_rows(3, 8, {1, 3, 6}), i)

    def test_boundary_squares_in_shape(self):
        for d in enumerate_le(3, 6):
            for i in range(2, 7):
                s = boundary_square(d.shape, i)
                assert s is None or d.shape.contains(s)


class TestPath:
    def test_i4_verbatim(self, ex38_diagram):
        assert path_from(ex38_diagram, 4) == [(3, 4), (1, 7)]

    def test_i5(self, ex38_diagram):
        expected = brute_path(ex38_diagram, (3, 5))
        assert expected == [(3, 7), (1, 8)]
        assert path_from(ex38_diagram, 5) == expected

    def test_all_zero(self):
        d = LeDiagram(shape_from_rows(3, 8, {1, 3, 6}))
        assert all(path_from(d, i) == [] for i in range(2, 9))

    def test_matches_brute_force_everywhere(self):
        for n in range(2, 7):
            for k in range(1, n):
                for d in enumerate_le(k, n):
                    for i in range(2, n + 1):
                        start = boundary_square(d.shape, i)
                        expected = [] if start is None else brute_path(d, start)
                        assert path_from(d, i) == expected

    def test_monotone(self):
        for d in enumerate_le(3, 6):
            for i in range(2, 7):
                p = path_from(d, i)
                assert all(a.row > b.row and a.col < b.col for a, b in zip(p, p[1:]))
                assert set(p) <= d.plus


class TestNecklaceFromLe:
    def test_ex38(self, ex38_diagram):
        assert list(necklace_from_le(ex38_diagram).terms) == EX38_TERMS

    def test_ex48(self, ex48_diagram, ex48_necklace):
        assert necklace_from_le(ex48_diagram) == ex48_necklace

    def test_all_zero_constant(self):
        N = necklace_from_le(LeDiagram(shape_from_rows(3, 8, {1, 3, 6})))
        assert set(N.terms) == {(1, 3, 6)}

    def test_outputs_are_valid_necklaces(self):
        for n in range(2, 7):
            for k in range(1, n):
                for d in enumerate_le(k, n):
                    N = necklace_from_le(d)
                    assert all(len(t) == k for t in N.terms)
                    assert necklace_validate(N).ok
