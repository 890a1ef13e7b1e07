"""Text and JSON formats for necklaces and Le diagrams.

Necklace text is a comma-separated list of n terms, optionally wrapped in
parentheses.  A term is either a digit string such as ``136`` (only when
n <= 9) or a brace set such as ``{1,3,6}``.

Diagram text is a header ``k n rows=<labels>`` followed by one line per
nonempty row, top to bottom, each written left to right with ``+`` and
``0``.  Trailing empty rows may be omitted.
"""

from __future__ import annotations

import json

from .diagram import LeDiagram, Square, shape_from_rows
from .errors import InvalidArgumentError, ParseError
from .forward import boundary_squares
from .necklace import GrassmannNecklace


def _position(text: str, offset: int):
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _tokenize_terms(text: str):
    """Split necklace text into (term_text, offset, is_brace) triples."""
    terms = []
    i = 0
    n = len(text)

    def skip_ws(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    i = skip_ws(i)
    closing = None
    if i < n and text[i] == "(":
        closing = ")"
        i = skip_ws(i + 1)
    while True:
        if i >= n or (closing and text[i] == closing):
            raise ParseError("expected a term", *_position(text, i))
        start = i
        if text[i] == "{":
            end = text.find("}", i)
            if end < 0:
                raise ParseError("unterminated '{'", *_position(text, i))
            terms.append((text[i + 1 : end], start, True))
            i = end + 1
        else:
            while i < n and text[i] not in ",)" and not text[i].isspace():
                i += 1
            terms.append((text[start:i], start, False))
        i = skip_ws(i)
        if i < n and text[i] == ",":
            i = skip_ws(i + 1)
            continue
        break
    if closing:
        if i >= n or text[i] != closing:
            raise ParseError(f"expected '{closing}'", *_position(text, i))
        i = skip_ws(i + 1)
    if i < n:
        raise ParseError(f"unexpected character {text[i]!r}", *_position(text, i))
    return terms


def parse_necklace(text: str, k: int | None = None, n: int | None = None) -> GrassmannNecklace:
    tokens = _tokenize_terms(text)
    count = len(tokens)
    if n is not None and count != n:
        raise ParseError(f"expected {n} terms, found {count}", 1, 1)
    n = count
    terms = []
    for body, offset, brace in tokens:
        if brace:
            parts = [p.strip() for p in body.split(",")] if body.strip() else []
            elems = []
            for p in parts:
                if not p.isdigit():
                    raise ParseError(f"malformed element {p!r}", *_position(text, offset))
                elems.append(int(p))
        else:
            if not body.isdigit():
                raise ParseError(f"malformed term {body!r}", *_position(text, offset))
            if n > 9:
                raise ParseError(
                    f"digit-string term {body!r} is ambiguous for n={n} > 9; use {{...}}",
                    *_position(text, offset),
                )
            elems = [int(ch) for ch in body]
        if any(not 1 <= e <= n for e in elems):
            raise ParseError(f"term {elems} has an element outside [1, {n}]", *_position(text, offset))
        if len(set(elems)) != len(elems):
            raise ParseError(f"term {elems} repeats an element", *_position(text, offset))
        if k is None:
            k = len(elems)
        if len(elems) != k:
            raise ParseError(f"term has {len(elems)} elements, expected {k}", *_position(text, offset))
        terms.append(tuple(elems))
    try:
        return GrassmannNecklace(k, n, tuple(terms))
    except InvalidArgumentError as exc:
        raise ParseError(str(exc), 1, 1) from None


def render_necklace(N: GrassmannNecklace, style: str = "compact") -> str:
    """``compact`` uses digit strings when n <= 9; ``brace`` always uses braces."""
    if style not in ("compact", "brace"):
        raise InvalidArgumentError(f"unknown necklace style {style!r}")
    if style == "compact" and N.n <= 9:
        return ",".join("".join(map(str, t)) for t in N.terms)
    return ",".join("{" + ",".join(map(str, t)) + "}" for t in N.terms)


def render_diagram(d: LeDiagram, ascii_art: bool = False) -> str:
    if ascii_art:
        return _render_art(d)
    lines = [f"{d.k} {d.n} rows={','.join(map(str, d.shape.rows))}"]
    for r in d.shape.rows:
        row = d.shape.row_squares(r)
        if not row:
            break
        lines.append("".join("+" if s in d.plus else "0" for s in row))
    return "\n".join(lines) + "\n"


def parse_diagram(text: str) -> LeDiagram:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError("empty input; expected header 'k n rows=...'", 1, 1)
    header = lines[0].split()
    if len(header) != 3 or not header[2].startswith("rows="):
        raise ParseError("header must read 'k n rows=<comma list>'", 1, 1)
    try:
        k, n = int(header[0]), int(header[1])
        rows_text = header[2][len("rows="):]
        rows = [int(x) for x in rows_text.split(",")] if rows_text else []
    except ValueError:
        raise ParseError("non-integer value in header", 1, 1) from None
    try:
        shape = shape_from_rows(k, n, rows)
    except InvalidArgumentError as exc:
        raise ParseError(str(exc), 1, 1) from None
    body = lines[1:]
    if len(body) > k:
        raise ParseError(f"{len(body)} row lines for k={k}", k + 2, 1)
    plus = set()
    for idx, r in enumerate(shape.rows):
        line = body[idx] if idx < len(body) else ""
        squares = shape.row_squares(r)
        for col, ch in enumerate(line, start=1):
            if ch not in "+0":
                raise ParseError(f"illegal character {ch!r}", idx + 2, col)
        if len(line) != len(squares):
            raise ParseError(
                f"row {r} has length {len(squares)}, line has {len(line)}", idx + 2, 1
            )
        plus.update(s for s, ch in zip(squares, line) if ch == "+")
    return LeDiagram(shape, frozenset(plus))


def _render_art(d: LeDiagram) -> str:
    shape = d.shape
    cols = shape.cols_left_to_right
    width = max(2, len(str(d.n)))
    bars = {s: i for i, s in boundary_squares(shape).items() if s is not None}
    lines = [f"type ({d.k},{d.n})", " " * (width + 1) + "".join(f" {c:>{width}} " for c in cols)]
    for r in shape.rows:
        cells = []
        for s in shape.row_squares(r):
            mark = "+" if s in d.plus else "0"
            cells.append(f"[{mark:>{width}}]")
        lines.append(f"{r:>{width}} " + "".join(cells))
    lines.append("")
    lines.append("border: " + " ".join(f"{lab}{kind}" for lab, kind in shape.border_steps()))
    lines.append("boundary squares:")
    for r in shape.rows:
        cells = []
        for s in shape.row_squares(r):
            cells.append(f"[{bars[s]:>{width}}]" if s in bars else "[" + " " * width + "]")
        lines.append(f"{r:>{width}} " + "".join(cells))
    return "\n".join(line.rstrip() for line in lines) + "\n"


def diagram_to_json(d: LeDiagram) -> dict:
    return {
        "k": d.k,
        "n": d.n,
        "rows": list(d.shape.rows),
        "plus": [[s.row, s.col] for s in d.sorted_plus()],
    }


def diagram_from_json(obj: dict) -> LeDiagram:
    try:
        shape = shape_from_rows(obj["k"], obj["n"], obj["rows"])
        plus = frozenset(Square(*sq) for sq in obj["plus"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad diagram object: {exc!r}", 1, 1) from None
    except InvalidArgumentError as exc:
        raise ParseError(str(exc), 1, 1) from None
    return LeDiagram(shape, plus)


def necklace_to_json(N: GrassmannNecklace) -> dict:
    return {"k": N.k, "n": N.n, "terms": [list(t) for t in N.terms]}


def necklace_from_json(obj: dict) -> GrassmannNecklace:
    try:
        return GrassmannNecklace(obj["k"], obj["n"], tuple(tuple(t) for t in obj["terms"]))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad necklace object: {exc!r}", 1, 1) from None
    except InvalidArgumentError as exc:
        raise ParseError(str(exc), 1, 1) from None


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
