"""Plain-text matrix files.

Two layouts, chosen by the header line:

``n p q``  -- an anti-alternating matrix through its (p, q) coloring:
a label line ``a`` followed by p rows of q entries, then ``b`` with the
p-1 strict-upper-triangle rows of the skew block, then ``c`` with its
q-1 rows.  The mirrored halves are filled in automatically, so files in
this layout cannot violate anti-alternation.

``full 2m`` -- a full alternating matrix as 2m rows of 2m entries.

Entries are whitespace-separated, so each entry must itself be free of
spaces: a rational like ``-3/4`` or a polynomial literal like
``2*x[1,2]+1``.  Blank lines and ``#`` comments are skipped.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable

from .pfaffian import AlternatingMatrix, AntiAlternatingMatrix, ShapeError
from .rings import Poly, PolyParseError, parse_poly, parse_rational


class MatrixParseError(ValueError):
    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


_TOKEN = re.compile(r"\S+")


def _content_lines(text: str):
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            out.append((lineno, body))
    return out


def _entry_parser(ring: str) -> Callable[[str], object]:
    if ring == "rational":
        return parse_rational
    if ring == "poly":
        return parse_poly
    raise ValueError(f"unknown ring {ring!r}; expected 'rational' or 'poly'")


class _LineReader:
    def __init__(self, text: str):
        self.lines = _content_lines(text)
        self.k = 0

    def next_line(self, what: str):
        if self.k >= len(self.lines):
            last = self.lines[-1][0] if self.lines else 1
            raise MatrixParseError(f"unexpected end of file, expected {what}", last)
        lineno, body = self.lines[self.k]
        self.k += 1
        return lineno, body

    def done(self) -> bool:
        return self.k >= len(self.lines)


def _parse_row(lineno: int, body: str, count: int, parse_entry, what: str):
    tokens = list(_TOKEN.finditer(body))
    if len(tokens) != count:
        raise MatrixParseError(f"expected {count} entries for {what}, found {len(tokens)}", lineno)
    row = []
    for tok in tokens:
        try:
            row.append(parse_entry(tok.group()))
        except PolyParseError as exc:
            raise MatrixParseError(f"bad entry {tok.group()!r}: {exc}", lineno, tok.start() + 1) from None
    return row


def _expect_label(reader: _LineReader, label: str):
    lineno, body = reader.next_line(f"block label {label!r}")
    if body.strip() != label:
        raise MatrixParseError(f"expected block label {label!r}, found {body.strip()!r}", lineno)


def loads(text: str, ring: str = "poly"):
    """Parse matrix text into an AlternatingMatrix or AntiAlternatingMatrix."""
    parse_entry = _entry_parser(ring)
    reader = _LineReader(text)
    lineno, header = reader.next_line("a header line")
    fields = header.split()
    if fields and fields[0] == "full":
        if len(fields) != 2 or not fields[1].isdigit():
            raise MatrixParseError("full header must read 'full <size>'", lineno)
        size = int(fields[1])
        rows = [_parse_row(*reader.next_line(f"row {r + 1}"), size, parse_entry, f"row {r + 1}")
                for r in range(size)]
        _expect_eof(reader)
        return AlternatingMatrix(rows)
    if len(fields) != 3 or not all(f.lstrip("-").isdigit() for f in fields):
        raise MatrixParseError("header must read 'n p q' or 'full <size>'", lineno)
    n, p, q = (int(f) for f in fields)
    if p + q != 2 * n or p < 1 or q < 1:
        raise MatrixParseError(f"coloring ({p}, {q}) does not match half-size {n}", lineno)
    _expect_label(reader, "a")
    a_rows = [_parse_row(*reader.next_line(f"a row {i + 1}"), q, parse_entry, f"a row {i + 1}")
              for i in range(p)]
    _expect_label(reader, "b")
    b_upper = [_parse_row(*reader.next_line(f"b row {i}"), p - i, parse_entry, f"b row {i}")
               for i in range(1, p)]
    _expect_label(reader, "c")
    c_upper = [_parse_row(*reader.next_line(f"c row {i}"), q - i, parse_entry, f"c row {i}")
               for i in range(1, q)]
    _expect_eof(reader)
    return AntiAlternatingMatrix.from_upper_blocks(p, q, a_rows, b_upper, c_upper)


def _expect_eof(reader: _LineReader):
    if not reader.done():
        lineno, body = reader.lines[reader.k]
        raise MatrixParseError(f"unexpected trailing content {body.strip()!r}", lineno)


def load_path(path: str, ring: str = "poly"):
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read(), ring=ring)


def _entry_str(x) -> str:
    return str(x).replace(" ", "")


def dumps(M) -> str:
    """Render a matrix back into the file format (inverse of loads)."""
    lines = []
    if isinstance(M, AntiAlternatingMatrix):
        p, q = M.p, M.q
        lines.append(f"{(p + q) // 2} {p} {q}")
        lines.append("a")
        for row in M.a:
            lines.append(" ".join(_entry_str(x) for x in row))
        lines.append("b")
        for i in range(1, p):
            lines.append(" ".join(_entry_str(M.b[i - 1][j - 1]) for j in range(i + 1, p + 1)))
        lines.append("c")
        for i in range(1, q):
            lines.append(" ".join(_entry_str(M.c[i - 1][j - 1]) for j in range(i + 1, q + 1)))
    elif isinstance(M, AlternatingMatrix):
        lines.append(f"full {M.size}")
        for row in M.rows:
            lines.append(" ".join(_entry_str(x) for x in row))
    else:
        raise TypeError(f"cannot serialise {type(M).__name__}")
    return "\n".join(lines) + "\n"
