"""Text file formats for matrices and syntheses.

Matrix format: first non-comment line is the dimension n, followed by n
lines of exactly n characters from {0,1}.  Synthesis format: first
non-comment line is n, then one gate per line as "c t" (1-indexed).
Lines starting with '#' are comments anywhere in the file.
"""

from __future__ import annotations

from .gf2 import BinMatrix, CnotGate, GateError, Gf2Error, Synthesis


class ParseError(ValueError):
    """Malformed matrix or synthesis file; carries a 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _content_lines(text: str):
    for idx, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield idx, line


def parse_matrix(text: str, validate: bool = True) -> BinMatrix:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty matrix file")
    line_no, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise ParseError(line_no, f"expected dimension, got {header!r}") from None
    body = lines[1:]
    if len(body) < n:
        raise ParseError(lines[-1][0], f"expected {n} matrix rows, got {len(body)}")
    if len(body) > n:
        raise ParseError(body[n][0], f"unexpected extra line after {n} rows")
    rows = []
    for line_no, line in body:
        if len(line) != n:
            raise ParseError(line_no, f"expected {n} characters, got {len(line)}")
        row = []
        for ch in line:
            if ch not in "01":
                raise ParseError(line_no, f"invalid character {ch!r} in matrix row")
            row.append(int(ch))
        rows.append(row)
    try:
        return BinMatrix.from_rows(rows, validate=validate)
    except Gf2Error as exc:
        raise ParseError(lines[0][0], str(exc)) from exc


def write_matrix(m: BinMatrix) -> str:
    return f"{m.n}\n{m}\n"


def parse_synthesis(text: str) -> Synthesis:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty synthesis file")
    line_no, header = lines[0]
    try:
        n = int(header)
    except ValueError:
        raise ParseError(line_no, f"expected dimension, got {header!r}") from None
    gates = []
    for line_no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(line_no, f"expected 'control target', got {line!r}")
        try:
            c, t = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(line_no, f"non-integer gate labels in {line!r}") from None
        try:
            gate = CnotGate(c, t)
            gate.validate(n)
        except GateError as exc:
            raise ParseError(line_no, str(exc)) from exc
        gates.append(gate)
    try:
        return Synthesis(n, tuple(gates))
    except Gf2Error as exc:
        raise ParseError(lines[0][0], str(exc)) from exc


def write_synthesis(s: Synthesis) -> str:
    lines = [str(s.n)]
    lines.extend(f"{g.control} {g.target}" for g in s.gates)
    return "\n".join(lines) + "\n"
