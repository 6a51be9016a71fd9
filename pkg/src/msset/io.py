"""Text formats for marked complexes and monoid tables.

Complex documents::

    msset 1
    dim 2
    cell v 0
    cell e 1
    faces e v v
    cell t 2
    faces t v.s0 e e
    mark t
    base v

A face entry is ``CELL`` or ``CELL.WORD`` where ``WORD`` is a sequence of
``s<i>`` written outermost first.  ``#`` starts a comment.

Monoid documents::

    monoid 1
    elems 1 a
    unit 1
    mul a a 1
    ...
"""

from __future__ import annotations

import re
from pathlib import Path

from .core import ComplexError, MarkedComplex, PointedComplex, Simplex, check_valid
from .generators import MonoidError, MonoidTable
from .operators import OperatorError, degeneracy_word, word_operator

_WORD = re.compile(r"^(s\d+)+$")
_BAD_NAME = re.compile(r"[\s.#]")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, diagnostics: list[str] | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
        self.diagnostics = diagnostics or []


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def parse_complex(text: str) -> MarkedComplex | PointedComplex:
    lines = list(_lines(text))
    if not lines or lines[0][1] != ["msset", "1"]:
        raise ParseError("expected header 'msset 1'", lines[0][0] if lines else 1)
    dim_bound = None
    names: list[list[str]] = []
    index: dict[str, tuple[int, int]] = {}
    face_lines: list[tuple[int, list[str]]] = []
    marks: list[tuple[int, str]] = []
    base = None
    for number, toks in lines[1:]:
        kw, args = toks[0], toks[1:]
        if kw == "dim":
            if len(args) != 1:
                raise ParseError("usage: dim D", number)
            dim_bound = _int(args[0], number)
        elif kw == "cell":
            if len(args) != 2:
                raise ParseError("usage: cell NAME d", number)
            name, d = args[0], _int(args[1], number)
            if d < 0:
                raise ParseError("cell dimension must be >= 0", number)
            if name in index:
                raise ParseError(f"duplicate cell {name}", number)
            while len(names) <= d:
                names.append([])
            index[name] = (d, len(names[d]))
            names[d].append(name)
        elif kw == "faces":
            face_lines.append((number, args))
        elif kw == "mark":
            if len(args) != 1:
                raise ParseError("usage: mark NAME", number)
            marks.append((number, args[0]))
        elif kw == "base":
            if len(args) != 1:
                raise ParseError("usage: base NAME", number)
            base = (number, args[0])
        else:
            raise ParseError(f"unknown keyword {kw!r}", number)
    if dim_bound is None:
        raise ParseError("missing 'dim' line")

    faces: dict[tuple[int, int], tuple[Simplex, ...]] = {}
    for number, args in face_lines:
        if not args or args[0] not in index:
            raise ParseError("faces for an undeclared cell", number)
        cell = index[args[0]]
        if cell in faces:
            raise ParseError(f"faces of {args[0]} given twice", number)
        entries = [_face(tok, index, number) for tok in args[1:]]
        if len(entries) != cell[0] + 1:
            raise ParseError(f"{args[0]} needs {cell[0] + 1} faces, got {len(entries)}", number)
        for i, f in enumerate(entries):
            if f.dim != cell[0] - 1:
                raise ParseError(f"face {i} of {args[0]} has dimension {f.dim}", number)
        faces[cell] = tuple(entries)
    for name, cell in index.items():
        if cell[0] > 0 and cell not in faces:
            raise ParseError(f"cell {name} has no faces line")
    marked = []
    for number, name in marks:
        if name not in index:
            raise ParseError(f"mark of undeclared cell {name}", number)
        marked.append(index[name])

    X = MarkedComplex(names, faces, marked, dim_bound)
    try:
        check_valid(X)
    except ComplexError as exc:
        raise ParseError(f"invalid complex: {exc}", diagnostics=exc.diagnostics) from None
    if base is None:
        return X
    number, name = base
    if name not in index or index[name][0] != 0:
        raise ParseError(f"base {name} is not a 0-cell", number)
    return PointedComplex(X, index[name])


def _int(tok: str, number: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", number) from None


def _face(tok: str, index: dict[str, tuple[int, int]], number: int) -> Simplex:
    name, _, word = tok.partition(".")
    if name not in index:
        raise ParseError(f"face refers to undeclared cell {name}", number)
    cell = index[name]
    if not word:
        return Simplex.of(cell)
    if not _WORD.match(word):
        raise ParseError(f"bad degeneracy word {word!r}", number)
    seq = [int(w) for w in word.split("s")[1:]]
    try:
        return Simplex(cell, word_operator(seq, cell[0]))
    except OperatorError as exc:
        raise ParseError(str(exc), number) from None


def _face_token(X: MarkedComplex, f: Simplex) -> str:
    word = degeneracy_word(f.degeneracy)
    return X.name(f.cell) + ("." + "".join(f"s{i}" for i in word) if word else "")


def serialize_complex(X: MarkedComplex | PointedComplex) -> str:
    base = None
    if isinstance(X, PointedComplex):
        X, base = X.complex, X.base
    out = ["msset 1", f"dim {X.dim_bound}"]
    for cell in X.cells():
        name = X.name(cell)
        if _BAD_NAME.search(name) or not name:
            raise ComplexError(f"cell name {name!r} cannot be written")
        out.append(f"cell {name} {cell[0]}")
        if cell[0] > 0:
            out.append("faces " + " ".join([name] + [_face_token(X, f) for f in X.faces[cell]]))
    for cell in sorted(X.marked):
        out.append(f"mark {X.name(cell)}")
    if base is not None:
        out.append(f"base {X.name(base)}")
    return "\n".join(out) + "\n"


def read_complex(path: str | Path) -> MarkedComplex | PointedComplex:
    return parse_complex(Path(path).read_text(encoding="utf-8"))


def write_complex(X: MarkedComplex | PointedComplex, path: str | Path) -> None:
    Path(path).write_text(serialize_complex(X), encoding="utf-8")


# ---------------------------------------------------------------- monoids


def parse_monoid(text: str) -> MonoidTable:
    lines = list(_lines(text))
    if not lines or lines[0][1] != ["monoid", "1"]:
        raise ParseError("expected header 'monoid 1'", lines[0][0] if lines else 1)
    elems = unit = None
    table: dict[tuple[str, str], str] = {}
    for number, toks in lines[1:]:
        kw, args = toks[0], toks[1:]
        if kw == "elems":
            elems = tuple(args)
        elif kw == "unit":
            if len(args) != 1:
                raise ParseError("usage: unit NAME", number)
            unit = args[0]
        elif kw == "mul":
            if len(args) != 3:
                raise ParseError("usage: mul X Y Z", number)
            if (args[0], args[1]) in table:
                raise ParseError(f"product {args[0]}*{args[1]} given twice", number)
            table[(args[0], args[1])] = args[2]
        else:
            raise ParseError(f"unknown keyword {kw!r}", number)
    if elems is None or unit is None:
        raise ParseError("monoid needs 'elems' and 'unit' lines")
    try:
        return MonoidTable(elems, unit, table)
    except MonoidError as exc:
        raise ParseError(f"invalid monoid: {exc}") from None


def serialize_monoid(M: MonoidTable) -> str:
    out = ["monoid 1", "elems " + " ".join(M.elements), f"unit {M.unit}"]
    for a in M.elements:
        for b in M.elements:
            out.append(f"mul {a} {b} {M.mul(a, b)}")
    return "\n".join(out) + "\n"


def read_monoid(path: str | Path) -> MonoidTable:
    return parse_monoid(Path(path).read_text(encoding="utf-8"))
