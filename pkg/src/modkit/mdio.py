"""Line-oriented text format for modular data.

Example (semion)::

    mdfile v1
    name "semion"
    rank 2
    conductor 4
    S 0 0 = 1
    S 0 1 = 1
    S 1 1 = -1
    T 0 = 1
    T 1 = z

Header lines (``mdfile``, ``rank``, ``conductor``, ``name``, ``source``) must
precede ``label``, ``S`` and ``T`` lines. ``#`` starts a comment outside of
quoted strings. Strings use JSON escaping.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .cyclo import CycNum, LiteralError, format_literal, minimal_conductor, parse_literal
from .errors import ModkitError
from .moddata import ModularData, RawData, twist_conductor, validate

VERSION = "v1"


class MdParseError(ModkitError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class MdSyntaxError(MdParseError):
    pass


class MissingEntry(MdParseError):
    def __init__(self, i: int, j: Optional[int], line: int):
        what = f"S {i} {j}" if j is not None else f"T {i}"
        super().__init__(f"missing entry {what}", line)
        self.i, self.j = i, j


class DuplicateEntry(MdParseError):
    pass


class IndexOutOfRange(MdParseError):
    pass


class BadConductor(MdParseError):
    pass


@dataclass
class MdFile:
    version: str
    rank: int
    conductor: int
    labels: list[str]
    s: dict[tuple[int, int], CycNum]
    t: dict[int, CycNum]
    name: Optional[str] = None
    source: Optional[str] = None
    lines: dict[tuple, int] = field(default_factory=dict, repr=False)

    def raw(self) -> RawData:
        n = self.rank
        s = [[self.s[(min(i, j), max(i, j))] for j in range(n)] for i in range(n)]
        for (i, j), v in self.s.items():
            s[i][j] = v  # explicit lower-triangle entries win, so validate sees inconsistencies
        t = [self.t[i] for i in range(n)]
        return RawData(n, self.conductor, s, t, list(self.labels), self.name, self.source)


_STRING = r'"(?:[^"\\]|\\.)*"'
_PATTERNS = {
    "mdfile": re.compile(r"mdfile\s+(\S+)"),
    "rank": re.compile(r"rank\s+(\d+)"),
    "conductor": re.compile(r"conductor\s+(\S+)"),
    "name": re.compile(rf"name\s+({_STRING})"),
    "source": re.compile(rf"source\s+({_STRING})"),
    "label": re.compile(rf"label\s+(\d+)\s+({_STRING})"),
    "S": re.compile(r"S\s+(\d+)\s+(\d+)\s*=(.*)"),
    "T": re.compile(r"T\s+(\d+)\s*=(.*)"),
}


def _strip_comment(line: str) -> str:
    quoted = escaped = False
    for pos, ch in enumerate(line):
        if escaped:
            escaped = False
        elif ch == "\\" and quoted:
            escaped = True
        elif ch == '"':
            quoted = not quoted
        elif ch == "#" and not quoted:
            return line[:pos]
    return line


def parse(text: str) -> MdFile:
    """Parse the text format into an ``MdFile``; errors carry 1-based line numbers."""
    version = None
    rank: Optional[int] = None
    conductor: Optional[int] = None
    name = source = None
    labels: dict[int, str] = {}
    s: dict[tuple[int, int], CycNum] = {}
    t: dict[int, CycNum] = {}
    seen: dict[tuple, int] = {}
    lines = text.splitlines()

    def index(v: str, lineno: int) -> int:
        i = int(v)
        if i >= rank:
            raise IndexOutOfRange(f"index {i} out of range for rank {rank}", lineno)
        return i

    def literal(body: str, lineno: int) -> CycNum:
        try:
            return parse_literal(body, conductor)
        except LiteralError as exc:
            raise MdSyntaxError(str(exc), lineno) from None

    def once(key: tuple, lineno: int) -> None:
        if key in seen:
            raise DuplicateEntry(f"{' '.join(map(str, key))} already given on line {seen[key]}", lineno)
        seen[key] = lineno

    for lineno, line in enumerate(lines, start=1):
        body = _strip_comment(line).strip()
        if not body:
            continue
        keyword = body.split(None, 1)[0]
        pat = _PATTERNS.get(keyword)
        m = pat.fullmatch(body) if pat else None
        if m is None:
            raise MdSyntaxError(f"cannot parse {body!r}", lineno)
        if version is None and keyword != "mdfile":
            raise MdSyntaxError("file must start with 'mdfile v1'", lineno)
        if keyword in ("label", "S", "T") and (rank is None or conductor is None):
            raise MdSyntaxError("rank and conductor must be declared before entries", lineno)

        if keyword == "mdfile":
            once(("mdfile",), lineno)
            if m.group(1) != VERSION:
                raise MdSyntaxError(f"unsupported version {m.group(1)!r}", lineno)
            version = m.group(1)
        elif keyword == "rank":
            once(("rank",), lineno)
            rank = int(m.group(1))
            if rank < 1:
                raise MdSyntaxError("rank must be positive", lineno)
        elif keyword == "conductor":
            once(("conductor",), lineno)
            tok = m.group(1)
            if not tok.isdigit() or int(tok) < 1:
                raise BadConductor(f"conductor must be a positive integer, got {tok!r}", lineno)
            conductor = int(tok)
        elif keyword in ("name", "source"):
            once((keyword,), lineno)
            value = json.loads(m.group(1))
            if keyword == "name":
                name = value
            else:
                source = value
        elif keyword == "label":
            i = index(m.group(1), lineno)
            once(("label", i), lineno)
            labels[i] = json.loads(m.group(2))
        elif keyword == "S":
            i, j = index(m.group(1), lineno), index(m.group(2), lineno)
            once(("S", i, j), lineno)
            s[(i, j)] = literal(m.group(3), lineno)
        else:
            i = index(m.group(1), lineno)
            once(("T", i), lineno)
            t[i] = literal(m.group(2), lineno)

    eof = len(lines) + 1
    if version is None:
        raise MdSyntaxError("empty file", eof)
    if rank is None or conductor is None:
        raise MdSyntaxError("missing rank or conductor", eof)
    for i in range(rank):
        for j in range(i, rank):
            if (i, j) not in s:
                if (j, i) in s:
                    s[(i, j)] = s[(j, i)]
                else:
                    raise MissingEntry(i, j, eof)
    for i in range(rank):
        if i not in t:
            raise MissingEntry(i, None, eof)
    full = [labels.get(i, str(i)) for i in range(rank)]
    return MdFile(version, rank, conductor, full, s, t, name, source, seen)


def parse_text(text: str) -> ModularData:
    return validate(parse(text).raw())


def serialize(md: ModularData) -> str:
    """Deterministic text with the smallest conductor that holds every entry."""
    n = md.rank
    upper = [md.s[i][j] for i in range(n) for j in range(i, n)]
    M, vals = minimal_conductor(upper + list(md.theta))
    M2 = twist_conductor(vals[len(upper):], M)
    if M2 != M:
        M, vals = M2, [v.lift(M2) for v in vals]
    out = [f"mdfile {VERSION}"]
    if md.name is not None:
        out.append(f"name {json.dumps(md.name, ensure_ascii=False)}")
    if md.source is not None:
        out.append(f"source {json.dumps(md.source, ensure_ascii=False)}")
    out += [f"rank {n}", f"conductor {M}"]
    for i, lab in enumerate(md.labels):
        if lab != str(i):
            out.append(f"label {i} {json.dumps(lab, ensure_ascii=False)}")
    it = iter(vals)
    for i in range(n):
        for j in range(i, n):
            out.append(f"S {i} {j} = {format_literal(next(it))}")
    for i in range(n):
        out.append(f"T {i} = {format_literal(next(it))}")
    return "\n".join(out) + "\n"


def load(path: Union[str, Path]) -> ModularData:
    return parse_text(Path(path).read_text(encoding="utf-8"))


def dump(md: ModularData, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize(md), encoding="utf-8")
