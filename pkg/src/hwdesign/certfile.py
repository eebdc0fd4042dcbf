"""Plain-text certificate files.

Layout, one directive per line (``#`` starts a comment)::

    version 1
    moduli 9 2
    host complete
    vertices inf (0,0) (0,1) ...
    profile AP9=9 half9=1
    provenance {"construction": "arcs_template", ...}
    class almost_parallel 9 missing (0,1)
    cycle (0,0) (1,1) ...
    end

Host kinds add ``remove`` lines (complete_minus_1f), ``part`` lines
(multipartite), ``host lex_cycle M N`` or ``connection`` (cayley). Vertices
are ``(x,y)``, ``x_y``, ``inf`` or ``"name"``; coordinates are reduced on
read. A ``# printed:`` comment inside a class keeps the unreduced form of a
base cycle as it appears in the source tables and is read back into the
provenance.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Iterator

from .errors import ParseError, Rejected
from .model import (
    INF,
    KINDS,
    ONE_FACTOR,
    Certificate,
    FactorClass,
    HostGraph,
    Vertex,
    label,
    res,
)

FORMAT_VERSION = 1
PRINTED = "printed"

_TOKEN = re.compile(r'\s*(\([^)]*\)|"[^"]*"|[^\s]+)')
_INT = re.compile(r"-?\d+$")


# ---------------------------------------------------------------------------
# writing


def _vertex(v: Vertex) -> str:
    return str(v)


def _host_lines(host: HostGraph) -> list[str]:
    lines = []
    if host.moduli or host.kind in ("complete", "complete_minus_1f", "multipartite"):
        moduli = host.moduli or _moduli_of(host)
        if moduli:
            lines.append("moduli " + " ".join(map(str, moduli)))
    if host.kind == "lex_cycle":
        lines.append(f"host lex_cycle {host.m} {host.n}")
        return lines
    lines.append(f"host {host.kind}")
    if host.kind in ("complete", "complete_minus_1f"):
        lines.append("vertices " + " ".join(map(_vertex, host.vertices)))
        for a, b in host.one_factor:
            lines.append(f"remove {a} {b}")
    elif host.kind == "multipartite":
        for p in host.parts:
            lines.append("part " + " ".join(map(_vertex, p)))
    elif host.kind == "cayley":
        lines.append("connection " + " ".join("(" + ",".join(map(str, s)) + ")" for s in host.connection))
    return lines


def _moduli_of(host: HostGraph) -> tuple[int, ...]:
    for v in host.vertex_set():
        if v.is_residue:
            return v.moduli
    return ()


def serialize(cert: Certificate) -> str:
    out = [f"version {FORMAT_VERSION}"]
    out += _host_lines(cert.host)
    out.append("profile " + " ".join(f"{k}={v}" for k, v in cert.profile.items()))
    prov = {k: v for k, v in cert.provenance.items() if k != PRINTED}
    printed = cert.provenance.get(PRINTED, {})
    out.append("provenance " + json.dumps(prov, sort_keys=True))
    for group, rows in printed.items():
        if not group.isdigit():
            out += [f"# {PRINTED} {group}: {text}" for text in rows]
    for i, cls in enumerate(cert.classes):
        head = f"class {cls.kind}"
        if cls.k is not None:
            head += f" {cls.k}"
        if cls.missing is not None:
            head += f" missing {cls.missing}"
        out.append(head)
        for text in printed.get(str(i), []):
            out.append(f"# {PRINTED}: {text}")
        word = "pair" if cls.kind == ONE_FACTOR else "cycle"
        for c in cls.cycles:
            out.append(word + " " + " ".join(map(_vertex, c)))
    out.append("end")
    return "\n".join(out) + "\n"


def write(cert: Certificate, path: str | Path) -> None:
    Path(path).write_text(serialize(cert))


# ---------------------------------------------------------------------------
# reading


class _Reader:
    def __init__(self, text: str):
        self.lines = text.splitlines()

    def directives(self) -> Iterator[tuple[int, str, str, int]]:
        """Yield (line number, keyword, rest, column of rest); printed comments come through as keyword '#printed'."""
        for no, raw in enumerate(self.lines, start=1):
            stripped = raw.strip()
            if not stripped:
                continue
            if stripped.startswith("#"):
                body = stripped[1:].strip()
                head, sep, text = body.partition(":")
                if sep and head.split()[:1] == [PRINTED]:
                    # "printed: row" inside a class, "printed NAME: row" for a named group
                    yield no, "#printed", head[len(PRINTED):].strip() + "\t" + text.strip(), 0
                continue
            text = raw.split("#", 1)[0] if not raw.lstrip().startswith("provenance") else raw
            text = text.rstrip()
            word, _, rest = text.strip().partition(" ")
            col = len(text) - len(text.lstrip()) + len(word) + 2
            yield no, word, rest.strip(), col


def _tokens(rest: str, line: int, col: int) -> list[tuple[str, int]]:
    out = []
    pos = 0
    while pos < len(rest):
        if rest[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(rest, pos)
        if not m:
            raise ParseError(f"cannot read token at {rest[pos:pos + 10]!r}", line, col + pos)
        out.append((m.group(1), col + m.start(1)))
        pos = m.end()
    return out


def _parse_vertex(tok: str, moduli: tuple[int, ...] | None, line: int, col: int) -> Vertex:
    if tok == "inf":
        return INF
    if tok.startswith('"'):
        if len(tok) < 3 or not tok.endswith('"'):
            raise ParseError(f"bad label {tok}", line, col)
        return label(tok[1:-1])
    if tok.startswith("("):
        if not tok.endswith(")"):
            raise ParseError(f"unterminated vertex {tok}", line, col)
        parts = [p.strip() for p in tok[1:-1].split(",")]
    elif "_" in tok:
        parts = tok.split("_")
    else:
        raise ParseError(f"not a vertex: {tok}", line, col)
    if not all(_INT.match(p) for p in parts):
        raise ParseError(f"non-integer coordinate in {tok}", line, col)
    if moduli is None:
        raise ParseError("residue vertex before the moduli line", line, col)
    if len(parts) != len(moduli):
        raise ParseError(f"{tok} has {len(parts)} coordinates, moduli have {len(moduli)}", line, col)
    return res(tuple(int(p) for p in parts), moduli)


def _int(tok: str, line: int, col: int) -> int:
    if not _INT.match(tok):
        raise ParseError(f"expected an integer, got {tok!r}", line, col)
    return int(tok)


def parse(text: str) -> Certificate:
    reader = _Reader(text)
    version = None
    moduli: tuple[int, ...] | None = None
    host_kind = None
    lex = None
    vertices: list[Vertex] = []
    removed: list[tuple[Vertex, Vertex]] = []
    parts: list[list[Vertex]] = []
    connection: list[tuple[int, ...]] = []
    profile: dict[str, int] | None = None
    provenance: dict | None = None
    printed: dict[str, list[str]] = {}
    classes: list[FactorClass] = []
    current: dict | None = None
    ended = False
    last_line = 0

    def close_class():
        nonlocal current
        if current is not None:
            try:
                classes.append(FactorClass.of(current["kind"], current["cycles"], current["k"], current["missing"]))
            except Rejected as exc:
                raise ParseError(str(exc), current["line"], 1) from None
            current = None

    for no, word, rest, col in reader.directives():
        last_line = no
        if ended:
            raise ParseError("content after 'end'", no, 1)
        if version is None and word != "version":
            raise ParseError("the first directive must be 'version'", no, 1)
        toks = _tokens(rest, no, col) if word not in ("provenance", "#printed") else []
        if word == "version":
            if version is not None:
                raise ParseError("duplicate version", no, 1)
            if len(toks) != 1 or _int(toks[0][0], no, toks[0][1]) != FORMAT_VERSION:
                raise ParseError(f"unsupported version (expected {FORMAT_VERSION})", no, col)
            version = FORMAT_VERSION
        elif word == "moduli":
            moduli = tuple(_int(t, no, c) for t, c in toks)
            if not moduli or min(moduli) < 1:
                raise ParseError("moduli must be positive integers", no, col)
        elif word == "host":
            if not toks:
                raise ParseError("host kind missing", no, col)
            host_kind = toks[0][0]
            if host_kind == "lex_cycle":
                if len(toks) != 3:
                    raise ParseError("host lex_cycle needs M N", no, col)
                lex = (_int(toks[1][0], no, toks[1][1]), _int(toks[2][0], no, toks[2][1]))
            elif host_kind not in ("complete", "complete_minus_1f", "multipartite", "cayley"):
                raise ParseError(f"unknown host kind {host_kind!r}", no, toks[0][1])
        elif word == "vertices":
            vertices.extend(_parse_vertex(t, moduli, no, c) for t, c in toks)
        elif word == "remove":
            if len(toks) != 2:
                raise ParseError("remove takes two vertices", no, col)
            removed.append(tuple(_parse_vertex(t, moduli, no, c) for t, c in toks))
        elif word == "part":
            parts.append([_parse_vertex(t, moduli, no, c) for t, c in toks])
        elif word == "connection":
            for t, c in toks:
                if not (t.startswith("(") and t.endswith(")")):
                    raise ParseError(f"connection element must be a tuple, got {t}", no, c)
                connection.append(tuple(_int(p.strip(), no, c) for p in t[1:-1].split(",")))
        elif word == "profile":
            profile = {}
            for t, c in toks:
                key, eq, val = t.partition("=")
                if not eq:
                    raise ParseError(f"profile entry must be KEY=COUNT, got {t}", no, c)
                profile[key] = _int(val, no, c + len(key) + 1)
        elif word == "provenance":
            try:
                provenance = json.loads(rest) if rest else {}
            except json.JSONDecodeError as exc:
                raise ParseError(f"provenance is not valid JSON: {exc.msg}", no, col + exc.colno - 1) from None
            if not isinstance(provenance, dict):
                raise ParseError("provenance must be a JSON object", no, col)
        elif word == "class":
            close_class()
            if not toks or toks[0][0] not in KINDS:
                raise ParseError(f"unknown class kind {toks[0][0] if toks else ''!r}", no, col)
            kind = toks[0][0]
            k = None
            missing = None
            i = 1
            if i < len(toks) and _INT.match(toks[i][0]):
                k = int(toks[i][0])
                i += 1
            if i < len(toks):
                if toks[i][0] != "missing" or i + 2 != len(toks):
                    raise ParseError(f"unexpected {toks[i][0]!r} in class header", no, toks[i][1])
                missing = _parse_vertex(toks[i + 1][0], moduli, no, toks[i + 1][1])
            current = {"kind": kind, "k": k, "missing": missing, "cycles": [], "line": no}
        elif word in ("cycle", "pair"):
            if current is None:
                raise ParseError(f"{word} outside a class", no, 1)
            if (word == "pair") != (current["kind"] == ONE_FACTOR):
                raise ParseError(f"{word} does not match class kind {current['kind']}", no, 1)
            current["cycles"].append([_parse_vertex(t, moduli, no, c) for t, c in toks])
        elif word == "#printed":
            group, _, text = rest.partition("\t")
            if not group:
                if current is None:
                    raise ParseError("printed comment outside a class", no, 1)
                group = str(len(classes))
            printed.setdefault(group, []).append(text)
        elif word == "end":
            close_class()
            ended = True
        else:
            raise ParseError(f"unknown directive {word!r}", no, 1)

    if version is None:
        raise ParseError("missing version", last_line + 1, 1)
    if not ended:
        raise ParseError("missing 'end' (truncated file?)", last_line + 1, 1)
    if host_kind is None:
        raise ParseError("missing host", last_line, 1)
    if profile is None:
        raise ParseError("missing profile", last_line, 1)
    try:
        host = _build_host(host_kind, moduli, lex, vertices, removed, parts, connection)
    except Rejected as exc:
        raise ParseError(str(exc), last_line, 1) from None
    prov = dict(provenance or {})
    if printed:
        prov[PRINTED] = printed
    return Certificate.build(host, classes, prov, profile=profile)


def _build_host(kind, moduli, lex, vertices, removed, parts, connection) -> HostGraph:
    if kind == "complete":
        return HostGraph.complete(vertices)
    if kind == "complete_minus_1f":
        return HostGraph.complete_minus_1f(vertices, removed)
    if kind == "multipartite":
        return HostGraph.multipartite(parts)
    if kind == "lex_cycle":
        return HostGraph.lex_cycle(*lex)
    if moduli is None:
        raise Rejected("cayley host needs moduli", "REJECT_HOST")
    return HostGraph.cayley(moduli, connection)


def read(path: str | Path) -> Certificate:
    return parse(Path(path).read_text())
