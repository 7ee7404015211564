"""Reading and writing colored graphs (JSON and DOT) and matchings (JSON).

JSON graph document::

    {"n": 4,
     "edges": [[0, 1, "red"], [1, 2, "blue"]],
     "bipartition": [[0, 2], [1, 3]]}      # optional

DOT uses undirected ``graph`` syntax with a ``color`` attribute per edge and,
when a bipartition is present, a ``side`` attribute (``"A"``/``"B"``) per
node.  Every vertex is written as a node statement so isolated vertices
round-trip.  Unknown attributes are ignored on read and never emitted.

A matching document is a JSON list of ``[u, v]`` pairs.
"""

from __future__ import annotations

import json
import re
from typing import Iterable

from .graphs import BLUE, COLORS, RED, ColoredGraph, GraphError, PerfectMatching

JSON = "json"
DOT = "dot"
FORMATS = (JSON, DOT)


class ParseError(GraphError):
    """Input document could not be parsed; the message names the offending element."""


def parse_graph(data: str | bytes, format: str = JSON) -> ColoredGraph:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    if format == JSON:
        return _parse_json(data)
    if format == DOT:
        return _parse_dot(data)
    raise ParseError(f"unknown format {format!r} (expected one of {FORMATS})")


def serialize_graph(graph: ColoredGraph, format: str = JSON) -> str:
    if format == JSON:
        return _write_json(graph)
    if format == DOT:
        return _write_dot(graph)
    raise ParseError(f"unknown format {format!r} (expected one of {FORMATS})")


def parse_matching(data: str | bytes, graph: ColoredGraph) -> PerfectMatching:
    """Read a JSON list of edge pairs and validate it against ``graph``."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"matching document is not valid JSON: {exc}") from None
    if not isinstance(raw, list):
        raise ParseError("matching document must be a JSON list of [u, v] pairs")
    edges = []
    for item in raw:
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(x, int) for x in item)):
            raise ParseError(f"matching entry {item!r} is not an [u, v] pair of integers")
        edges.append((item[0], item[1]))
    return PerfectMatching.from_edges(graph, edges)


def serialize_matching(matching: PerfectMatching) -> str:
    return json.dumps([list(e) for e in matching.sorted_edges()])


# -- JSON ---------------------------------------------------------------------


def _parse_json(text: str) -> ColoredGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"graph document is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("graph document must be a JSON object")
    if "n" not in doc or not isinstance(doc["n"], int) or isinstance(doc["n"], bool):
        raise ParseError('graph document needs an integer "n"')
    n = doc["n"]
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ParseError('"edges" must be a list of [u, v, color] triples')
    triples = []
    for item in raw_edges:
        if (not isinstance(item, list) or len(item) != 3
                or not isinstance(item[0], int) or not isinstance(item[1], int)
                or not isinstance(item[2], str)):
            raise ParseError(f"edge entry {item!r} is not an [u, v, color] triple")
        if item[2] not in COLORS:
            raise ParseError(f"edge [{item[0]}, {item[1]}] has unknown color {item[2]!r}")
        triples.append((item[0], item[1], item[2]))
    bip = None
    if doc.get("bipartition") is not None:
        raw_bip = doc["bipartition"]
        if (not isinstance(raw_bip, list) or len(raw_bip) != 2
                or not all(isinstance(side, list) for side in raw_bip)):
            raise ParseError('"bipartition" must be a pair of vertex lists')
        for side in raw_bip:
            for v in side:
                if not isinstance(v, int):
                    raise ParseError(f"bipartition entry {v!r} is not an integer")
        bip = (raw_bip[0], raw_bip[1])
    try:
        return ColoredGraph.from_edges(n, triples, bip)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def _write_json(graph: ColoredGraph) -> str:
    doc: dict = {
        "n": graph.n,
        "edges": [[u, v, c] for (u, v), c in graph.colors.items()],
    }
    if graph.bipartition is not None:
        doc["bipartition"] = [sorted(graph.bipartition[0]), sorted(graph.bipartition[1])]
    return json.dumps(doc)


# -- DOT ----------------------------------------------------------------------

_TOKEN = re.compile(r'"([^"]*)"|([A-Za-z_][A-Za-z_0-9]*|\d+)|(--|[{}\[\];,=])|(\S)')


def _tokenize_dot(text: str) -> list[str]:
    text = re.sub(r"/\*.*?\*/", " ", text, flags=re.S)
    text = re.sub(r"//[^\n]*", " ", text)
    text = re.sub(r"#[^\n]*", " ", text)
    tokens = []
    for match in _TOKEN.finditer(text):
        quoted, word, sym, bad = match.groups()
        if bad is not None:
            raise ParseError(f"unexpected character {bad!r} in DOT input")
        if quoted is not None:
            tokens.append(quoted)
        elif word is not None:
            tokens.append(word)
        else:
            tokens.append(sym)
    return tokens


class _DotReader:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of DOT input")
        self.pos += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.next()
        if got != tok:
            raise ParseError(f"expected {tok!r} in DOT input, got {got!r}")


def _parse_dot(text: str) -> ColoredGraph:
    reader = _DotReader(_tokenize_dot(text))
    tok = reader.next()
    if tok == "strict":
        tok = reader.next()
    if tok == "digraph":
        raise ParseError("directed DOT graphs are not supported")
    if tok != "graph":
        raise ParseError(f"expected 'graph', got {tok!r}")
    if reader.peek() != "{":
        reader.next()  # optional graph name
    reader.expect("{")

    nodes: set[int] = set()
    sides: dict[int, str] = {}
    triples: list[tuple[int, int, str]] = []

    def read_id() -> int:
        tok = reader.next()
        if not re.fullmatch(r"\d+", tok):
            raise ParseError(f"node id {tok!r} is not a non-negative integer")
        return int(tok)

    def read_attrs() -> dict[str, str]:
        attrs: dict[str, str] = {}
        if reader.peek() != "[":
            return attrs
        reader.next()
        while reader.peek() != "]":
            key = reader.next()
            reader.expect("=")
            attrs[key] = reader.next()
            if reader.peek() in (",", ";"):
                reader.next()
        reader.expect("]")
        return attrs

    while True:
        tok = reader.peek()
        if tok is None:
            raise ParseError("unexpected end of DOT input (missing '}')")
        if tok == "}":
            reader.next()
            break
        if tok == ";":
            reader.next()
            continue
        u = read_id()
        nodes.add(u)
        chain = [u]
        while reader.peek() == "--":
            reader.next()
            v = read_id()
            nodes.add(v)
            chain.append(v)
        attrs = read_attrs()
        if len(chain) == 1:
            if "side" in attrs:
                sides[u] = attrs["side"]
        else:
            color = attrs.get("color")
            if color is None:
                raise ParseError(f"edge {chain[0]}--{chain[1]} has no color attribute")
            if color not in COLORS:
                raise ParseError(f"edge {chain[0]}--{chain[1]} has unknown color {color!r}")
            for a, b in zip(chain, chain[1:]):
                triples.append((a, b, color))
    if reader.peek() is not None:
        raise ParseError(f"trailing content after '}}': {reader.peek()!r}")

    n = max(nodes) + 1 if nodes else 0
    bip = None
    if sides:
        for v, s in sides.items():
            if s not in ("A", "B"):
                raise ParseError(f"node {v} has unknown side {s!r}")
        if set(sides) != set(range(n)):
            raise ParseError("some nodes carry a side attribute but not all of them")
        bip = ([v for v in range(n) if sides[v] == "A"],
               [v for v in range(n) if sides[v] == "B"])
    try:
        return ColoredGraph.from_edges(n, triples, bip)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def _write_dot(graph: ColoredGraph) -> str:
    lines = ["graph colored {"]
    for v in range(graph.n):
        if graph.bipartition is not None:
            side = "A" if v in graph.bipartition[0] else "B"
            lines.append(f'  {v} [side="{side}"];')
        else:
            lines.append(f"  {v};")
    for (u, v), c in graph.colors.items():
        lines.append(f'  {u} -- {v} [color="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
