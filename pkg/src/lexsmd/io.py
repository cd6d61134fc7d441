"""graph6 and edge-list input, DOT output, and inline graph expressions."""
from __future__ import annotations

import re
from pathlib import Path
from typing import Sequence

from .constructions import (
    FamilySpec,
    cartesian_product,
    corona,
    generate_family,
    join,
    lexicographic_product,
)
from .graph import Graph, GraphError, build_graph, complement, disjoint_union

GRAPH6_MAX_N = 62


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"graph6 byte {offset}: {message}")


def encode_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 short form holds n <= {GRAPH6_MAX_N}, got n={g.n}")
    bits = [g.has_edge(i, j) for j in range(1, g.n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    body = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip("\r\n")
    if not s:
        raise Graph6Error("empty input", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid character {ch!r}", i)
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise Graph6Error(f"only the short size form (n <= {GRAPH6_MAX_N}) is supported", 0)
    nbits = n * (n - 1) // 2
    want = 1 + (nbits + 5) // 6
    if len(s) != want:
        raise Graph6Error(f"expected {want} bytes for n={n}, got {len(s)}", min(len(s), want))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte, pos = divmod(k, 6)
            if (ord(s[1 + byte]) - 63) >> (5 - pos) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6:
        last = ord(s[-1]) - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise Graph6Error("padding bits must be zero", len(s) - 1)
    return build_graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """``u v`` per line, 0-based; ``#`` comments; optional ``n <count>`` header."""
    n = None
    edges = []
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if not seen_data and parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise GraphError(f"line {lineno}: malformed header {raw!r}")
            n = int(parts[1])
            seen_data = True
            continue
        seen_data = True
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {raw!r}") from None
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return build_graph(n, edges)


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="ascii"))


def product_labels(n: int, nprime: int) -> list[str]:
    """Names ``a1, a2, ..., b1, ...`` for the vertices of a product, row-major."""
    if n > 26:
        raise GraphError("letter labels support at most 26 first-factor vertices")
    return [f"{chr(ord('a') + a)}{x + 1}" for a in range(n) for x in range(nprime)]


def write_dot(g: Graph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    if labels is not None and len(labels) != g.n:
        raise GraphError(f"got {len(labels)} labels for {g.n} vertices")
    names = [f'"{labels[v]}"' if labels else str(v) for v in range(g.n)]
    lines = [f"graph {name} {{"]
    lines += [f"  {names[v]};" for v in range(g.n)]
    lines += [f"  {names[u]} -- {names[v]};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# inline graph expressions
# --------------------------------------------------------------------------

_FAMILY_ALIASES = {
    "path": "path",
    "cycle": "cycle",
    "complete": "complete",
    "empty": "empty",
    "multipartite": "complete_multipartite",
    "complete_multipartite": "complete_multipartite",
    "grid": "grid",
    "star": "star",
    "tree": "tree_from_pruefer",
    "pruefer": "tree_from_pruefer",
}
_COMBINATORS = {
    "join": join,
    "lex": lexicographic_product,
    "cartesian": cartesian_product,
    "corona": corona,
}
_TOKEN = re.compile(r"\s*([A-Za-z_0-9]+|[(),:]|[^\s(),:]+)")


def parse_graph_spec(text: str) -> Graph:
    """Parse an inline graph expression.

    Grammar::

        expr   := family ':' ints | 'g6:' graph6 | name '(' expr {',' expr} ')'
        family := path | cycle | complete | empty | multipartite | grid | star | tree
        name   := join | lex | cartesian | corona | union | complement

    ``tree`` takes a Prüfer sequence (``tree:`` alone is K_2).  Examples:
    ``path:4``, ``multipartite:2,2,2``, ``join(complete:1,union(complete:1,complete:2))``.
    """
    pos = 0
    src = text.strip()

    def fail(msg: str) -> GraphError:
        return GraphError(f"graph spec {text!r} at offset {pos}: {msg}")

    def peek() -> str:
        m = _TOKEN.match(src, pos)
        return m.group(1) if m else ""

    def take() -> str:
        nonlocal pos
        m = _TOKEN.match(src, pos)
        if not m:
            raise fail("unexpected end")
        pos = m.end()
        return m.group(1)

    def expr() -> Graph:
        nonlocal pos
        head = take().lower()
        if head == "g6":
            if take() != ":":
                raise fail("expected ':' after g6")
            m = re.compile(r"[?-~]+").match(src, pos)
            if not m:
                raise fail("missing graph6 body")
            pos = m.end()
            return parse_graph6(m.group(0))
        if head in _FAMILY_ALIASES:
            if take() != ":":
                raise fail(f"expected ':' after {head}")
            params = []
            while re.fullmatch(r"\d+", peek() or "x"):
                params.append(int(take()))
                if peek() != ",":
                    break
                # a comma followed by a non-number ends this family's list
                m = re.compile(r",\s*(\d+)").match(src, pos)
                if not m:
                    break
                take()
            return generate_family(FamilySpec(_FAMILY_ALIASES[head], tuple(params)))
        if head in _COMBINATORS or head in ("union", "complement"):
            if take() != "(":
                raise fail(f"expected '(' after {head}")
            args = [expr()]
            while peek() == ",":
                take()
                args.append(expr())
            if take() != ")":
                raise fail("expected ')'")
            if head == "union":
                return disjoint_union(args)
            if head == "complement":
                if len(args) != 1:
                    raise fail("complement takes one argument")
                return complement(args[0])
            if len(args) != 2:
                raise fail(f"{head} takes two arguments")
            return _COMBINATORS[head](*args)
        raise fail(f"unknown graph name {head!r}")

    g = expr()
    if src[pos:].strip():
        raise fail(f"trailing input {src[pos:]!r}")
    return g
