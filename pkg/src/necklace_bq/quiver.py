"""Finite quivers, their doubles, the star involution and the pairing on edges."""

from __future__ import annotations

import re
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple


class QuiverSyntaxError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class Edge(NamedTuple):
    """An edge of the double quiver.

    ``src``/``tgt`` are vertex indices and are redundant with ``arrow`` and
    ``starred``; carrying them avoids threading the quiver through every
    combinatorial routine.  Tuple order is the total edge order used for all
    canonical keys: arrow index first, unstarred before starred.
    """

    arrow: int
    starred: bool
    src: int
    tgt: int


def star(e: Edge) -> Edge:
    return Edge(e.arrow, not e.starred, e.tgt, e.src)


def pairing(e: Edge, f: Edge) -> int:
    """+1 if f = e* with e in Q, -1 if e = f* with f in Q, else 0."""
    if e.arrow != f.arrow or e.starred == f.starred:
        return 0
    return -1 if e.starred else 1


def source(e: Edge) -> int:
    return e.src


def target(e: Edge) -> int:
    return e.tgt


class Quiver:
    """A finite quiver with ordered vertex and arrow lists."""

    def __init__(self, vertices: Sequence[str] = (), arrows: Sequence[Tuple[str, str, str]] = ()):
        self.vertices: Tuple[str, ...] = tuple(vertices)
        self._vindex: Dict[str, int] = {}
        for n, v in enumerate(self.vertices):
            if v in self._vindex:
                raise QuiverSyntaxError(f"duplicate vertex {v!r}")
            self._vindex[v] = n
        self.arrows: Tuple[Tuple[str, int, int], ...] = ()
        self._aindex: Dict[str, int] = {}
        arr = []
        for name, s, t in arrows:
            if name in self._aindex or name in self._vindex:
                raise QuiverSyntaxError(f"duplicate name {name!r}")
            for endpoint in (s, t):
                if endpoint not in self._vindex:
                    raise QuiverSyntaxError(f"unknown endpoint {endpoint!r} of arrow {name!r}")
            self._aindex[name] = len(arr)
            arr.append((name, self._vindex[s], self._vindex[t]))
        self.arrows = tuple(arr)

    def __eq__(self, other):
        return isinstance(other, Quiver) and self.vertices == other.vertices and self.arrows == other.arrows

    def __hash__(self):
        return hash((self.vertices, self.arrows))

    def __repr__(self):
        return f"Quiver({len(self.vertices)} vertices, {len(self.arrows)} arrows)"

    # -- lookup ---------------------------------------------------------

    def vertex(self, name: str) -> int:
        try:
            return self._vindex[name]
        except KeyError:
            raise KeyError(f"unknown vertex {name!r}") from None

    def vertex_name(self, v: int) -> str:
        return self.vertices[v]

    def edge(self, name: str, starred: bool = False) -> Edge:
        try:
            i = self._aindex[name]
        except KeyError:
            raise KeyError(f"unknown arrow {name!r}") from None
        _, s, t = self.arrows[i]
        return Edge(i, starred, t, s) if starred else Edge(i, False, s, t)

    def parse_edge(self, token: str) -> Edge:
        if token.endswith("*"):
            return self.edge(token[:-1], True)
        return self.edge(token, False)

    def edge_name(self, e: Edge) -> str:
        name = self.arrows[e.arrow][0]
        return name + "*" if e.starred else name

    def arrow_names(self) -> List[str]:
        return [a[0] for a in self.arrows]

    def double_edges(self) -> List[Edge]:
        """All edges of the double quiver in the canonical edge order."""
        out = []
        for i in range(len(self.arrows)):
            out.append(self.edge(self.arrows[i][0]))
            out.append(self.edge(self.arrows[i][0], True))
        return out

    def out_edges(self, v: int) -> List[Edge]:
        return [e for e in self.double_edges() if e.src == v]

    def to_text(self) -> str:
        lines = [f"vertex {v}" for v in self.vertices]
        lines += [f"arrow {n}: {self.vertices[s]} -> {self.vertices[t]}" for n, s, t in self.arrows]
        return "\n".join(lines) + ("\n" if lines else "")


_IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
_VERTEX_LINE = re.compile(rf"vertex\s+({_IDENT})")
_ARROW_LINE = re.compile(rf"arrow\s+({_IDENT})\s*:\s*({_IDENT})\s*->\s*({_IDENT})")


def parse_quiver(text: str) -> Quiver:
    vertices: List[str] = []
    arrows: List[Tuple[str, str, str]] = []
    seen: Dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _VERTEX_LINE.fullmatch(line)
        if m:
            name = m.group(1)
            if name in seen:
                raise QuiverSyntaxError(f"duplicate name {name!r}", lineno)
            seen[name] = lineno
            vertices.append(name)
            continue
        m = _ARROW_LINE.fullmatch(line)
        if m:
            name, s, t = m.groups()
            if name in seen:
                raise QuiverSyntaxError(f"duplicate name {name!r}", lineno)
            for endpoint in (s, t):
                if endpoint not in vertices:
                    raise QuiverSyntaxError(f"unknown endpoint {endpoint!r}", lineno)
            seen[name] = lineno
            arrows.append((name, s, t))
            continue
        raise QuiverSyntaxError(f"cannot parse {line!r}", lineno)
    return Quiver(vertices, arrows)


JORDAN_TEXT = """\
# framed Jordan quiver
vertex v1
vertex v2
arrow a: v1 -> v1
arrow b: v2 -> v1
"""


def jordan_quiver() -> Quiver:
    """The framed Jordan quiver: a loop ``a`` at v1 and a framing arrow ``b: v2 -> v1``."""
    return parse_quiver(JORDAN_TEXT)
