"""Graphviz DOT text for quivers and links."""

from __future__ import annotations

from .heightlink import Link
from .quiver import Quiver


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def quiver_dot(q: Quiver) -> str:
    """The double quiver: one node per vertex, one edge per arrow and per starred arrow."""
    lines = ["digraph quiver {"]
    for v in q.vertices:
        lines.append(f"  {_q(v)};")
    for e in q.double_edges():
        lines.append(f"  {_q(q.vertex_name(e.src))} -> {_q(q.vertex_name(e.tgt))} [label={_q(q.edge_name(e))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def link_dot(q: Quiver, x: Link) -> str:
    """Each knot becomes its own cycle of vertex nodes, edges labelled ``name@height``."""
    lines = ["digraph link {"]
    for i, k in enumerate(x.knots):
        n = len(k)
        for j, (e, _) in enumerate(k):
            lines.append(f"  {_q(f'k{i}_{j}')} [label={_q(q.vertex_name(e.src))}];")
        for j, (e, h) in enumerate(k):
            lines.append(f"  {_q(f'k{i}_{j}')} -> {_q(f'k{i}_{(j + 1) % n}')} [label={_q(f'{q.edge_name(e)}@{h}')}];")
    for i, v in enumerate(x.vertices):
        lines.append(f"  {_q(f'v{i}')} [label={_q(q.vertex_name(v))}, shape=box];")
    lines.append("}")
    return "\n".join(lines) + "\n"
