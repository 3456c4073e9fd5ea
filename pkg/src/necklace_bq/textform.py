"""Best-effort rendering of any ``LinComb`` for diagnostics and reports."""

from __future__ import annotations

from .heightlink import Link, link_str
from .necklace import Necklace, necklace_str
from .quiver import Quiver
from .scalars import LinComb, format_lincomb


def key_str(q: Quiver, k) -> str:
    if isinstance(k, Necklace):
        return necklace_str(q, k)
    if isinstance(k, Link):
        return link_str(q, k)
    if isinstance(k, tuple):
        if not k:
            return "1"
        if all(isinstance(p, Link) for p in k):
            return " | ".join(link_str(q, p) for p in k)
        if all(isinstance(p, Necklace) for p in k):
            return " ⊗ ".join(necklace_str(q, p) for p in k)
        return " ⊗ ".join(f"({key_str(q, p)})" if isinstance(p, tuple) and len(p) > 1 else key_str(q, p)
                          for p in k)
    return str(k)


def format_any(q: Quiver, x: LinComb) -> str:
    try:
        return format_lincomb(x, lambda k: key_str(q, k))
    except TypeError:
        return format_lincomb(x, lambda k: key_str(q, k), sort_key=repr)
