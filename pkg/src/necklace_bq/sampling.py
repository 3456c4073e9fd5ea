"""Seeded random quivers, necklaces and links for the property suites."""

from __future__ import annotations

import random
from typing import List, Optional

from .heightlink import Link, make_link
from .necklace import Necklace, canonical, vertex_necklace
from .quiver import Edge, Quiver

VERTEX_NAMES = ["v1", "v2", "v3"]
ARROW_NAMES = ["a", "b", "c", "d"]


def random_quiver(rng: random.Random, max_vertices: int = 3, max_arrows: int = 4) -> Quiver:
    nv = rng.randint(1, max_vertices)
    na = rng.randint(1, max_arrows)
    vs = VERTEX_NAMES[:nv]
    arrows = [(ARROW_NAMES[i], rng.choice(vs), rng.choice(vs)) for i in range(na)]
    return Quiver(vs, arrows)


def random_cycle(rng: random.Random, q: Quiver, length: int, tries: int = 200) -> Optional[List[Edge]]:
    """A uniformly stepped closed walk of exactly ``length`` edges, or None."""
    edges = q.double_edges()
    out_of = {v: [e for e in edges if e.src == v] for v in range(len(q.vertices))}
    for _ in range(tries):
        start = rng.randrange(len(q.vertices))
        v, walk = start, []
        for _ in range(length):
            if not out_of[v]:
                break
            e = rng.choice(out_of[v])
            walk.append(e)
            v = e.tgt
        if len(walk) == length and v == start:
            return walk
    return None


def random_walk_cycle(rng: random.Random, q: Quiver, max_len: int) -> List[Edge]:
    """A closed walk of random length in 1..max_len (falls back to shorter ones)."""
    for length in sorted(range(1, max_len + 1), key=lambda _: rng.random()):
        w = random_cycle(rng, q, length)
        if w:
            return w
    e = rng.choice(q.double_edges())
    return [e, Edge(e.arrow, not e.starred, e.tgt, e.src)]


def random_necklace(rng: random.Random, q: Quiver, max_len: int = 6, vertex_prob: float = 0.0) -> Necklace:
    if vertex_prob and rng.random() < vertex_prob:
        return vertex_necklace(rng.randrange(len(q.vertices)))
    return canonical(random_walk_cycle(rng, q, max_len))


def random_link(rng: random.Random, q: Quiver, max_edges: int = 8, max_knots: int = 3,
                max_vertices: int = 1) -> Link:
    """Random link with at most ``max_edges`` edges and random distinct heights."""
    budget = rng.randint(1, max(1, max_edges))
    knots = []
    for _ in range(rng.randint(1, max_knots)):
        if budget <= 0:
            break
        w = random_walk_cycle(rng, q, budget)
        if len(w) > budget:
            break
        knots.append(w)
        budget -= len(w)
    n = sum(len(k) for k in knots)
    heights = list(range(1, n + 1))
    rng.shuffle(heights)
    it = iter(heights)
    hk = [[(e, next(it)) for e in k] for k in knots]
    verts = [rng.randrange(len(q.vertices)) for _ in range(rng.randint(0, max_vertices))]
    return make_link(hk, verts)


def random_knot(rng: random.Random, q: Quiver, max_edges: int = 8) -> Link:
    return random_link(rng, q, max_edges, max_knots=1, max_vertices=0)
