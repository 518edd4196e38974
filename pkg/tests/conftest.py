"""Shared fixtures and independent test-side oracles.

The checkers here deliberately avoid the library's own search machinery:
isomorphism is a fresh backtracking search, and the reference Hadwiger
number enumerates every partition of every vertex subset with no pruning,
so agreement with the library is meaningful evidence.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations

from scminor import Graph, canonical_form, enumerate_sc, random_sc


@lru_cache(maxsize=None)
def sc_classes(n: int) -> tuple[Graph, ...]:
    return tuple(enumerate_sc(n))


@lru_cache(maxsize=None)
def random_sc_batch(n: int, count: int) -> tuple[Graph, ...]:
    return tuple(random_sc(n, seed) for seed in range(count))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


def all_labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1])


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Plain backtracking isomorphism search, independent of canonical_form."""
    n = g.n
    if n != h.n or g.num_edges != h.num_edges:
        return False
    dg = [g.degree(v) for v in range(n)]
    dh = [h.degree(v) for v in range(n)]
    if sorted(dg) != sorted(dh):
        return False
    image = [-1] * n
    used = [False] * n

    def assign(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or dh[w] != dg[v]:
                continue
            if any(g.has_edge(u, v) != h.has_edge(image[u], w) for u in range(v)):
                continue
            image[v] = w
            used[w] = True
            if assign(v + 1):
                return True
            used[w] = False
        return False

    return assign(0)


@lru_cache(maxsize=None)
def iso_classes_up_to(max_n: int) -> dict[int, list[Graph]]:
    """One representative per isomorphism class for every n <= max_n."""
    out: dict[int, list[Graph]] = {}
    for n in range(1, max_n + 1):
        seen: dict[bytes, Graph] = {}
        for g in all_labeled_graphs(n):
            key = canonical_form(g)
            if key not in seen:
                seen[key] = g
        out[n] = list(seen.values())
    return out


def _cross_edge(g: Graph, a: int, b: int) -> bool:
    for v in range(g.n):
        if (a >> v) & 1 and g.neighbor_mask(v) & b:
            return True
    return False


def _mask_connected(g: Graph, mask: int) -> bool:
    reach = mask & -mask
    while True:
        grown = reach
        v = 0
        rest = reach
        while rest:
            if rest & 1:
                grown |= g.neighbor_mask(v) & mask
            rest >>= 1
            v += 1
        if grown == reach:
            return reach == mask
        reach = grown


def reference_hadwiger(g: Graph) -> int:
    """Largest complete minor by exhaustive, unpruned partition enumeration.

    Every set partition of the full vertex set is generated; for each, every
    subfamily of connected parts is tested for pairwise adjacency.  Families
    on vertex subsets are covered because discarded vertices sit in parts
    left out of the subfamily.
    """
    n = g.n
    if n == 0:
        return 0
    best = 1
    parts: list[list[int]] = []

    def score() -> int:
        masks = [sum(1 << x for x in p) for p in parts]
        usable = [m for m in masks if _mask_connected(g, m)]
        top = 0
        for picks in range(1 << len(usable)):
            chosen = [usable[i] for i in range(len(usable)) if (picks >> i) & 1]
            if all(
                _cross_edge(g, a, b) for a, b in combinations(chosen, 2)
            ):
                top = max(top, len(chosen))
        return top

    def descend(v: int) -> None:
        nonlocal best
        if v == n:
            best = max(best, score())
            return
        for p in parts:
            p.append(v)
            descend(v + 1)
            p.pop()
        parts.append([v])
        descend(v + 1)
        parts.pop()

    descend(0)
    return best
