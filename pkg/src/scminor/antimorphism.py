"""Antimorphisms of self-complementary graphs and their cycle structure.

An antimorphism is an isomorphism from a graph onto its complement: a vertex
permutation sending every edge to a non-edge and vice versa.  A graph admits
one iff it is self-complementary, which forces n = 4k or 4k + 1 and pins the
permutation's cycle structure (all nontrivial cycle lengths divisible by 4,
a single fixed point exactly when n = 4k + 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence

from .graphs import Graph, induced_subgraph, iter_bits


class Permutation:
    """Bijection on 0..n-1 stored as its image array."""

    __slots__ = ("image",)

    def __init__(self, image: Sequence[int]):
        img = tuple(image)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"{img!r} is not a bijection on 0..{len(img) - 1}")
        self.image = img

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for v, w in enumerate(self.image):
            inv[w] = v
        return Permutation(inv)

    def orbit(self, v: int) -> tuple[int, ...]:
        """The cycle through ``v``: (v, p(v), p(p(v)), ...)."""
        out = [v]
        w = self.image[v]
        while w != v:
            out.append(w)
            w = self.image[w]
        return tuple(out)

    def cycle_notation(self) -> str:
        """One-line cycle notation with fixed points explicit, e.g. "(0)(1 2 4 3)"."""
        dec = cycle_decomposition(self)
        parts = [(c[0], c) for c in dec.cycles]
        parts += [(f, (f,)) for f in dec.fixed_points]
        parts.sort()
        return "".join("(" + " ".join(str(v) for v in c) + ")" for _, c in parts)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"Permutation({list(self.image)!r})"


@dataclass(frozen=True)
class CycleDecomposition:
    """Nontrivial cycles (min-label first, longest first) plus fixed points."""

    cycles: tuple[tuple[int, ...], ...]
    fixed_points: tuple[int, ...]


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    seen = [False] * p.n
    cycles = []
    fixed = []
    for v in range(p.n):
        if seen[v]:
            continue
        orb = p.orbit(v)
        for u in orb:
            seen[u] = True
        if len(orb) == 1:
            fixed.append(v)
        else:
            cycles.append(orb)
    cycles.sort(key=lambda c: (-len(c), c[0]))
    return CycleDecomposition(tuple(cycles), tuple(fixed))


@dataclass(frozen=True)
class SachsCheck:
    ok: bool
    reason: str


def check_sachs(dec: CycleDecomposition, n: int) -> SachsCheck:
    """Validate the forced cycle structure of an antimorphism on n vertices."""
    if n % 4 not in (0, 1):
        return SachsCheck(False, f"n={n} is not 0 or 1 mod 4")
    for cyc in dec.cycles:
        if len(cyc) % 4 != 0:
            return SachsCheck(
                False, f"cycle length {len(cyc)} not divisible by 4"
            )
    want_fixed = n % 4
    if len(dec.fixed_points) != want_fixed:
        return SachsCheck(
            False,
            f"expected {want_fixed} fixed point(s) for n={n}, "
            f"found {len(dec.fixed_points)}",
        )
    return SachsCheck(True, "ok")


def is_antimorphism(g: Graph, p: Permutation) -> bool:
    """True iff p maps every edge of g to a non-edge and vice versa."""
    if p.n != g.n:
        return False
    adj = g._adj
    img = p.image
    for u in range(g.n):
        au = adj[u]
        iu = img[u]
        ai = adj[iu]
        for v in range(u + 1, g.n):
            if ((au >> v) & 1) == ((ai >> img[v]) & 1):
                return False
    return True


def find_antimorphism(g: Graph) -> Permutation | None:
    """Search for an antimorphism; None iff the graph is not self-complementary.

    Backtracks over image assignments in vertex order with ascending
    candidates, pruning by degree (deg(p(v)) must equal n-1-deg(v)) and by
    pairwise consistency, so the returned image array is the
    lexicographically least one.
    """
    n = g.n
    if n % 4 in (2, 3):
        return None
    if 4 * g.num_edges != n * (n - 1):
        return None
    if n <= 1:
        return Permutation(range(n))
    adj = g._adj
    degrees = [adj[v].bit_count() for v in range(n)]
    cands = [
        [w for w in range(n) if degrees[w] == n - 1 - degrees[v]] for v in range(n)
    ]
    image = [0] * n
    used = [False] * n

    def assign(v: int) -> bool:
        av = adj[v]
        for w in cands[v]:
            if used[w]:
                continue
            aw = adj[w]
            if any(((av >> u) & 1) == ((aw >> image[u]) & 1) for u in range(v)):
                continue
            image[v] = w
            if v + 1 == n:
                return True
            used[w] = True
            if assign(v + 1):
                return True
            used[w] = False
        return False

    return Permutation(image) if assign(0) else None


@dataclass(frozen=True)
class SidePartition:
    """Degree split of a self-complementary graph on n = 4k vertices.

    ``high`` holds the 2k vertices of degree >= 2k, ``low`` the rest, and
    ``cross`` is the subgraph (on all n vertices) keeping exactly the edges
    with one endpoint on each side.
    """

    high: frozenset[int]
    low: frozenset[int]
    cross: Graph


def side_partition(g: Graph, rho: Permutation) -> SidePartition:
    """Split by the degree threshold and collect the cross edges.

    The antimorphism swaps the two sides, the two induced halves are
    complements of each other under it, and the cross subgraph has exactly
    2k^2 edges; all three facts are re-checked here.
    """
    n = g.n
    if n % 4 != 0:
        raise ValueError(f"degree split needs n = 4k, got n={n}")
    if not is_antimorphism(g, rho):
        raise ValueError("permutation is not an antimorphism of the graph")
    k = n // 4
    high = frozenset(v for v in range(n) if g.degree(v) >= 2 * k)
    low = frozenset(range(n)) - high
    assert len(high) == len(low) == 2 * k
    assert {rho(v) for v in high} == low
    cross_edges = [
        (u, v) for u, v in g.edges() if (u in high) != (v in high)
    ]
    assert len(cross_edges) == 2 * k * k
    return SidePartition(high, low, Graph(n, cross_edges))


def _validate_cycle(p: Permutation, cycle: Sequence[int]) -> tuple[int, ...]:
    cyc = tuple(cycle)
    if not cyc:
        raise ValueError("empty cycle")
    size = len(cyc)
    for i, v in enumerate(cyc):
        if p(v) != cyc[(i + 1) % size]:
            raise ValueError(f"{cyc!r} is not closed under the permutation")
    return cyc


def cycle_side_counts(
    g: Graph, rho: Permutation, cycle: Sequence[int]
) -> tuple[int, int, tuple[int, ...]]:
    """Side membership and in-cycle cross degrees for one antimorphism cycle.

    A cycle of length 4m contributes 2m vertices to each side, and each of
    its vertices has exactly m neighbours inside the cycle on the opposite
    side.  Returns (count on high side, count on low side, per-vertex cross
    degree in cycle order).  For n = 4k + 1 the fixed point is stripped and
    the split is taken in the remaining induced subgraph.
    """
    cyc = _validate_cycle(rho, cycle)
    if len(cyc) % 4 != 0:
        raise ValueError(f"cycle length {len(cyc)} is not divisible by 4")
    if g.n % 4 == 1:
        dec = cycle_decomposition(rho)
        if len(dec.fixed_points) != 1:
            raise ValueError("expected exactly one fixed point for n = 4k + 1")
        fixed = dec.fixed_points[0]
        keep = [v for v in range(g.n) if v != fixed]
        sub, relabel = induced_subgraph(g, keep)
        sub_rho = Permutation(
            [relabel[rho(old)] for old in keep]
        )
        mapped = [relabel[v] for v in cyc]
        return cycle_side_counts(sub, sub_rho, mapped)
    part = side_partition(g, rho)
    in_high = sum(1 for v in cyc if v in part.high)
    in_low = len(cyc) - in_high
    members = set(cyc)
    per_vertex = tuple(
        sum(
            1
            for u in iter_bits(g.neighbor_mask(v))
            if u in members and (u in part.high) != (v in part.high)
        )
        for v in cyc
    )
    return in_high, in_low, per_vertex
