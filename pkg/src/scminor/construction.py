"""Contraction plans that turn an antimorphism into a clique-minor certificate.

Every self-complementary graph on n vertices contains a complete minor of
order floor((n+1)/2).  The witness is assembled cycle by cycle: along each
antimorphism cycle, pick a generator a with {a, rho(a)} an edge, then contract
the edges {rho^(2i)(a), rho^(2i+1)(a)}.  Even powers of an antimorphism are
automorphisms, so all of these pairs really are edges; pairs inside a cycle,
pairs across cycles, and the fixed point (when n = 4k + 1) are mutually joined
because whenever a pair image misses an edge, applying the antimorphism once
produces one.  ``realize_minor`` re-verifies all of this explicitly, so the
returned model is a machine-checked certificate rather than a trusted proof.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from collections.abc import Sequence

from .graphs import Graph, ConsistencyError, mask_is_connected
from .generators import complete_graph
from .antimorphism import (
    Permutation,
    check_sachs,
    cycle_decomposition,
    find_antimorphism,
    is_antimorphism,
)


class InvalidShiftError(ValueError):
    """The requested odd shift does not hit a neighbour of the generator."""

    def __init__(self, shift: int, valid_shifts: tuple[int, ...]):
        super().__init__(
            f"shift {shift} is invalid; valid odd shifts are {list(valid_shifts)}"
        )
        self.shift = shift
        self.valid_shifts = valid_shifts


@dataclass(frozen=True)
class CycleContraction:
    """One cycle's slice of a contraction plan: 2m disjoint edges covering it."""

    cycle: tuple[int, ...]
    generator: int
    shift: int
    matching: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ContractionPlan:
    per_cycle: tuple[CycleContraction, ...]
    fixed_vertex: int | None

    def matching_edges(self) -> list[tuple[int, int]]:
        out: list[tuple[int, int]] = []
        for part in self.per_cycle:
            out.extend(part.matching)
        return out


@dataclass(frozen=True)
class MinorModel:
    """Disjoint connected branch sets witnessing a minor in some host graph."""

    branch_sets: tuple[frozenset[int], ...]

    @property
    def k(self) -> int:
        return len(self.branch_sets)

    def to_json(self) -> str:
        return json.dumps(
            {"k": self.k, "branch_sets": [sorted(s) for s in self.branch_sets]}
        )


@dataclass(frozen=True)
class ModelCheck:
    ok: bool
    reason: str | None = None
    pair: tuple[int, int] | None = None


def verify_minor_model(g: Graph, model: MinorModel, target: Graph) -> ModelCheck:
    """Check a branch-set family directly against the minor definition.

    Passes iff the sets are nonempty, disjoint, each connected in the host,
    one per target vertex, and every target edge has a host edge between the
    corresponding sets.  Reports the first violated target pair.
    """
    sets = model.branch_sets
    if len(sets) != target.n:
        return ModelCheck(
            False, f"{len(sets)} branch sets for a {target.n}-vertex target"
        )
    masks = []
    seen = 0
    for i, s in enumerate(sets):
        if not s:
            return ModelCheck(False, f"branch set {i} is empty")
        mask = 0
        for v in s:
            if not (0 <= v < g.n):
                return ModelCheck(False, f"branch set {i} leaves the host range")
            mask |= 1 << v
        if mask & seen:
            return ModelCheck(False, f"branch set {i} overlaps an earlier one")
        seen |= mask
        if not mask_is_connected(g, mask):
            return ModelCheck(False, f"branch set {i} is not connected")
        masks.append(mask)
    for i, j in target.edges():
        if not any(g.neighbor_mask(v) & masks[j] for v in sets[i]):
            return ModelCheck(False, "no host edge between branch sets", (i, j))
    return ModelCheck(True)


def choose_generator(g: Graph, rho: Permutation, cycle: Sequence[int]) -> int:
    """Least vertex a on the cycle with {a, rho(a)} an edge.

    An antimorphism reverses incidence, so every vertex neighbours exactly one
    of its two cycle neighbours; in particular such an a always exists, and a
    miss means the permutation was not a valid antimorphism.
    """
    cyc = _closed_cycle(rho, cycle)
    for a in sorted(cyc):
        if g.has_edge(a, rho(a)):
            return a
    raise ConsistencyError(
        f"no vertex of cycle {cyc!r} neighbours its image; "
        "the permutation cannot be an antimorphism"
    )


def _closed_cycle(rho: Permutation, cycle: Sequence[int]) -> tuple[int, ...]:
    cyc = tuple(cycle)
    if not cyc:
        raise ValueError("empty cycle")
    for i, v in enumerate(cyc):
        if rho(v) != cyc[(i + 1) % len(cyc)]:
            raise ValueError(f"{cyc!r} is not closed under the permutation")
    return cyc


def cycle_matching(
    g: Graph, rho: Permutation, cycle: Sequence[int]
) -> tuple[tuple[int, int], ...]:
    """The 2m contraction edges {rho^(2i)(a), rho^(2i+1)(a)} of a 4m-cycle."""
    cyc = _closed_cycle(rho, cycle)
    if len(cyc) % 4 != 0:
        raise ValueError(f"cycle length {len(cyc)} is not divisible by 4")
    a = choose_generator(g, rho, cyc)
    seq = rho.orbit(a)
    pairs = tuple((seq[2 * i], seq[2 * i + 1]) for i in range(len(seq) // 2))
    for u, v in pairs:
        if not g.has_edge(u, v):
            raise ConsistencyError(
                f"claimed matching edge ({u}, {v}) is absent; even powers of an "
                "antimorphism must preserve edges"
            )
    return pairs


def odd_shift_matching(
    g: Graph, rho: Permutation, shift: int
) -> tuple[tuple[int, int], ...]:
    """Perfect matching {rho^(2i)(a), rho^(2i+shift)(a)} for a single-cycle rho.

    Only defined when rho is one cycle through every vertex.  Any odd shift t
    with {a, rho^t(a)} an edge works, and there are exactly n/4 such shifts;
    shift 1 reproduces :func:`cycle_matching`.
    """
    n = g.n
    dec = cycle_decomposition(rho)
    if dec.fixed_points or len(dec.cycles) != 1 or rho.n != n:
        raise ValueError("permutation must be a single cycle over all vertices")
    if n % 4 != 0:
        raise ValueError(f"host must have n = 4k vertices, got {n}")
    if shift % 2 == 0 or not 1 <= shift <= n - 1:
        raise ValueError(f"shift must be odd and in 1..{n - 1}, got {shift}")
    a = choose_generator(g, rho, dec.cycles[0])
    seq = rho.orbit(a)
    if not g.has_edge(a, seq[shift]):
        valid = tuple(
            t for t in range(1, n, 2) if g.has_edge(a, seq[t])
        )
        raise InvalidShiftError(shift, valid)
    pairs = tuple(
        (seq[2 * i], seq[(2 * i + shift) % n]) for i in range(n // 2)
    )
    for u, v in pairs:
        if not g.has_edge(u, v):
            raise ConsistencyError(
                f"claimed matching edge ({u}, {v}) is absent for shift {shift}"
            )
    return pairs


def build_plan(g: Graph, rho: Permutation) -> ContractionPlan:
    """One shift-1 matching per cycle, plus the fixed vertex when n = 4k + 1."""
    if not is_antimorphism(g, rho):
        raise ValueError("permutation is not an antimorphism of the graph")
    dec = cycle_decomposition(rho)
    sachs = check_sachs(dec, g.n)
    if not sachs.ok:
        raise ValueError(f"antimorphism fails its structure check: {sachs.reason}")
    parts = []
    for cyc in dec.cycles:
        matching = cycle_matching(g, rho, cyc)
        parts.append(
            CycleContraction(cyc, choose_generator(g, rho, cyc), 1, matching)
        )
    fixed = dec.fixed_points[0] if dec.fixed_points else None
    return ContractionPlan(tuple(parts), fixed)


def realize_minor(g: Graph, plan: ContractionPlan) -> MinorModel:
    """Contract the plan's matchings into branch sets and verify the clique.

    The result always has floor((n+1)/2) branch sets: one per matching edge
    plus the fixed vertex alone.  Verification failure would falsify the
    construction itself, so it raises instead of returning a bad model.
    """
    sets: list[frozenset[int]] = []
    for part in plan.per_cycle:
        sets.extend(frozenset(pair) for pair in part.matching)
    if plan.fixed_vertex is not None:
        sets.append(frozenset((plan.fixed_vertex,)))
    model = MinorModel(tuple(sets))
    expected = (g.n + 1) // 2
    if model.k != expected:
        raise ConsistencyError(
            f"plan yields {model.k} branch sets, expected {expected}"
        )
    check = verify_minor_model(g, model, complete_graph(model.k))
    if not check.ok:
        raise ConsistencyError(
            f"constructed model failed verification: {check.reason} {check.pair}"
        )
    return model


def guaranteed_minor(g: Graph) -> MinorModel | None:
    """Verified complete-minor certificate of order floor((n+1)/2), or None.

    None exactly when the graph is not self-complementary.
    """
    rho = find_antimorphism(g)
    if rho is None:
        return None
    return realize_minor(g, build_plan(g, rho))
