"""Exact minor containment and Hadwiger numbers by branch and bound.

This is the independent ground truth the constructive certificates are
checked against, so it favours simplicity over cleverness: branch sets are
assembled as connected vertex subsets, with complete targets getting a
specialised anchored search (every candidate branch set must contain the
least still-available vertex, or that vertex is discarded), which visits
each branch-set family exactly once.  All work is metered against an
explicit expansion budget; running out is reported as its own outcome and
is never silently converted to "no".
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, ConsistencyError, iter_bits
from .construction import MinorModel, verify_minor_model
from .generators import complete_graph

DEFAULT_BUDGET = 10**8

YES = "yes"
NO = "no"
BUDGET_EXCEEDED = "budget_exceeded"


class _OutOfBudget(Exception):
    pass


class _Budget:
    __slots__ = ("remaining", "spent")

    def __init__(self, limit: int):
        self.remaining = limit
        self.spent = 0

    def spend(self) -> None:
        self.spent += 1
        self.remaining -= 1
        if self.remaining < 0:
            raise _OutOfBudget


@dataclass(frozen=True)
class MinorQuery:
    host: Graph
    target: Graph
    budget: int = DEFAULT_BUDGET


@dataclass(frozen=True)
class MinorOutcome:
    answer: str  # YES, NO, or BUDGET_EXCEEDED
    model: MinorModel | None
    expansions: int

    def to_json_dict(self) -> dict:
        witness = None
        if self.model is not None:
            witness = {
                "k": self.model.k,
                "branch_sets": [sorted(s) for s in self.model.branch_sets],
            }
        return {
            "answer": self.answer,
            "witness": witness,
            "expansions": self.expansions,
        }


@dataclass(frozen=True)
class HadwigerOutcome:
    """Largest verified complete-minor order, with exactness bookkeeping.

    ``value`` is always a proven lower bound with ``witness`` as evidence;
    when ``exact`` the next order up was exhaustively refuted and
    ``upper_bound == value``, otherwise the budget ran out and
    ``upper_bound`` falls back to the vertex count.
    """

    value: int
    witness: MinorModel | None
    exact: bool
    upper_bound: int
    expansions: int


def _cross_edge(adj: tuple[int, ...], a: int, b: int) -> bool:
    for v in iter_bits(a):
        if adj[v] & b:
            return True
    return False


def _connected_sets(adj, anchor: int, region: int, max_size: int, budget: _Budget):
    """All connected subsets of ``region`` containing ``anchor``, each once."""

    def grow(current: int, size: int, cand: int, banned: int):
        budget.spend()
        yield current
        if size >= max_size:
            return
        todo = cand & ~banned
        while todo:
            low = todo & -todo
            todo ^= low
            u = low.bit_length() - 1
            bigger = current | low
            newcand = (cand | (adj[u] & region)) & ~bigger & ~banned
            yield from grow(bigger, size + 1, newcand, banned)
            banned |= low

    start = 1 << anchor
    if max_size < 1 or not region & start:
        return
    yield from grow(start, 1, adj[anchor] & region & ~start, 0)


def _clique_subgraph(g: Graph, k: int, budget: _Budget) -> int | None:
    """Lexicographically least k-clique of g as a mask, or None."""
    adj = g._adj

    def extend(chosen: int, count: int, allowed: int) -> int | None:
        budget.spend()
        if count == k:
            return chosen
        if count + allowed.bit_count() < k:
            return None
        todo = allowed
        while todo:
            low = todo & -todo
            todo ^= low
            v = low.bit_length() - 1
            found = extend(chosen | low, count + 1, todo & adj[v])
            if found is not None:
                return found
        return None

    return extend(0, 0, (1 << g.n) - 1)


def _clique_minor_sets(g: Graph, k: int, budget: _Budget) -> tuple[int, ...] | None:
    """Branch-set masks for a complete minor of order k, or None."""
    if k == 0:
        return ()
    if k > g.n:
        return None
    clique = _clique_subgraph(g, k, budget)
    if clique is not None:
        return tuple(1 << v for v in iter_bits(clique))
    adj = g._adj

    def place(done: tuple[int, ...], avail: int):
        budget.spend()
        need = k - len(done)
        if need == 0:
            return done
        if avail.bit_count() < need:
            return None
        anchor = (avail & -avail).bit_length() - 1
        limit = avail.bit_count() - (need - 1)
        for cand in _connected_sets(adj, anchor, avail, limit, budget):
            if all(_cross_edge(adj, cand, seen) for seen in done):
                found = place(done + (cand,), avail & ~cand)
                if found is not None:
                    return found
        return place(done, avail & ~(1 << anchor))

    return place((), (1 << g.n) - 1)


def _general_minor_sets(
    host: Graph, target: Graph, budget: _Budget
) -> tuple[int, ...] | None:
    """Branch-set masks indexed by target vertex, for an arbitrary target."""
    order = sorted(range(target.n), key=lambda i: (-target.degree(i), i))
    adj = host._adj
    assigned: dict[int, int] = {}

    def place(pos: int, avail: int) -> bool:
        budget.spend()
        if pos == target.n:
            return True
        tv = order[pos]
        required = [
            assigned[prev] for prev in order[:pos] if target.has_edge(tv, prev)
        ]
        remaining = target.n - pos - 1
        limit = avail.bit_count() - remaining
        anchors = avail
        while anchors:
            low = anchors & -anchors
            anchors ^= low
            v = low.bit_length() - 1
            region = avail & ~(low - 1)
            for cand in _connected_sets(adj, v, region, limit, budget):
                if all(_cross_edge(adj, cand, req) for req in required):
                    assigned[tv] = cand
                    if place(pos + 1, avail & ~cand):
                        return True
                    del assigned[tv]
        return False

    if place(0, (1 << host.n) - 1):
        return tuple(assigned[i] for i in range(target.n))
    return None


def _is_complete(g: Graph) -> bool:
    return g.num_edges == g.n * (g.n - 1) // 2


def _checked(host: Graph, target: Graph, sets: tuple[int, ...]) -> MinorModel:
    model = MinorModel(tuple(frozenset(iter_bits(m)) for m in sets))
    check = verify_minor_model(host, model, target)
    if not check.ok:
        raise ConsistencyError(f"oracle produced an invalid witness: {check.reason}")
    return model


def has_minor(query: MinorQuery) -> MinorOutcome:
    """Decide whether ``query.target`` is a minor of ``query.host``.

    Every yes comes with a branch-set witness that has been re-verified
    against the minor definition; no means the search space was exhausted.
    """
    host, target = query.host, query.target
    if query.budget <= 0:
        raise ValueError(f"budget must be positive, got {query.budget}")
    if target.n > host.n or target.num_edges > host.num_edges:
        return MinorOutcome(NO, None, 0)
    budget = _Budget(query.budget)
    try:
        if _is_complete(target):
            sets = _clique_minor_sets(host, target.n, budget)
        else:
            sets = _general_minor_sets(host, target, budget)
    except _OutOfBudget:
        return MinorOutcome(BUDGET_EXCEEDED, None, budget.spent)
    if sets is None:
        return MinorOutcome(NO, None, budget.spent)
    return MinorOutcome(YES, _checked(host, target, sets), budget.spent)


def hadwiger(g: Graph, budget: int = DEFAULT_BUDGET) -> HadwigerOutcome:
    """Order of the largest complete minor, with a verified witness."""
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")
    meter = _Budget(budget)
    value = 0
    witness: MinorModel | None = None
    try:
        for k in range(1, g.n + 1):
            sets = _clique_minor_sets(g, k, meter)
            if sets is None:
                return HadwigerOutcome(value, witness, True, value, meter.spent)
            witness = _checked(g, complete_graph(k), sets)
            value = k
        return HadwigerOutcome(value, witness, True, value, meter.spent)
    except _OutOfBudget:
        return HadwigerOutcome(value, witness, False, g.n, meter.spent)
