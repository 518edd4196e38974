"""Topological predicates driven by excluded minors.

Outerplanarity and planarity are decided by a proper planarity algorithm
(a graph is outerplanar iff adding an apex joined to everything keeps it
planar); the minor oracle is only consulted when an explicit excluded-minor
witness is requested.  Intrinsic linking and knotting are reported as
one-sided certificates: a complete minor of order 6 (resp. 7) proves the
property, its absence proves nothing, and the result type keeps that
distinction explicit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .graphs import Graph, ConsistencyError, induced_subgraph, join
from .antimorphism import find_antimorphism
from .construction import (
    MinorModel,
    build_plan,
    realize_minor,
    verify_minor_model,
)
from .generators import complete_graph, complete_bipartite
from .oracle import (
    BUDGET_EXCEEDED,
    DEFAULT_BUDGET,
    YES,
    MinorQuery,
    has_minor,
)

CERTIFICATE = "certificate"
NONE_FOUND = "none_found"
INDETERMINATE = "indeterminate"

ORACLE_HOST_CAP = 13
APEX_CAP = 3


@dataclass(frozen=True)
class CertificateSearch:
    """Outcome of hunting one sufficient excluded-minor certificate.

    ``certificate`` carries a verified model of ``target``; ``none_found``
    means the search was exhaustive and is NOT a disproof of the topological
    property; ``indeterminate`` flags a budget or size limit.
    """

    status: str
    target: str | None = None
    model: MinorModel | None = None
    expansions: int = 0


def _to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def is_planar(g: Graph) -> bool:
    ok, _ = nx.check_planarity(_to_networkx(g), counterexample=False)
    return ok


def is_outerplanar(g: Graph) -> bool:
    """True iff g embeds with all vertices on the outer face.

    Equivalent to planarity of g with one extra vertex joined to all of g.
    """
    return is_planar(join(g, Graph(1)))


def _excluded_minor_witness(
    g: Graph, targets: list[tuple[str, Graph]], budget: int
) -> CertificateSearch:
    spent = 0
    for name, target in targets:
        outcome = has_minor(MinorQuery(g, target, budget))
        spent += outcome.expansions
        if outcome.answer == YES:
            return CertificateSearch(CERTIFICATE, name, outcome.model, spent)
        if outcome.answer == BUDGET_EXCEEDED:
            return CertificateSearch(INDETERMINATE, name, None, spent)
    return CertificateSearch(NONE_FOUND, None, None, spent)


def nonplanarity_witness(g: Graph, budget: int = DEFAULT_BUDGET) -> CertificateSearch:
    """A verified K5 or K3,3 minor; one exists in every non-planar graph."""
    return _excluded_minor_witness(
        g,
        [("K5", complete_graph(5)), ("K3,3", complete_bipartite(3, 3))],
        budget,
    )


def nonouterplanarity_witness(
    g: Graph, budget: int = DEFAULT_BUDGET
) -> CertificateSearch:
    """A verified K4 or K2,3 minor; one exists in every non-outerplanar graph."""
    return _excluded_minor_witness(
        g,
        [("K4", complete_graph(4)), ("K2,3", complete_bipartite(2, 3))],
        budget,
    )


def _complete_certificate(g: Graph, order: int, budget: int) -> CertificateSearch:
    """Verified complete minor of the given order, constructively when possible.

    Self-complementary hosts large enough that the guaranteed minor already
    reaches ``order`` skip the oracle: the certificate is the first ``order``
    branch sets of the constructed model.
    """
    rho = find_antimorphism(g)
    if rho is not None and (g.n + 1) // 2 >= order:
        model = realize_minor(g, build_plan(g, rho))
        trimmed = MinorModel(model.branch_sets[:order])
        check = verify_minor_model(g, trimmed, complete_graph(order))
        if not check.ok:
            raise ConsistencyError(
                f"trimmed constructive certificate failed: {check.reason}"
            )
        return CertificateSearch(CERTIFICATE, f"K{order}", trimmed, 0)
    if g.n > ORACLE_HOST_CAP:
        return CertificateSearch(INDETERMINATE, f"K{order}", None, 0)
    outcome = has_minor(MinorQuery(g, complete_graph(order), budget))
    if outcome.answer == YES:
        return CertificateSearch(
            CERTIFICATE, f"K{order}", outcome.model, outcome.expansions
        )
    if outcome.answer == BUDGET_EXCEEDED:
        return CertificateSearch(INDETERMINATE, f"K{order}", None, outcome.expansions)
    return CertificateSearch(NONE_FOUND, f"K{order}", None, outcome.expansions)


def il_certificate(g: Graph, budget: int = DEFAULT_BUDGET) -> CertificateSearch:
    """Sufficient certificate that g is intrinsically linked: a K6 minor."""
    return _complete_certificate(g, 6, budget)


def ik_certificate(g: Graph, budget: int = DEFAULT_BUDGET) -> CertificateSearch:
    """Sufficient certificate that g is intrinsically knotted: a K7 minor."""
    return _complete_certificate(g, 7, budget)


def is_n_apex(g: Graph, j: int) -> tuple[bool, frozenset[int] | None]:
    """Can deleting at most j vertices make g planar?

    Returns the first (smallest, then lexicographically least) working
    deletion set as a witness.  j = 0 is exactly a planarity test.
    """
    if j < 0:
        raise ValueError(f"apex parameter must be >= 0, got {j}")
    if j > APEX_CAP:
        raise ValueError(f"apex search is capped at j <= {APEX_CAP}, got {j}")
    for size in range(min(j, g.n) + 1):
        for combo in itertools.combinations(range(g.n), size):
            keep = [v for v in range(g.n) if v not in combo]
            sub, _ = induced_subgraph(g, keep)
            if is_planar(sub):
                return True, frozenset(combo)
    return False, None


@dataclass(frozen=True)
class TopologyReport:
    outerplanar: bool
    planar: bool
    il_certificate: CertificateSearch
    ik_certificate: CertificateSearch
    apex_numbers: dict[int, bool]

    def to_json_dict(self) -> dict:
        def cert(c: CertificateSearch) -> dict:
            return {
                "status": c.status,
                "target": c.target,
                "model": None
                if c.model is None
                else {
                    "k": c.model.k,
                    "branch_sets": [sorted(s) for s in c.model.branch_sets],
                },
            }

        return {
            "outerplanar": self.outerplanar,
            "planar": self.planar,
            "il_certificate": cert(self.il_certificate),
            "ik_certificate": cert(self.ik_certificate),
            "apex_numbers": {str(j): v for j, v in sorted(self.apex_numbers.items())},
        }


def report(
    g: Graph,
    apex_range: tuple[int, ...] = (0, 1, 2),
    budget: int = DEFAULT_BUDGET,
) -> TopologyReport:
    """Aggregate the topology predicates and re-check their consistency."""
    outer = is_outerplanar(g)
    planar = is_planar(g)
    if outer and not planar:
        raise ConsistencyError("outerplanar graph reported non-planar")
    il = il_certificate(g, budget)
    ik = ik_certificate(g, budget)
    if ik.status == CERTIFICATE and il.status == NONE_FOUND:
        raise ConsistencyError("complete minor of order 7 without one of order 6")
    apex = {j: is_n_apex(g, j)[0] for j in apex_range}
    for j, val in apex.items():
        if j == 0 and val != planar:
            raise ConsistencyError("0-apex answer disagrees with planarity")
    return TopologyReport(outer, planar, il, ik, apex)
