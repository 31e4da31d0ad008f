"""Structure of connected unicyclic graphs.

A connected graph with exactly one cycle decomposes into that cycle plus
pendant trees: removing a cycle vertex x's neighbour set splits off, for each
off-cycle neighbour r of the cycle, the tree T_r hanging below r. For such
graphs alpha + mu is either n or n - 1, and the n - 1 case (not
Koenig-Egervary) is exactly the case where every cycle edge is alpha-critical.
In that case core, corona and ker are unions of the corresponding sets of the
pendant trees (plus the cycle itself for corona), which the structural_*
functions compute without ever enumerating maximum independent sets of the
whole graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budgets import DEFAULT_BUDGETS, Budgets
from .critical import ker
from .errors import NotUnicyclicError, PreconditionError
from .graph import Graph, VertexSet, classify_shape
from .independence import (
    _alpha_active,
    _strip_to_cycles,
    core,
    corona,
    is_alpha_critical_edge,
)
from .matching import mu

__all__ = [
    "find_cycle",
    "PendantTree",
    "Decomposition",
    "decompose",
    "KeClassification",
    "classify_ke_unicyclic",
    "structural_core",
    "structural_corona",
    "structural_ker",
]


def _require_unicyclic(g: Graph) -> None:
    shape = classify_shape(g)
    if not (shape.connected and shape.kind == "unicyclic"):
        raise NotUnicyclicError(
            f"expected a connected graph with exactly one cycle, "
            f"got n={g.n}, m={g.m}, connected={shape.connected}"
        )


def find_cycle(g: Graph) -> tuple[str, ...]:
    """The unique cycle, in canonical order: starting at its smallest label
    and moving toward the smaller of that vertex's two cycle neighbours."""
    _require_unicyclic(g)
    cyc = _strip_to_cycles(g.adj, (1 << g.n) - 1)
    members = sorted(VertexSet(g, cyc).labels())
    start = g.index_of(members[0])
    first = min(
        (i for i in range(g.n) if cyc >> i & 1 and g.adj[start] >> i & 1),
        key=lambda i: g.labels[i],
    )
    order = [start, first]
    while True:
        prev, cur = order[-2], order[-1]
        nb = g.adj[cur] & cyc & ~(1 << prev)
        nxt = (nb & -nb).bit_length() - 1
        if nxt == start:
            break
        order.append(nxt)
    return tuple(g.labels[i] for i in order)


@dataclass(frozen=True)
class PendantTree:
    """One tree hanging off the cycle.

    root is the tree vertex adjacent to the cycle, anchor the cycle vertex it
    attaches to. vertices lives in the host graph; tree is the induced
    subgraph on them (labels preserved).
    """

    root: str
    anchor: str
    vertices: VertexSet
    tree: Graph


@dataclass(frozen=True)
class Decomposition:
    graph: Graph
    cycle: tuple[str, ...]
    cycle_set: VertexSet
    pendant_trees: tuple[PendantTree, ...]

    def outer_roots(self) -> VertexSet:
        """The off-cycle vertices adjacent to the cycle."""
        mask = 0
        for pt in self.pendant_trees:
            mask |= 1 << self.graph.index_of(pt.root)
        return VertexSet(self.graph, mask)


def decompose(g: Graph) -> Decomposition:
    cycle = find_cycle(g)
    cycle_set = g.set_of(cycle)
    roots = g.neighborhood(cycle_set) - cycle_set
    trees = []
    for r in sorted(roots.labels()):
        ri = g.index_of(r)
        anchor_mask = g.adj[ri] & cycle_set.mask
        # a second cycle neighbour would close a second cycle
        anchor = g.labels[(anchor_mask & -anchor_mask).bit_length() - 1]
        body = g.delete_vertices(g.vertex(anchor))
        for comp in body.components():
            if comp >> body.index_of(r) & 1:
                labels = VertexSet(body, comp).labels()
                break
        vertices = g.set_of(labels)
        trees.append(
            PendantTree(
                root=r,
                anchor=anchor,
                vertices=vertices,
                tree=g.induced_subgraph(vertices),
            )
        )
    return Decomposition(
        graph=g, cycle=cycle, cycle_set=cycle_set, pendant_trees=tuple(trees)
    )


@dataclass(frozen=True)
class KeClassification:
    koenig_egervary: bool
    alpha_plus_mu: int
    all_cycle_edges_alpha_critical: bool
    non_critical_cycle_edges: tuple[tuple[str, str], ...]


def classify_ke_unicyclic(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> KeClassification:
    """alpha + mu for a connected unicyclic graph, together with the edge
    criterion: the sum is n - 1 exactly when every cycle edge is
    alpha-critical, and any non-critical cycle edge is reported as a witness."""
    _require_unicyclic(g)
    total = _alpha_active(g.adj, (1 << g.n) - 1, budgets) + mu(g, budgets)
    cycle = find_cycle(g)
    bad = []
    for k in range(len(cycle)):
        u, v = cycle[k], cycle[(k + 1) % len(cycle)]
        if not is_alpha_critical_edge(g, u, v, budgets):
            bad.append((u, v) if u <= v else (v, u))
    bad.sort()
    return KeClassification(
        koenig_egervary=total == g.n,
        alpha_plus_mu=total,
        all_cycle_edges_alpha_critical=not bad,
        non_critical_cycle_edges=tuple(bad),
    )


def _require_non_ke(g: Graph, budgets: Budgets) -> Decomposition:
    _require_unicyclic(g)
    if _alpha_active(g.adj, (1 << g.n) - 1, budgets) + mu(g, budgets) == g.n:
        raise PreconditionError(
            "structural core/corona/ker need alpha + mu = n - 1; "
            "this graph is Koenig-Egervary"
        )
    return decompose(g)


def _pull(g: Graph, sub: VertexSet) -> int:
    """Mask, in g, of a vertex set living in an induced subgraph of g."""
    mask = 0
    for lab in sub.labels():
        mask |= 1 << g.index_of(lab)
    return mask


def structural_core(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> VertexSet:
    """core(G) assembled as the union of the pendant-tree cores."""
    dec = _require_non_ke(g, budgets)
    mask = 0
    for pt in dec.pendant_trees:
        mask |= _pull(g, core(pt.tree, budgets))
    return VertexSet(g, mask)


def structural_corona(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> VertexSet:
    """corona(G) assembled as the cycle plus the pendant-tree coronas."""
    dec = _require_non_ke(g, budgets)
    mask = dec.cycle_set.mask
    for pt in dec.pendant_trees:
        mask |= _pull(g, corona(pt.tree, budgets))
    return VertexSet(g, mask)


def structural_ker(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> VertexSet:
    """ker(G) assembled as the union of the pendant-tree kernels (each
    pendant tree is bipartite, so its kernel is its core)."""
    dec = _require_non_ke(g, budgets)
    mask = 0
    for pt in dec.pendant_trees:
        mask |= _pull(g, ker(pt.tree, budgets))
    return VertexSet(g, mask)
