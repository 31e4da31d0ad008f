"""Critical difference machinery: d(X) = |X| - |N(X)|, its maxima over all
sets (d_c) and over independent sets (id_c), the witness structures, and ker
(the intersection of all critical independent sets).

The subset sweep is the reference implementation and the final authority; it
buys exactness with an exponential bill, so it is capped by subset_n. The
fast path computes d_c as alpha of the bipartite double cover minus n and is
cross-checked against the sweep on every graph small enough to afford both;
one disagreement disables the fast path for the rest of the process.

ker(G) dispatches structurally: for Koenig-Egervary graphs (in particular all
bipartite ones) ker coincides with the intersection of all maximum
independent sets, which is cheaper to get via alpha queries; everything else
falls to the sweep.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budgets import DEFAULT_BUDGETS, Budgets
from .errors import BudgetExceededError, DomainError
from .graph import Graph, VertexSet, classify_shape
from .independence import _alpha_active, core
from .matching import is_koenig_egervary

__all__ = [
    "diff",
    "CriticalReport",
    "critical_difference_bruteforce",
    "bipartite_double_cover",
    "critical_difference_fast",
    "cross_check_fast_path",
    "critical_difference",
    "ker",
]


def diff(g: Graph, xs: VertexSet) -> int:
    """d(X) = |X| - |N(X)|. The empty set gives 0, so d_c >= 0 always."""
    g._own(xs)
    return len(xs) - len(g.neighborhood(xs))


@dataclass(frozen=True)
class CriticalReport:
    """Everything the subset sweep knows about one graph."""

    d_c: int
    id_c: int
    witness_set: VertexSet
    ker: VertexSet
    critical_independent_sets: tuple[VertexSet, ...]


def critical_difference_bruteforce(
    g: Graph, budgets: Budgets = DEFAULT_BUDGETS
) -> CriticalReport:
    """Sweep all 2^n subsets. N(X) is built incrementally: dropping the
    lowest bit of X gives a previously visited subset."""
    n = g.n
    if n > budgets.subset_n:
        raise BudgetExceededError(
            f"subset sweep limited to {budgets.subset_n} vertices, got {n}"
        )
    adj = g.adj
    size = 1 << n
    nbh = [0] * size
    for x in range(1, size):
        low = x & -x
        nbh[x] = nbh[x ^ low] | adj[low.bit_length() - 1]
    d_c = 0
    id_c = 0
    witness = 0
    for x in range(size):
        d = x.bit_count() - nbh[x].bit_count()
        if d > d_c:
            d_c = d
            witness = x
        if d > id_c and nbh[x] & x == 0:
            id_c = d
    ker_mask = (1 << n) - 1 if n else 0
    crit: list[int] = []
    for x in range(size):
        if nbh[x] & x:
            continue
        if x.bit_count() - nbh[x].bit_count() == id_c:
            crit.append(x)
            ker_mask &= x
    return CriticalReport(
        d_c=d_c,
        id_c=id_c,
        witness_set=VertexSet(g, witness),
        ker=VertexSet(g, ker_mask),
        critical_independent_sets=tuple(VertexSet(g, x) for x in crit),
    )


def bipartite_double_cover(g: Graph) -> Graph:
    """Two mirrored copies, primed labels on the mirror, each edge uv becoming
    u-v' and v-u'. Rejects graphs whose labels already collide with a primed
    twin."""
    labels = g.labels
    primed = [lab + "'" for lab in labels]
    clash = set(labels) & set(primed)
    if clash:
        raise DomainError(
            f"label {sorted(clash)[0]!r} collides with a primed copy"
        )
    edges = []
    for i, j in g.edges():
        edges.append((labels[i], primed[j]))
        edges.append((labels[j], primed[i]))
    isolated = []
    for v in range(g.n):
        if g.adj[v] == 0:
            isolated.append(labels[v])
            isolated.append(primed[v])
    return Graph.from_edges(edges, isolated=isolated)


_fast_path_enabled = True


def critical_difference_fast(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """d_c via alpha(double cover) - n. The cover is bipartite, so its alpha
    is exact at any size this library handles."""
    cover = bipartite_double_cover(g)
    return _alpha_active(cover.adj, (1 << cover.n) - 1, budgets) - g.n


def cross_check_fast_path(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """Run both routes and compare. A mismatch permanently disables the fast
    path in this process and returns False."""
    global _fast_path_enabled
    fast = critical_difference_fast(g, budgets)
    slow = critical_difference_bruteforce(g, budgets).d_c
    if fast != slow:
        _fast_path_enabled = False
        return False
    return True


def critical_difference(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """d_c(G), via the double cover while it remains trusted and within
    budget via the sweep otherwise."""
    if _fast_path_enabled:
        return critical_difference_fast(g, budgets)
    return critical_difference_bruteforce(g, budgets).d_c


def ker(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> VertexSet:
    """Intersection of all critical independent sets.

    Bipartite graphs get ker = core, which needs only alpha queries. A
    connected unicyclic graph that is not Koenig-Egervary also has ker =
    core. Everything else (including Koenig-Egervary graphs with an odd
    cycle, where the two sets can differ) goes through the sweep.
    """
    if g.n == 0:
        return g.empty_set()
    shape = classify_shape(g)
    if shape.bipartite:
        return core(g, budgets)
    if (
        shape.connected
        and shape.kind == "unicyclic"
        and not is_koenig_egervary(g, budgets)
    ):
        return core(g, budgets)
    return critical_difference_bruteforce(g, budgets).ker
