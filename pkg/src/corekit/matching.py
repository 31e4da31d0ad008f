"""Maximum matchings, the Koenig-Egervary test, and saturating matchings.

maximum_matching dispatches per component: forest and unicyclic components
use exact leaf-stripping (match a leaf to its support; the leftover is a bare
cycle), bipartite components use augmenting paths, and everything else uses a
memoized exhaustive branch on the fate of the lowest vertex, under a size
budget. A graph is Koenig-Egervary when alpha + mu = n; every bipartite graph
is, and checking that is one of the test gates.
"""

from __future__ import annotations

from .budgets import DEFAULT_BUDGETS, Budgets
from .errors import BudgetExceededError, DomainError
from .graph import Graph, VertexSet
from .independence import _alpha_active, _components_in, _edge_count

__all__ = [
    "Matching",
    "maximum_matching",
    "mu",
    "is_koenig_egervary",
    "saturating_matching",
    "is_mu_critical_edge",
    "enumerate_maximum_matchings",
]


class Matching:
    """An immutable set of pairwise disjoint edges of one graph.

    Construction re-verifies the defining predicate: every pair must be an
    edge of the owner and no vertex may repeat.
    """

    __slots__ = ("graph", "pairs")

    def __init__(self, graph: Graph, pairs):
        norm = []
        used = 0
        for i, j in pairs:
            if not graph.adj[i] >> j & 1:
                raise DomainError(
                    f"pair ({graph.labels[i]!r}, {graph.labels[j]!r}) is not an edge"
                )
            bits = 1 << i | 1 << j
            if used & bits:
                raise DomainError("matching reuses a vertex")
            used |= bits
            norm.append((i, j) if i < j else (j, i))
        norm.sort()
        self.graph = graph
        self.pairs = tuple(norm)

    @classmethod
    def from_labels(cls, graph: Graph, pairs) -> "Matching":
        """Build from label pairs instead of index pairs."""
        return cls(graph, [(graph.index_of(a), graph.index_of(b)) for a, b in pairs])

    def __len__(self) -> int:
        return len(self.pairs)

    def vertices(self) -> VertexSet:
        mask = 0
        for i, j in self.pairs:
            mask |= 1 << i | 1 << j
        return VertexSet(self.graph, mask)

    def edge_labels(self) -> list[tuple[str, str]]:
        labs = self.graph.labels
        out = []
        for i, j in self.pairs:
            a, b = labs[i], labs[j]
            out.append((a, b) if a <= b else (b, a))
        out.sort()
        return out

    def matched_to(self, label: str) -> str | None:
        v = self.graph.index_of(label)
        for i, j in self.pairs:
            if i == v:
                return self.graph.labels[j]
            if j == v:
                return self.graph.labels[i]
        return None

    def __repr__(self) -> str:
        return "{" + ", ".join(f"{a}{b}" if len(a) == len(b) == 1 else f"{a}-{b}"
                               for a, b in self.edge_labels()) + "}"


# -- component matchers -------------------------------------------------------


def _strip_matching(adj: tuple[int, ...], comp: int) -> list[tuple[int, int]]:
    """Exact maximum matching for components whose 2-core is empty or a bare
    cycle (forests and unicyclic components). Matching a leaf to its support
    is always optimal; what survives stripping is a disjoint union of cycles."""
    pairs = []
    active = comp
    while active:
        drop = -1
        leaf = -1
        rest = active
        while rest:
            b = rest & -rest
            v = b.bit_length() - 1
            rest ^= b
            d = (adj[v] & active).bit_count()
            if d == 0:
                drop = v
                break
            if d == 1 and leaf < 0:
                leaf = v
        if drop >= 0:
            active &= ~(1 << drop)
            continue
        if leaf < 0:
            break
        nb = adj[leaf] & active
        sup = (nb & -nb).bit_length() - 1
        pairs.append((leaf, sup))
        active &= ~(1 << leaf | 1 << sup)
    # leftover: disjoint cycles; take alternating edges along each
    for cyc in _components_in(adj, active):
        order = []
        start = (cyc & -cyc).bit_length() - 1
        prev, cur = -1, start
        while True:
            order.append(cur)
            nb = adj[cur] & cyc
            if prev >= 0:
                nb &= ~(1 << prev)
            nxt = (nb & -nb).bit_length() - 1
            if len(order) > 1 and nxt == start:
                break
            prev, cur = cur, nxt
        for k in range(0, len(order) - 1, 2):
            pairs.append((order[k], order[k + 1]))
    return pairs


def _two_coloring(adj: tuple[int, ...], comp: int) -> dict[int, int] | None:
    color: dict[int, int] = {}
    start = (comp & -comp).bit_length() - 1
    color[start] = 0
    stack = [start]
    while stack:
        v = stack.pop()
        nb = adj[v] & comp
        while nb:
            b = nb & -nb
            u = b.bit_length() - 1
            nb ^= b
            if u not in color:
                color[u] = color[v] ^ 1
                stack.append(u)
            elif color[u] == color[v]:
                return None
    return color


def _augmenting_matching(adj: tuple[int, ...], comp: int) -> list[tuple[int, int]]:
    """Augmenting-path maximum matching for a bipartite component."""
    color = _two_coloring(adj, comp)
    assert color is not None, "augmenting matcher needs a bipartite component"
    left = sorted(v for v, c in color.items() if c == 0)
    mate: dict[int, int] = {}

    def try_augment(v: int, visited: set[int]) -> bool:
        nb = adj[v] & comp
        while nb:
            b = nb & -nb
            u = b.bit_length() - 1
            nb ^= b
            if u in visited:
                continue
            visited.add(u)
            if u not in mate or try_augment(mate[u], visited):
                mate[u] = v
                return True
        return False

    for v in left:
        try_augment(v, set())
    return sorted((v, u) for u, v in mate.items())


def _mu_active(adj: tuple[int, ...], active: int, memo: dict[int, int]) -> int:
    """Exhaustive mu on a vertex mask: the lowest vertex with a live
    neighbour is either unmatched or matched to one of its neighbours."""
    while active:
        b = active & -active
        if adj[b.bit_length() - 1] & active:
            break
        active ^= b
    if not active:
        return 0
    got = memo.get(active)
    if got is not None:
        return got
    b = active & -active
    v = b.bit_length() - 1
    best = _mu_active(adj, active ^ b, memo)
    cap = active.bit_count() // 2
    nb = adj[v] & active
    while nb and best < cap:
        ub = nb & -nb
        nb ^= ub
        r = 1 + _mu_active(adj, active ^ b ^ ub, memo)
        if r > best:
            best = r
    memo[active] = best
    return best


def _exact_matching(adj: tuple[int, ...], comp: int, memo: dict[int, int]) -> list[tuple[int, int]]:
    pairs = []
    active = comp
    while active:
        b = active & -active
        v = b.bit_length() - 1
        if not adj[v] & active:
            active ^= b
            continue
        cur = _mu_active(adj, active, memo)
        if cur == 0:
            break
        if _mu_active(adj, active ^ b, memo) == cur:
            active ^= b
            continue
        nb = adj[v] & active
        while nb:
            ub = nb & -nb
            u = ub.bit_length() - 1
            nb ^= ub
            if 1 + _mu_active(adj, active ^ b ^ ub, memo) == cur:
                pairs.append((v, u))
                active ^= b ^ ub
                break
    return pairs


# -- public operations ---------------------------------------------------------


def maximum_matching(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> Matching:
    """One maximum matching, deterministically chosen."""
    adj = g.adj
    pairs: list[tuple[int, int]] = []
    memo: dict[int, int] = {}
    for comp in g.components():
        nv = comp.bit_count()
        ne = _edge_count(adj, comp)
        if ne <= nv:
            pairs += _strip_matching(adj, comp)
        elif _two_coloring(adj, comp) is not None:
            pairs += _augmenting_matching(adj, comp)
        else:
            if nv > budgets.matching_n:
                raise BudgetExceededError(
                    f"exact matching limited to components of {budgets.matching_n} "
                    f"vertices, got {nv}"
                )
            pairs += _exact_matching(adj, comp, memo)
    return Matching(g, pairs)


def mu(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    return len(maximum_matching(g, budgets))


def is_koenig_egervary(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """alpha(G) + mu(G) = n. Always true for bipartite graphs (a test gate,
    not an assumption of this function)."""
    return _alpha_active(g.adj, (1 << g.n) - 1, budgets) + mu(g, budgets) == g.n


def saturating_matching(g: Graph, sources: VertexSet, targets: VertexSet) -> Matching | None:
    """A matching inside the source/target bipartite slice saturating every
    source vertex, or None if no such matching exists (Hall failure).
    Sources and targets must be disjoint."""
    g._own(sources)
    g._own(targets)
    if sources.mask & targets.mask:
        raise DomainError("source and target sets overlap")
    adj = g.adj
    tmask = targets.mask
    mate: dict[int, int] = {}

    def try_augment(v: int, visited: set[int]) -> bool:
        nb = adj[v] & tmask
        while nb:
            b = nb & -nb
            u = b.bit_length() - 1
            nb ^= b
            if u in visited:
                continue
            visited.add(u)
            if u not in mate or try_augment(mate[u], visited):
                mate[u] = v
                return True
        return False

    for v in sources.indices():
        if not try_augment(v, set()):
            return None
    return Matching(g, [(v, u) for u, v in sorted(mate.items())])


def is_mu_critical_edge(g: Graph, u: str, v: str, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    """True iff deleting the edge lowers mu, i.e. the edge lies in every
    maximum matching."""
    return mu(g.delete_edge(u, v), budgets) < mu(g, budgets)


def enumerate_maximum_matchings(
    g: Graph, budgets: Budgets = DEFAULT_BUDGETS
) -> tuple[Matching, ...]:
    """Every maximum matching, sorted by edge-label lists. Raises when the
    family would exceed the configured matching_limit."""
    if g.n > budgets.enum_n:
        raise BudgetExceededError(
            f"matching enumeration limited to {budgets.enum_n} vertices, got {g.n}"
        )
    adj = g.adj
    full = (1 << g.n) - 1
    memo: dict[int, int] = {}
    target = _mu_active(adj, full, memo)
    out: list[tuple[tuple[int, int], ...]] = []

    def rec(active: int, need: int, chosen: tuple[tuple[int, int], ...]) -> None:
        if need == 0:
            if len(out) >= budgets.matching_limit:
                raise BudgetExceededError(
                    f"more than {budgets.matching_limit} maximum matchings"
                )
            out.append(chosen)
            return
        b = active & -active
        v = b.bit_length() - 1
        if not adj[v] & active:
            rec(active ^ b, need, chosen)
            return
        if _mu_active(adj, active ^ b, memo) >= need:
            rec(active ^ b, need, chosen)
        nb = adj[v] & active
        while nb:
            ub = nb & -nb
            u = ub.bit_length() - 1
            nb ^= ub
            if 1 + _mu_active(adj, active ^ b ^ ub, memo) >= need:
                rec(active ^ b ^ ub, need - 1, chosen + ((v, u),))

    rec(full, target, ())
    matchings = [Matching(g, pairs) for pairs in out]
    matchings.sort(key=lambda m: m.edge_labels())
    return tuple(matchings)
