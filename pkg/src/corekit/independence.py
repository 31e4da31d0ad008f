"""Independence-number machinery: alpha, the maximum-independent-set family,
core (vertices in every MIS) and corona (vertices in some MIS).

alpha dispatches per connected component: trees get a linear DP, unicyclic
components reduce to two forest DPs by branching on one cycle vertex, and
everything else goes through exact branch-and-bound under a size budget.
core and corona are computed by alpha-queries, never by enumerating the MIS
family: v is in core iff alpha(G - v) = alpha(G) - 1, and v is in corona iff
alpha(G - N[v]) = alpha(G) - 1.
"""

from __future__ import annotations

from .budgets import DEFAULT_BUDGETS, Budgets
from .errors import BudgetExceededError, DomainError
from .graph import Graph, VertexSet

__all__ = [
    "is_independent",
    "alpha",
    "enumerate_mis",
    "core",
    "corona",
    "is_alpha_critical_edge",
]


# -- mask-level helpers (shared with the matching and unicyclic modules) -----


def _components_in(adj: tuple[int, ...], active: int) -> list[int]:
    """Connected components of the subgraph induced on the active mask,
    ordered by smallest vertex index."""
    out = []
    rest = active
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            nxt = 0
            scan = frontier
            while scan:
                b = scan & -scan
                nxt |= adj[b.bit_length() - 1]
                scan ^= b
            frontier = nxt & active & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


def _edge_count(adj: tuple[int, ...], active: int) -> int:
    total = 0
    rest = active
    while rest:
        b = rest & -rest
        total += (adj[b.bit_length() - 1] & active).bit_count()
        rest ^= b
    return total // 2


def _strip_to_cycles(adj: tuple[int, ...], active: int) -> int:
    """Repeatedly drop active vertices with at most one active neighbour.
    On a unicyclic component the survivors are exactly the cycle."""
    changed = True
    while changed:
        changed = False
        rest = active
        while rest:
            b = rest & -rest
            v = b.bit_length() - 1
            rest ^= b
            if (adj[v] & active).bit_count() <= 1:
                active ^= b
                changed = True
    return active


def _forest_alpha(adj: tuple[int, ...], active: int) -> int:
    """Exact alpha of an acyclic induced subgraph via the classic tree DP."""
    total = 0
    seen = 0
    roots = active
    while roots:
        rb = roots & -roots
        roots ^= rb
        root = rb.bit_length() - 1
        if seen >> root & 1:
            continue
        order = []
        parent = {root: -1}
        stack = [root]
        seen |= rb
        while stack:
            v = stack.pop()
            order.append(v)
            nb = adj[v] & active & ~seen
            while nb:
                b = nb & -nb
                u = b.bit_length() - 1
                nb ^= b
                seen |= b
                parent[u] = v
                stack.append(u)
        take = {v: 1 for v in order}
        skip = {v: 0 for v in order}
        for v in reversed(order):
            p = parent[v]
            if p >= 0:
                take[p] += skip[v]
                skip[p] += max(take[v], skip[v])
        total += max(take[root], skip[root])
    return total


def _bb_alpha(adj: tuple[int, ...], active: int) -> int:
    """Branch-and-bound alpha: greedy lower bound, isolated/leaf reductions,
    branch on a maximum-degree vertex (include first)."""
    best = _greedy_independent(adj, active)

    def rec(active: int, size: int) -> None:
        nonlocal best
        # reductions: vertices of active degree <= 1 can always be taken
        while active:
            picked = -1
            rest = active
            while rest:
                b = rest & -rest
                v = b.bit_length() - 1
                rest ^= b
                if (adj[v] & active).bit_count() <= 1:
                    picked = v
                    break
            if picked < 0:
                break
            size += 1
            active &= ~(adj[picked] | 1 << picked)
        if not active:
            if size > best:
                best = size
            return
        if size + active.bit_count() <= best:
            return
        v = -1
        vdeg = -1
        rest = active
        while rest:
            b = rest & -rest
            u = b.bit_length() - 1
            rest ^= b
            d = (adj[u] & active).bit_count()
            if d > vdeg:
                v, vdeg = u, d
        rec(active & ~(adj[v] | 1 << v), size + 1)
        rec(active & ~(1 << v), size)

    rec(active, 0)
    return best


def _greedy_independent(adj: tuple[int, ...], active: int) -> int:
    size = 0
    while active:
        v = -1
        vdeg = -1
        rest = active
        while rest:
            b = rest & -rest
            u = b.bit_length() - 1
            rest ^= b
            d = (adj[u] & active).bit_count()
            if vdeg < 0 or d < vdeg:
                v, vdeg = u, d
        size += 1
        active &= ~(adj[v] | 1 << v)
    return size


def _alpha_active(adj: tuple[int, ...], active: int, budgets: Budgets) -> int:
    """alpha of the subgraph induced on the active mask, with per-component
    dispatch. The branch-and-bound budget applies per general component."""
    total = 0
    for comp in _components_in(adj, active):
        nv = comp.bit_count()
        ne = _edge_count(adj, comp)
        if ne == nv - 1:
            total += _forest_alpha(adj, comp)
        elif ne == nv:
            # unicyclic: alpha = max(alpha(G - u), 1 + alpha(G - N[u])) for a
            # cycle vertex u; both arguments are forests
            cyc = _strip_to_cycles(adj, comp)
            u = (cyc & -cyc).bit_length() - 1
            without_u = _forest_alpha(adj, comp & ~(1 << u))
            with_u = 1 + _forest_alpha(adj, comp & ~(adj[u] | 1 << u))
            total += max(without_u, with_u)
        else:
            bip = _bipartite_alpha(adj, comp)
            if bip is not None:
                total += bip
            elif nv > budgets.bb_n:
                raise BudgetExceededError(
                    f"alpha branch-and-bound limited to components of {budgets.bb_n} "
                    f"vertices, got {nv}"
                )
            else:
                total += _bb_alpha(adj, comp)
    return total


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _bipartite_alpha(adj: tuple[int, ...], comp: int) -> int | None:
    """alpha of a connected bipartite component via Koenig's theorem
    (alpha = n - mu), or None if the component has an odd cycle. Polynomial,
    so bipartite graphs of any size (notably double covers) stay in budget."""
    color: dict[int, int] = {}
    start = (comp & -comp).bit_length() - 1
    color[start] = 0
    queue = [start]
    left = 1 << start
    while queue:
        v = queue.pop()
        for w in _bits(adj[v] & comp):
            if w not in color:
                color[w] = color[v] ^ 1
                if color[w] == 0:
                    left |= 1 << w
                queue.append(w)
            elif color[w] == color[v]:
                return None
    # Kuhn's augmenting paths from the left class
    match: dict[int, int] = {}

    def try_augment(v: int, seen: int) -> tuple[bool, int]:
        for w in _bits(adj[v] & comp):
            if seen >> w & 1:
                continue
            seen |= 1 << w
            if w not in match:
                match[w] = v
                return True, seen
            ok, seen = try_augment(match[w], seen)
            if ok:
                match[w] = v
                return True, seen
        return False, seen

    mu = 0
    for v in _bits(left):
        ok, _ = try_augment(v, 0)
        if ok:
            mu += 1
    return comp.bit_count() - mu


# -- public operations --------------------------------------------------------


def is_independent(g: Graph, vs: VertexSet) -> bool:
    g._own(vs)
    rest = vs.mask
    while rest:
        b = rest & -rest
        if g.adj[b.bit_length() - 1] & vs.mask:
            return False
        rest ^= b
    return True


def alpha(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """Independence number. alpha of the 0-vertex graph is 0."""
    return _alpha_active(g.adj, (1 << g.n) - 1, budgets)


def enumerate_mis(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> tuple[VertexSet, ...]:
    """The family Omega(G) of all maximum independent sets, sorted by their
    label tuples. The 0-vertex graph has Omega = (empty set,)."""
    if g.n > budgets.enum_n:
        raise BudgetExceededError(
            f"MIS enumeration limited to {budgets.enum_n} vertices, got {g.n}"
        )
    adj = g.adj
    full = (1 << g.n) - 1
    target = _alpha_active(adj, full, budgets)
    memo: dict[int, int] = {}

    def am(active: int) -> int:
        got = memo.get(active)
        if got is None:
            got = memo[active] = _alpha_active(adj, active, budgets)
        return got

    found: list[int] = []

    def rec(active: int, need: int, chosen: int) -> None:
        if need == 0:
            found.append(chosen)
            return
        if active.bit_count() < need or am(active) < need:
            return
        b = active & -active
        v = b.bit_length() - 1
        rec(active & ~(adj[v] | b), need - 1, chosen | b)
        rec(active & ~b, need, chosen)

    rec(full, target, 0)
    sets = [VertexSet(g, mask) for mask in found]
    sets.sort(key=lambda s: s.labels())
    return tuple(sets)


def core(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> VertexSet:
    """Vertices belonging to every maximum independent set:
    v is in core(G) iff alpha(G - v) = alpha(G) - 1."""
    adj = g.adj
    full = (1 << g.n) - 1
    a = _alpha_active(adj, full, budgets)
    mask = 0
    for v in range(g.n):
        if _alpha_active(adj, full & ~(1 << v), budgets) == a - 1:
            mask |= 1 << v
    return VertexSet(g, mask)


def corona(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> VertexSet:
    """Vertices belonging to at least one maximum independent set:
    v is in corona(G) iff alpha(G - N[v]) = alpha(G) - 1."""
    adj = g.adj
    full = (1 << g.n) - 1
    a = _alpha_active(adj, full, budgets)
    mask = 0
    for v in range(g.n):
        if _alpha_active(adj, full & ~(adj[v] | 1 << v), budgets) == a - 1:
            mask |= 1 << v
    return VertexSet(g, mask)


def is_alpha_critical_edge(
    g: Graph, u: str, v: str, budgets: Budgets = DEFAULT_BUDGETS
) -> bool:
    """True iff deleting the edge raises alpha (necessarily by exactly 1)."""
    iu, iv = g.index_of(u), g.index_of(v)
    if not g.adj[iu] >> iv & 1:
        raise DomainError(f"no edge {u!r} {v!r}")
    adj = list(g.adj)
    adj[iu] &= ~(1 << iv)
    adj[iv] &= ~(1 << iu)
    full = (1 << g.n) - 1
    return _alpha_active(tuple(adj), full, budgets) == _alpha_active(g.adj, full, budgets) + 1
