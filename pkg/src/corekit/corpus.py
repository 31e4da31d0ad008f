"""Graph corpora: packaged fixtures, a parametric family, exhaustive
enumerators for trees / unicyclic graphs / small connected graphs, and
seeded random generators.

Enumeration up to isomorphism is direct, not dedupe-after-the-fact on labeled
streams: rooted trees come from the level-sequence successor algorithm and are
deduped by center-rooted canonical codes; unicyclic graphs are free trees plus
one non-edge, deduped by a cycle-necklace code; connected graphs on at most 7
vertices come from an edge-mask sweep with a degree-sorted prefilter and a
block-permutation minimality test. Every enumerator is gated in the tests by
published counts and, at small n, by cross-checks against labeled streams.

All randomness is drawn from string-seeded random.Random instances, so every
stream is reproducible from (n, seed) alone, independent of process history.
"""

from __future__ import annotations

import heapq
import random
from importlib import resources
from itertools import permutations
from typing import Iterator

from .budgets import DEFAULT_BUDGETS, Budgets
from .errors import BudgetExceededError, DomainError
from .graph import Graph, parse_edge_list
from .independence import _strip_to_cycles

__all__ = [
    "FIXTURE_NAMES",
    "fixture_text",
    "fixture",
    "kernel_gap_family",
    "prufer_decode",
    "enumerate_trees",
    "enumerate_unicyclic",
    "enumerate_connected_graphs",
    "tree_code",
    "unicyclic_code",
    "random_tree",
    "random_unicyclic",
    "random_connected",
    "family_items",
]

FIXTURE_NAMES = (
    "uni7-ke",
    "uni10-nonke",
    "tree5-pendant",
    "uni9-ke",
    "uni7-ke-kereq",
    "bicyclic10-nonke",
    "uni8-nonke",
    "bicyclic10-ke",
    "bicyclic9-nonke",
    "p2",
    "p3",
    "c4",
    "c5",
    "k1",
    "k3",
)


def fixture_text(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise DomainError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    return (resources.files("corekit") / "fixtures" / f"{name}.txt").read_text("utf-8")


def fixture(name: str) -> Graph:
    return parse_edge_list(fixture_text(name))


def kernel_gap_family(k: int) -> Graph:
    """The k-th member of a family of Koenig-Egervary unicyclic graphs whose
    core outgrows its kernel: a path x-y-z, an odd path v1..v_{2k+1} hanging
    below y, and a triangle closing the far end of that path through a new
    vertex w. ker stays {x, z} for every k while core also holds
    v1, v3, ..., v_{2k-1}."""
    if k < 1:
        raise DomainError(f"family index must be >= 1, got {k}")
    edges = [("x", "y"), ("y", "z"), ("y", "v1")]
    for i in range(1, 2 * k + 1):
        edges.append((f"v{i}", f"v{i + 1}"))
    edges.append((f"v{2 * k}", "w"))
    edges.append((f"v{2 * k + 1}", "w"))
    return Graph.from_edges(edges)


# -- labeled generation -------------------------------------------------------


def prufer_decode(seq: tuple[int, ...]) -> Graph:
    """The labeled tree on v1..v{len(seq)+2} with the given sequence."""
    n = len(seq) + 2
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    edges = []
    leaf_heap = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaf_heap)
    for s in seq:
        leaf = heapq.heappop(leaf_heap)
        edges.append((f"v{leaf + 1}", f"v{s + 1}"))
        degree[s] -= 1
        if degree[s] == 1:
            heapq.heappush(leaf_heap, s)
    u = heapq.heappop(leaf_heap)
    v = heapq.heappop(leaf_heap)
    edges.append((f"v{u + 1}", f"v{v + 1}"))
    return Graph.from_edges(edges)


def _labeled_trees(n: int) -> Iterator[Graph]:
    if n == 1:
        yield Graph.from_edges(isolated=("v1",))
        return
    if n == 2:
        yield Graph.from_edges([("v1", "v2")])
        return
    seq = [0] * (n - 2)
    while True:
        yield prufer_decode(tuple(seq))
        i = n - 3
        while i >= 0 and seq[i] == n - 1:
            seq[i] = 0
            i -= 1
        if i < 0:
            return
        seq[i] += 1


# -- canonical codes ----------------------------------------------------------


def _rooted_code(adj: tuple[int, ...], root: int, parent: int) -> str:
    subs = []
    rest = adj[root] & ~(1 << parent if parent >= 0 else 0)
    while rest:
        b = rest & -rest
        subs.append(_rooted_code(adj, b.bit_length() - 1, root))
        rest ^= b
    subs.sort()
    return "(" + "".join(subs) + ")"


def _tree_centers(adj: tuple[int, ...], n: int) -> list[int]:
    if n == 1:
        return [0]
    degree = [adj[v].bit_count() for v in range(n)]
    alive = (1 << n) - 1
    layer = [v for v in range(n) if degree[v] <= 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for v in layer:
            alive &= ~(1 << v)
            remaining -= 1
            rest = adj[v] & alive
            while rest:
                b = rest & -rest
                u = b.bit_length() - 1
                rest ^= b
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    return [v for v in range(n) if alive >> v & 1]


def tree_code(g: Graph) -> str:
    """Canonical string; two trees get the same code iff they are isomorphic."""
    centers = _tree_centers(g.adj, g.n)
    return min(_rooted_code(g.adj, c, -1) for c in centers)


def _cycle_order(adj: tuple[int, ...], cyc: int) -> list[int]:
    start = (cyc & -cyc).bit_length() - 1
    nb = adj[start] & cyc
    order = [start, (nb & -nb).bit_length() - 1]
    while True:
        prev, cur = order[-2], order[-1]
        step = adj[cur] & cyc & ~(1 << prev)
        nxt = (step & -step).bit_length() - 1
        if nxt == start:
            return order
        order.append(nxt)


def unicyclic_code(g: Graph) -> str:
    """Canonical string for a connected unicyclic graph: cycle length plus the
    lexicographically smallest rotation/reflection of the sequence of
    pendant-tree codes along the cycle."""
    adj = g.adj
    cyc = _strip_to_cycles(adj, (1 << g.n) - 1)
    order = _cycle_order(adj, cyc)
    codes = []
    for v in order:
        sub = []
        rest = adj[v] & ~cyc
        while rest:
            b = rest & -rest
            sub.append(_rooted_code(adj, b.bit_length() - 1, v))
            rest ^= b
        sub.sort()
        codes.append("(" + "".join(sub) + ")")
    ell = len(codes)
    best = None
    for shift in range(ell):
        for direction in (1, -1):
            cand = tuple(codes[(shift + direction * i) % ell] for i in range(ell))
            if best is None or cand < best:
                best = cand
    return f"{ell}:" + "".join(best)


# -- enumeration up to isomorphism -------------------------------------------


def _level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequences of rooted trees on n vertices, root at
    level 1, generated by the standard successor rule."""
    seq = list(range(1, n + 1))
    while True:
        yield seq
        p = -1
        for i in range(n - 1, -1, -1):
            if seq[i] > 2:
                p = i
                break
        if p < 0:
            return
        q = p - 1
        while seq[q] != seq[p] - 1:
            q -= 1
        nxt = seq[:p]
        block = seq[q:p]
        while len(nxt) < n:
            nxt.extend(block[: n - len(nxt)])
        seq = nxt


def _tree_from_levels(seq: list[int]) -> Graph:
    n = len(seq)
    if n == 1:
        return Graph.from_edges(isolated=("v1",))
    parent_at = {seq[0]: 0}
    edges = []
    for i in range(1, n):
        lev = seq[i]
        edges.append((f"v{parent_at[lev - 1] + 1}", f"v{i + 1}"))
        parent_at[lev] = i
    return Graph.from_edges(edges)


def enumerate_trees(
    n: int, dedupe: bool = True, budgets: Budgets = DEFAULT_BUDGETS
) -> Iterator[Graph]:
    """Trees on n vertices: one per isomorphism class by default, the full
    labeled stream (n^(n-2) trees on v1..vn) with dedupe=False."""
    if n < 1:
        raise DomainError(f"trees need n >= 1, got {n}")
    if n > budgets.enum_n:
        raise BudgetExceededError(f"tree enumeration limited to n <= {budgets.enum_n}")
    if not dedupe:
        yield from _labeled_trees(n)
        return
    seen = set()
    for seq in _level_sequences(n):
        g = _tree_from_levels(seq)
        code = tree_code(g)
        if code not in seen:
            seen.add(code)
            yield g


def _canonical_cycle_edge(g: Graph) -> tuple[str, str]:
    """The cycle edge with the lexicographically smallest sorted label pair.
    A label-only choice, so it is the same however the graph was built."""
    cyc = _strip_to_cycles(g.adj, (1 << g.n) - 1)
    order = _cycle_order(g.adj, cyc)
    best = None
    for k in range(len(order)):
        a = g.labels[order[k]]
        b = g.labels[order[(k + 1) % len(order)]]
        pair = (a, b) if a <= b else (b, a)
        if best is None or pair < best:
            best = pair
    return best


def enumerate_unicyclic(
    n: int, dedupe: bool = True, budgets: Budgets = DEFAULT_BUDGETS
) -> Iterator[Graph]:
    """Connected unicyclic graphs on n vertices: one per isomorphism class by
    default, each labeled graph on v1..vn exactly once with dedupe=False."""
    if n < 3:
        raise DomainError(f"unicyclic graphs need n >= 3, got {n}")
    if n > budgets.enum_n:
        raise BudgetExceededError(
            f"unicyclic enumeration limited to n <= {budgets.enum_n}"
        )
    if dedupe:
        seen = set()
        for t in enumerate_trees(n, dedupe=True, budgets=budgets):
            tree_edges = t.edge_labels()
            for i in range(n):
                for j in range(i + 1, n):
                    if t.adj[i] >> j & 1:
                        continue
                    g = Graph.from_edges(tree_edges + [(t.labels[i], t.labels[j])])
                    code = unicyclic_code(g)
                    if code not in seen:
                        seen.add(code)
                        yield g
        return
    # labeled: a tree plus a non-edge builds each graph once per cycle edge,
    # so emit only when the added edge is the canonical one
    for t in _labeled_trees(n):
        tree_edges = t.edge_labels()
        for i in range(n):
            for j in range(i + 1, n):
                if t.adj[i] >> j & 1:
                    continue
                a, b = t.labels[i], t.labels[j]
                added = (a, b) if a <= b else (b, a)
                g = Graph.from_edges(tree_edges + [(a, b)])
                if _canonical_cycle_edge(g) == added:
                    yield g


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Connected graphs on n <= 7 vertices, one per isomorphism class:
    edge-mask sweep keeping masks whose degree vector is non-increasing and
    minimal under all degree-preserving position permutations."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if n > 7:
        raise BudgetExceededError("connected-graph enumeration limited to n <= 7")
    if n == 1:
        yield Graph.from_edges(isolated=("v1",))
        return
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    nbits = len(pairs)
    bit_of = {p: k for k, p in enumerate(pairs)}
    # per-degree-vector cache of the bit relabelings of every non-identity
    # permutation that preserves the (sorted) degree vector positionwise
    perm_cache: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    all_perms = list(permutations(range(n)))[1:]

    def bitmaps_for(deg: tuple[int, ...]) -> list[tuple[int, ...]]:
        maps = perm_cache.get(deg)
        if maps is None:
            maps = []
            for perm in all_perms:
                if any(deg[perm[i]] != deg[i] for i in range(n)):
                    continue
                bm = [0] * nbits
                for k, (i, j) in enumerate(pairs):
                    pi, pj = perm[i], perm[j]
                    bm[k] = bit_of[(pi, pj) if pi < pj else (pj, pi)]
                maps.append(tuple(bm))
            perm_cache[deg] = maps
        return maps

    for mask in range(1 << nbits):
        if mask.bit_count() < n - 1:
            continue
        deg = [0] * n
        adj = [0] * n
        rest = mask
        while rest:
            b = rest & -rest
            i, j = pairs[b.bit_length() - 1]
            deg[i] += 1
            deg[j] += 1
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            rest ^= b
        if any(deg[i] < deg[i + 1] for i in range(n - 1)):
            continue
        comp = 1
        frontier = 1
        while frontier:
            nxt = 0
            r = frontier
            while r:
                b = r & -r
                nxt |= adj[b.bit_length() - 1]
                r ^= b
            frontier = nxt & ~comp
            comp |= frontier
        if comp != (1 << n) - 1:
            continue
        minimal = True
        for bm in bitmaps_for(tuple(deg)):
            out = 0
            rest = mask
            while rest:
                b = rest & -rest
                out |= 1 << bm[b.bit_length() - 1]
                rest ^= b
            if out < mask:
                minimal = False
                break
        if minimal:
            edges = [
                (f"v{i + 1}", f"v{j + 1}")
                for k, (i, j) in enumerate(pairs)
                if mask >> k & 1
            ]
            yield Graph.from_edges(edges)


# -- seeded random generation -------------------------------------------------


def random_tree(n: int, seed) -> Graph:
    if n < 1:
        raise DomainError(f"trees need n >= 1, got {n}")
    if n <= 2:
        return next(_labeled_trees(n))
    rng = random.Random(f"tree:{n}:{seed}")
    return prufer_decode(tuple(rng.randrange(n) for _ in range(n - 2)))


def random_unicyclic(n: int, seed) -> Graph:
    if n < 3:
        raise DomainError(f"unicyclic graphs need n >= 3, got {n}")
    rng = random.Random(f"unicyclic:{n}:{seed}")
    t = prufer_decode(tuple(rng.randrange(n) for _ in range(n - 2)))
    non_edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if not t.adj[i] >> j & 1
    ]
    i, j = non_edges[rng.randrange(len(non_edges))]
    return Graph.from_edges(list(t.edge_labels()) + [(t.labels[i], t.labels[j])])


def random_connected(n: int, seed) -> Graph:
    """A random connected graph: a random spanning tree plus a random subset
    of the remaining pairs, with the extra density itself drawn at random."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if n == 1:
        return Graph.from_edges(isolated=("v1",))
    rng = random.Random(f"connected:{n}:{seed}")
    t = (
        prufer_decode(tuple(rng.randrange(n) for _ in range(n - 2)))
        if n > 2
        else next(_labeled_trees(2))
    )
    p = rng.uniform(0.0, 0.6)
    edges = list(t.edge_labels())
    for i in range(n):
        for j in range(i + 1, n):
            if not t.adj[i] >> j & 1 and rng.random() < p:
                edges.append((t.labels[i], t.labels[j]))
    return Graph.from_edges(edges)


# -- streams ------------------------------------------------------------------


def family_items(
    family: str,
    max_n: int | None = None,
    count: int | None = None,
    size: int | None = None,
    seed: int = 0,
    budgets: Budgets = DEFAULT_BUDGETS,
) -> Iterator[tuple[str, Graph]]:
    """(graph_id, graph) streams used by the sweep driver and the CLI.

    Exhaustive families (trees, unicyclic, connected) need max_n; random
    families need count and size. Ids are stable and self-describing.
    """
    if family == "fixtures":
        for name in FIXTURE_NAMES:
            yield name, fixture(name)
    elif family == "trees":
        if max_n is None:
            raise DomainError("trees family needs max_n")
        for n in range(1, max_n + 1):
            for i, g in enumerate(enumerate_trees(n, budgets=budgets)):
                yield f"tree:n{n}:{i}", g
    elif family == "unicyclic":
        if max_n is None:
            raise DomainError("unicyclic family needs max_n")
        for n in range(3, max_n + 1):
            for i, g in enumerate(enumerate_unicyclic(n, budgets=budgets)):
                yield f"uni:n{n}:{i}", g
    elif family == "connected":
        if max_n is None:
            raise DomainError("connected family needs max_n")
        for n in range(1, max_n + 1):
            for i, g in enumerate(enumerate_connected_graphs(n)):
                yield f"conn:n{n}:{i}", g
    elif family == "random-unicyclic":
        if count is None or size is None:
            raise DomainError("random-unicyclic family needs count and size")
        for i in range(count):
            yield f"rand-uni:n{size}:s{seed}:{i}", random_unicyclic(size, f"{seed}:{i}")
    elif family == "random-connected":
        if count is None or size is None:
            raise DomainError("random-connected family needs count and size")
        for i in range(count):
            yield f"rand-conn:n{size}:s{seed}:{i}", random_connected(size, f"{seed}:{i}")
    elif family == "kernel-gap":
        if max_n is None:
            raise DomainError("kernel-gap family needs max_n (largest k)")
        for k in range(1, max_n + 1):
            yield f"kernel-gap:k{k}", kernel_gap_family(k)
    else:
        raise DomainError(f"unknown family {family!r}")
