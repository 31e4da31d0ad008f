"""Dumb, slow reference implementations used to cross-check the library.

Everything here recomputes invariants from scratch by sweeping vertex or
edge subsets, reading only the graph's labels and edge list. None of the
library's clever paths (tree DP, branch and bound, Kuhn, double cover) are
reused, so a shared bug cannot hide in both sides of a comparison.
"""

from __future__ import annotations

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(number: int, ok: bool, detail: str) -> str:
    """Stash one pass/fail line for the end-of-run summary and print it."""
    line = f"ACCEPTANCE {number}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return line


def indexed_adjacency(g) -> tuple[list[str], list[int]]:
    """Rebuild bitmask adjacency from the public label/edge API only."""
    labels = list(g.labels)
    idx = {lab: i for i, lab in enumerate(labels)}
    adj = [0] * len(labels)
    for a, b in g.edge_labels():
        ia, ib = idx[a], idx[b]
        adj[ia] |= 1 << ib
        adj[ib] |= 1 << ia
    return labels, adj


def _is_independent(adj: list[int], mask: int) -> bool:
    mm = mask
    while mm:
        b = mm & -mm
        if adj[b.bit_length() - 1] & mask:
            return False
        mm ^= b
    return True


def _neighborhood(adj: list[int], mask: int) -> int:
    out = 0
    mm = mask
    while mm:
        b = mm & -mm
        out |= adj[b.bit_length() - 1]
        mm ^= b
    return out


def _labelset(labels: list[str], mask: int) -> frozenset[str]:
    return frozenset(labels[i] for i in range(len(labels)) if mask >> i & 1)


def oracle_alpha(g) -> int:
    labels, adj = indexed_adjacency(g)
    best = 0
    for mask in range(1 << len(labels)):
        if _is_independent(adj, mask):
            best = max(best, mask.bit_count())
    return best


def oracle_mis_family(g) -> set[frozenset[str]]:
    labels, adj = indexed_adjacency(g)
    a = oracle_alpha(g)
    return {
        _labelset(labels, mask)
        for mask in range(1 << len(labels))
        if mask.bit_count() == a and _is_independent(adj, mask)
    }


def oracle_core(g) -> frozenset[str]:
    fam = oracle_mis_family(g)
    out = frozenset(g.labels)
    for s in fam:
        out &= s
    return out


def oracle_corona(g) -> frozenset[str]:
    out: frozenset[str] = frozenset()
    for s in oracle_mis_family(g):
        out |= s
    return out


def oracle_mu(g) -> int:
    """Maximum matching size by sweeping edge subsets. Guarded so nobody
    accidentally points it at a graph where 2^m is out of reach."""
    labels, _ = indexed_adjacency(g)
    idx = {lab: i for i, lab in enumerate(labels)}
    edges = [(idx[a], idx[b]) for a, b in g.edge_labels()]
    m = len(edges)
    if m > 16:
        raise ValueError(f"oracle_mu is for m <= 16, got {m}")
    best = 0
    for mask in range(1 << m):
        used = 0
        ok = True
        mm = mask
        while mm:
            b = mm & -mm
            a_, b_ = edges[b.bit_length() - 1]
            pair = 1 << a_ | 1 << b_
            if used & pair:
                ok = False
                break
            used |= pair
            mm ^= b
        if ok:
            best = max(best, mask.bit_count())
    return best


def oracle_is_ke(g) -> bool:
    return oracle_alpha(g) + oracle_mu(g) == len(g.labels)


def oracle_critical(g) -> tuple[int, int, frozenset[str]]:
    """(d_c, id_c, ker) by direct definition: d_c maximizes |X|-|N(X)| over
    all subsets, id_c over independent subsets, and ker intersects every
    independent subset attaining id_c."""
    labels, adj = indexed_adjacency(g)
    n = len(labels)
    d_c = 0
    id_c = 0
    for mask in range(1 << n):
        d = mask.bit_count() - _neighborhood(adj, mask).bit_count()
        if d > d_c:
            d_c = d
        if d > id_c and _is_independent(adj, mask):
            id_c = d
    ker_mask = (1 << n) - 1 if n else 0
    for mask in range(1 << n):
        if not _is_independent(adj, mask):
            continue
        if mask.bit_count() - _neighborhood(adj, mask).bit_count() == id_c:
            ker_mask &= mask
    return d_c, id_c, _labelset(labels, ker_mask)


def oracle_ker(g) -> frozenset[str]:
    return oracle_critical(g)[2]
