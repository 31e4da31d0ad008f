"""Executable checkers for the theorem catalog, corpus sweeps, and the two
open-problem searches.

Every checker decides applicability from the statement's hypotheses and then
tests the conclusion by direct computation on primitives: enumerated maximum
independent sets, alpha queries, augmenting-path matchings, and the subset
sweep. No checker ever shortcuts through another catalog statement; in
particular ker is always recomputed by brute force here, never through the
dispatching ker() (whose bipartite branch is itself one of the statements
under test), and core/corona of pendant trees come from alpha queries on the
tree, not from the structural_* functions.

A report's witness payload is re-verified under its defining predicate before
it is returned (matchings are rebuilt through the validating constructor and
checked for saturation), so a report never carries an unchecked certificate.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable

from .budgets import DEFAULT_BUDGETS, Budgets
from .critical import critical_difference_bruteforce, diff
from .errors import DomainError
from .graph import Graph, VertexSet, classify_shape, parse_edge_list, serialize
from .independence import _alpha_active, core, corona, enumerate_mis, is_alpha_critical_edge, is_independent
from .matching import enumerate_maximum_matchings, mu, saturating_matching
from .unicyclic import decompose, find_cycle

__all__ = [
    "THEOREM_IDS",
    "TheoremReport",
    "check",
    "SweepSummary",
    "sweep",
    "Problem1Report",
    "search_problem1",
    "classify_sum_defect",
    "sum_defect_histogram",
]

THEOREM_IDS = (
    "LEM1A",
    "LEM1B",
    "LEM2",
    "TH11",
    "TH1",
    "TH2A",
    "TH2B",
    "TH3",
    "TH4A",
    "TH4B",
    "TH12",
    "MAIN",
    "KERCORE",
    "ZHANG",
)


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one checker on one graph.

    holds is None exactly when applicable is False; witness carries the
    computed quantities demonstrating the conclusion (rendered canonically),
    counterexample the offending objects when holds is False.
    """

    theorem_id: str
    graph_id: str
    applicable: bool
    holds: bool | None
    witness: tuple[tuple[str, object], ...] = ()
    counterexample: tuple[tuple[str, object], ...] = ()

    def witness_dict(self) -> dict[str, object]:
        return dict(self.witness)

    def counterexample_dict(self) -> dict[str, object]:
        return dict(self.counterexample)


def _fmt(vs: VertexSet) -> str:
    return "{" + ", ".join(vs.labels()) + "}"


def _fmt_pairs(pairs: Iterable[tuple[str, str]]) -> str:
    return "[" + ", ".join(f"{a}-{b}" for a, b in pairs) + "]"


def _alpha(g: Graph, budgets: Budgets) -> int:
    return _alpha_active(g.adj, (1 << g.n) - 1, budgets)


def _is_unicyclic(g: Graph) -> bool:
    shape = classify_shape(g)
    return shape.connected and shape.kind == "unicyclic"


def _alpha_mu(g: Graph, budgets: Budgets) -> tuple[int, int]:
    return _alpha(g, budgets), mu(g, budgets)


def _report(tid, gid, applicable, holds=None, witness=(), counterexample=()):
    return TheoremReport(
        theorem_id=tid,
        graph_id=gid,
        applicable=applicable,
        holds=holds,
        witness=tuple(witness),
        counterexample=tuple(counterexample),
    )


def _saturates(m, sources: VertexSet) -> bool:
    return sources.mask & ~m.vertices().mask == 0


# -- individual checkers ------------------------------------------------------


def _check_lem1a(g: Graph, gid: str, budgets: Budgets) -> TheoremReport:
    """Unicyclic non-KE: core(G) and the closed neighbourhood of the cycle
    are disjoint."""
    if not _is_unicyclic(g):
        return _report("LEM1A", gid, False)
    a, m = _alpha_mu(g, budgets)
    if a + m == g.n:
        return _report("LEM1A", gid, False, witness=[("alpha_plus_mu", a + m)])
    cyc = g.set_of(find_cycle(g))
    closed = g.neighborhood(cyc, closed=True)
    c = core(g, budgets)
    overlap = c & closed
    wit = [("core", _fmt(c)), ("closed_cycle_neighborhood", _fmt(closed))]
    if overlap:
        return _report(
            "LEM1A", gid, True, False, wit, [("overlap", _fmt(overlap))]
        )
    return _report("LEM1A", gid, True, True, wit)


def _check_lem1b(g: Graph, gid: str, budgets: Budgets) -> TheoremReport:
    """Unicyclic non-KE: some matching carries N(core(G)) into core(G)."""
    if not _is_unicyclic(g):
        return _report("LEM1B", gid, False)
    a, m = _alpha_mu(g, budgets)
    if a + m == g.n:
        return _report("LEM1B", gid, False, witness=[("alpha_plus_mu", a + m)])
    c = core(g, budgets)
    nc = g.neighborhood(c)
    match = saturating_matching(g, nc, c)
    wit = [("core", _fmt(c)), ("n_core", _fmt(nc))]
    if match is None:
        return _report("LEM1B", gid, True, False, wit, [("unsaturated_from", _fmt(nc))])
    assert _saturates(match, nc)
    wit.append(("matching", _fmt_pairs(match.edge_labels())))
    return _report("LEM1B", gid, True, True, wit)


def _check_lem2(g: Graph, gid: str, budgets: Budgets) -> TheoremReport:
    """Unicyclic: n-1 <= alpha+mu <= n, with equality at n-1 exactly when
    every cycle edge is alpha-critical (checked in both directions)."""
    if not _is_unicyclic(g):
        return _report("LEM2", gid, False)
    a, m = _alpha_mu(g, budgets)
    total = a + m
    cycle = find_cycle(g)
    non_critical = []
    for k in range(len(cycle)):
        u, v = cycle[k], cycle[(k + 1) % len(cycle)]
        if not is_alpha_critical_edge(g, u, v, budgets):
            non_critical.append((u, v) if u <= v else (v, u))
    non_critical.sort()
    bounds_ok = g.n - 1 <= total <= g.n
    iff_ok = (total == g.n - 1) == (not non_critical)
    wit = [
        ("alpha", a),
        ("mu", m),
        ("alpha_plus_mu", total),
        ("non_critical_cycle_edges", _fmt_pairs(non_critical)),
    ]
    if bounds_ok and iff_ok:
        return _report("LEM2", gid, True, True, wit)
    return _report(
        "LEM2", gid, True, False, wit,
        [("bounds_ok", bounds_ok), ("iff_ok", iff_ok)],
    )


def _check_th11(g: Graph, gid: str, budgets: Budgets) -> TheoremReport:
    """Every graph: for each maximum independent set S there is a matching
    from S - core(G) into corona(G) - S."""
    family = enumerate_mis(g, budgets)
    inter = family[0]
    union = family[0]
    for s in family[1:]:
        inter = inter & s
        union = union | s
    checked = 0
    for s in family:
        sources = s - inter
        targets = union - s
        match = saturating_matching(g, sources, targets)
        if match is None:
            return _report(
                "TH11", gid, True, False,
                [("mis_count", len(family))],
                [("S", _fmt(s)), ("sources", _fmt(sources)), ("targets", _fmt(targets))],
            )
        assert _saturates(match, sources)
        checked += 1
    return _report(
        "TH11", gid, True, True,
        [("mis_count", len(family)), ("matchings_found", checked)],
    )


def _check_th1(g: Graph, gid: str, budgets: Budgets) -> TheoremReport:
    """KE graphs: every maximum matching matches N(core(G)) into core(G)."""
    a, m = _alpha_mu(g, budgets)
    if a + m != g.n:
        return _report("TH1", gid, False, witness=[("alpha_plus_mu", a + m)])
    c = core(g, budgets)
    nc = g.neighborhood(c)
    matchings = enumerate_maximum_matchings(g, budgets)
    for match in matchings:
        for v in nc.labels():
            partner = match.matched_to(v)
            if partner is None or partner not in c:
                return _report(
                    "TH1", gid, True, False,
                    [("core", _fmt(c)), ("n_core", _fmt(nc))],
                    [
                        ("matching", _fmt_pairs(match.edge_labels())),
                        ("vertex", v),
                        ("matched_to", "-" if partner is None else partner),
                    ],
                )
    return _report(
        "TH1", gid, True, True,
        [
            ("core", _fmt(c)),
            ("n_core", _fmt(nc)),
            ("maximum_matchings", len(matchings)),
        ],
    )


def _check_th2a(g: Graph, gid: str, budgets: Budgets) -> TheoremReport:
    """Every graph: ker(G) is a critical independent set contained in
    core(G). ker is recomputed by the subset sweep here."""
    rep = critical_difference_bruteforce(g, budgets)
    k = rep.ker
    c = core(g, budgets)
    independent = is_independent(g, k)
    critical = diff(g, k) == rep.id_c
    contained = k <= c
    wit = [
        ("ker", _fmt(k)),
        ("core", _fmt(c)),
        ("d_ker", diff(g, k)),
        ("id_c", rep.id_c),
    ]
    if independent and critical and contained:
        return _report("TH2A", gid, True, True, wit)
    return _report(
        "TH2A", gid, True, False, wit,
        [("independent", independent), ("critical", critical), ("contained", contained)],
    )


def _check_th2b(g: Graph, gid: str, budgets: Budgets) -> TheoremReport:
    """Bipartite graphs: ker(G) = core(G), both recomputed independently."""
    if not classify_shape(g).bipartite:
        return _report("TH2B", gid, False)
    k = critical_difference_bruteforce(g, budgets).ker
    c = core(g, budgets)
    wit = [("ker", _fmt(k)), ("core", _fmt(c))]
    if k == c:
        return _report("TH2B", gid, True, True, wit)
    return _report("TH2B", gid, True, False, wit, [("difference", _fmt((k | c) - (k & c)))])


def _check_th3(g: Graph, gid: str, budgets: Budgets) -> TheoremReport:
    """Unicyclic non-KE: corona(G) and N(core(G)) cover V(G), and corona is
    the cycle plus the pendant-tree coronas."""
    if not _is_unicyclic(g):
        return _report("TH3", gid, False)
    a, m = _alpha_mu(g, budgets)
    if a + m == g.n:
        return _report("TH3", gid, False, witness=[("alpha_plus_mu", a + m)])
    c = core(g, budgets)
    cor = corona(g, budgets)
    covered = cor | g.neighborhood(c)
    dec = decompose(g)
    assembled = dec.cycle_set.mask
    for pt in dec.pendant_trees:
        for lab in corona(pt.tree, budgets).labels():
            assembled |= 1 << g.index_of(lab)
    assembled_set = VertexSet(g, assembled)
    eq_cover = covered == g.full_set()
    eq_parts = assembled_set == cor
    wit = [
        ("corona", _fmt(cor)),
        ("n_core", _fmt(g.neighborhood(c))),
        ("cycle_plus_pendant_coronas", _fmt(assembled_set)),
    ]
    if eq_cover and eq_parts:
        return _report("TH3", gid, True, True, wit)
    return _report(
        "TH3", gid, True, False, wit,
        [("cover_equals_v", eq_cover), ("corona_decomposes", eq_parts)],
    )


def _check_th4a(g: Graph, gid: str, budgets: Budgets) -> TheoremReport:
    """KE graphs: N(core(G)) = V(G) - corona(G)."""
    a, m = _alpha_mu(g, budgets)
    if a + m != g.n:
        return _report("TH4A", gid, False, witness=[("alpha_plus_mu", a + m)])
    c = core(g, budgets)
    nc = g.neighborhood(c)
    rest = corona(g, budgets).complement()
    wit = [("n_core", _fmt(nc)), ("v_minus_corona", _fmt(rest))]
    if nc == rest:
        return _report("TH4A", gid, True, True, wit)
    return _report("TH4A", gid, True, False, wit, [("difference", _fmt((nc | rest) - (nc & rest)))])


def _check_th4b(g: Graph, gid: str, budgets: Budgets) -> TheoremReport:
    """KE graphs: |corona(G)| + |core(G)| = 2 alpha(G)."""
    a, m = _alpha_mu(g, budgets)
    if a + m != g.n:
        return _report("TH4B", gid, False, witness=[("alpha_plus_mu", a + m)])
    c = core(g, budgets)
    cor = corona(g, budgets)
    total = len(cor) + len(c)
    wit = [("core_size", len(c)), ("corona_size", len(cor)), ("sum", total), ("two_alpha", 2 * a)]
    if total == 2 * a:
        return _report("TH4B", gid, True, True, wit)
    return _report("TH4B", gid, True, False, wit, [("sum", total), ("two_alpha", 2 * a)])


def _check_th12(g: Graph, gid: str, budgets: Budgets) -> TheoremReport:
    """Unicyclic non-KE: pendant maximum independent sets extend to maximum
    independent sets of G, restrict back onto the pendant trees, and core(G)
    is the union of the pendant cores."""
    if not _is_unicyclic(g):
        return _report("TH12", gid, False)
    a, m = _alpha_mu(g, budgets)
    if a + m == g.n:
        return _report("TH12", gid, False, witness=[("alpha_plus_mu", a + m)])
    family = enumerate_mis(g, budgets)
    fam_labels = [set(s.labels()) for s in family]
    dec = decompose(g)
    extends = True
    restricts = True
    bad = []
    for pt in dec.pendant_trees:
        tree_family = [set(w.labels()) for w in enumerate_mis(pt.tree, budgets)]
        for w in tree_family:
            if not any(w <= s for s in fam_labels):
                extends = False
                bad.append(("unextendable", f"{pt.root}:{sorted(w)}"))
        tv = set(pt.vertices.labels())
        for s in fam_labels:
            if s & tv not in tree_family:
                restricts = False
                bad.append(("bad_restriction", f"{pt.root}:{sorted(s & tv)}"))
    inter = family[0]
    for s in family[1:]:
        inter = inter & s
    union_core = 0
    for pt in dec.pendant_trees:
        for lab in core(pt.tree, budgets).labels():
            union_core |= 1 << g.index_of(lab)
    cores_match = VertexSet(g, union_core) == inter
    if not cores_match:
        bad.append(("core_union", _fmt(VertexSet(g, union_core))))
    wit = [
        ("core", _fmt(inter)),
        ("pendant_core_union", _fmt(VertexSet(g, union_core))),
        ("pendant_trees", len(dec.pendant_trees)),
        ("mis_count", len(family)),
    ]
    if extends and restricts and cores_match:
        return _report("TH12", gid, True, True, wit)
    return _report("TH12", gid, True, False, wit, bad)


def _check_main(g: Graph, gid: str, budgets: Budgets) -> TheoremReport:
    """Unicyclic: 2 alpha <= |corona| + |core| <= 2 alpha + 1, and the sum
    hits 2 alpha + 1 exactly for the non-KE case. The sum is reported even
    when the graph is not unicyclic, since the inapplicable value is itself
    informative."""
    a, m = _alpha_mu(g, budgets)
    c = core(g, budgets)
    cor = corona(g, budgets)
    total = len(cor) + len(c)
    defect = total - 2 * a
    wit = [
        ("sum", total),
        ("two_alpha", 2 * a),
        ("sum_defect", defect),
        ("alpha_plus_mu", a + m),
    ]
    if not _is_unicyclic(g):
        return _report("MAIN", gid, False, witness=wit)
    bounds_ok = 0 <= defect <= 1
    iff_ok = (a + m == g.n - 1) == (defect == 1)
    if bounds_ok and iff_ok:
        return _report("MAIN", gid, True, True, wit)
    return _report(
        "MAIN", gid, True, False, wit,
        [("bounds_ok", bounds_ok), ("iff_ok", iff_ok)],
    )


def _check_kercore(g: Graph, gid: str, budgets: Budgets) -> TheoremReport:
    """Unicyclic non-KE: ker(G) = union of pendant kers = core(G), with every
    ker recomputed by the subset sweep."""
    if not _is_unicyclic(g):
        return _report("KERCORE", gid, False)
    a, m = _alpha_mu(g, budgets)
    if a + m == g.n:
        return _report("KERCORE", gid, False, witness=[("alpha_plus_mu", a + m)])
    k = critical_difference_bruteforce(g, budgets).ker
    c = core(g, budgets)
    union = 0
    for pt in decompose(g).pendant_trees:
        for lab in critical_difference_bruteforce(pt.tree, budgets).ker.labels():
            union |= 1 << g.index_of(lab)
    union_set = VertexSet(g, union)
    wit = [("ker", _fmt(k)), ("pendant_ker_union", _fmt(union_set)), ("core", _fmt(c))]
    if k == union_set and k == c:
        return _report("KERCORE", gid, True, True, wit)
    return _report(
        "KERCORE", gid, True, False, wit,
        [("ker_eq_union", k == union_set), ("ker_eq_core", k == c)],
    )


def _check_zhang(g: Graph, gid: str, budgets: Budgets) -> TheoremReport:
    """Every graph: d_c = id_c."""
    rep = critical_difference_bruteforce(g, budgets)
    wit = [("d_c", rep.d_c), ("id_c", rep.id_c), ("witness_set", _fmt(rep.witness_set))]
    if rep.d_c == rep.id_c:
        return _report("ZHANG", gid, True, True, wit)
    return _report("ZHANG", gid, True, False, wit, [("d_c", rep.d_c), ("id_c", rep.id_c)])


_CHECKERS: dict[str, Callable[[Graph, str, Budgets], TheoremReport]] = {
    "LEM1A": _check_lem1a,
    "LEM1B": _check_lem1b,
    "LEM2": _check_lem2,
    "TH11": _check_th11,
    "TH1": _check_th1,
    "TH2A": _check_th2a,
    "TH2B": _check_th2b,
    "TH3": _check_th3,
    "TH4A": _check_th4a,
    "TH4B": _check_th4b,
    "TH12": _check_th12,
    "MAIN": _check_main,
    "KERCORE": _check_kercore,
    "ZHANG": _check_zhang,
}


def check(
    theorem_id: str,
    g: Graph,
    graph_id: str = "?",
    budgets: Budgets = DEFAULT_BUDGETS,
) -> TheoremReport:
    """Run one catalog checker. Raises DomainError for an unknown id and
    BudgetExceededError when the graph exceeds the invoked sub-operations."""
    checker = _CHECKERS.get(theorem_id)
    if checker is None:
        raise DomainError(
            f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREM_IDS)}"
        )
    return checker(g, graph_id, budgets)


# -- sweeps --------------------------------------------------------------------


@dataclass(frozen=True)
class SweepSummary:
    family: str
    theorem_ids: tuple[str, ...]
    graphs_tested: int
    checks_run: int
    checks_applicable: int
    failures: tuple[tuple[str, TheoremReport], ...]
    truncated: bool
    truncation_reason: str | None
    elapsed: float

    def all_hold(self) -> bool:
        return not self.failures


def _check_one_serialized(args: tuple[str, str, tuple[str, ...], Budgets]):
    gid, text, theorem_ids, budgets = args
    g = parse_edge_list(text)
    return [check(tid, g, gid, budgets) for tid in theorem_ids]


def sweep(
    items: Iterable[tuple[str, Graph]],
    theorem_ids: Iterable[str],
    budgets: Budgets = DEFAULT_BUDGETS,
    fail_fast: bool = False,
    workers: int = 1,
    family: str = "custom",
) -> SweepSummary:
    """Run the chosen checkers over a (graph_id, Graph) stream.

    Deterministic for a fixed stream regardless of worker count: work is
    submitted and merged in stream order, and failures are finally sorted by
    (graph serialization, theorem id).
    """
    tids = tuple(theorem_ids)
    for tid in tids:
        if tid not in _CHECKERS:
            raise DomainError(f"unknown theorem id {tid!r}")
    start = time.perf_counter()
    graphs_tested = 0
    checks_run = 0
    checks_applicable = 0
    failures: list[tuple[str, TheoremReport]] = []
    truncated = False
    reason = None

    def absorb(text: str, reports: list[TheoremReport]) -> bool:
        nonlocal graphs_tested, checks_run, checks_applicable
        graphs_tested += 1
        for rep in reports:
            checks_run += 1
            if rep.applicable:
                checks_applicable += 1
                if rep.holds is False:
                    failures.append((text, rep))
                    if fail_fast:
                        return True
        return False

    if workers <= 1:
        for gid, g in items:
            if absorb(serialize(g), [check(tid, g, gid, budgets) for tid in tids]):
                truncated = True
                reason = "fail-fast"
                break
    else:
        payload = [(gid, serialize(g), tids, budgets) for gid, g in items]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for (gid, text, _, _), reports in zip(
                payload, pool.map(_check_one_serialized, payload, chunksize=8)
            ):
                if absorb(text, reports):
                    truncated = True
                    reason = "fail-fast"
                    break
    failures.sort(key=lambda fr: (fr[0], fr[1].theorem_id))
    return SweepSummary(
        family=family,
        theorem_ids=tids,
        graphs_tested=graphs_tested,
        checks_run=checks_run,
        checks_applicable=checks_applicable,
        failures=tuple(failures),
        truncated=truncated,
        truncation_reason=reason,
        elapsed=time.perf_counter() - start,
    )


# -- open-problem searches ------------------------------------------------------


@dataclass(frozen=True)
class Problem1Report:
    """Non-bipartite KE unicyclic graphs up to max_n, split by whether
    core = ker."""

    max_n: int
    examined: int
    equal: tuple[tuple[str, str], ...]
    different: tuple[tuple[str, str], ...]


def search_problem1(max_n: int, budgets: Budgets = DEFAULT_BUDGETS) -> Problem1Report:
    from .corpus import enumerate_unicyclic

    equal = []
    different = []
    examined = 0
    for n in range(3, max_n + 1):
        for i, g in enumerate(enumerate_unicyclic(n, budgets=budgets)):
            if classify_shape(g).bipartite:
                continue
            a, m = _alpha_mu(g, budgets)
            if a + m != g.n:
                continue
            examined += 1
            gid = f"uni:n{n}:{i}"
            k = critical_difference_bruteforce(g, budgets).ker
            c = core(g, budgets)
            (equal if k == c else different).append((gid, serialize(g)))
    return Problem1Report(
        max_n=max_n,
        examined=examined,
        equal=tuple(equal),
        different=tuple(different),
    )


def classify_sum_defect(g: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """|corona(G)| + |core(G)| - 2 alpha(G); 0 or 1 on connected unicyclic
    graphs, unconstrained in general."""
    a = _alpha(g, budgets)
    return len(corona(g, budgets)) + len(core(g, budgets)) - 2 * a


def sum_defect_histogram(
    items: Iterable[tuple[str, Graph]],
    budgets: Budgets = DEFAULT_BUDGETS,
    exemplars_per_bucket: int = 3,
) -> tuple[dict[int, int], dict[int, tuple[tuple[str, str], ...]]]:
    """Counts per defect value plus the first few exemplars of each bucket."""
    counts: dict[int, int] = {}
    examples: dict[int, list[tuple[str, str]]] = {}
    for gid, g in items:
        d = classify_sum_defect(g, budgets)
        counts[d] = counts.get(d, 0) + 1
        bucket = examples.setdefault(d, [])
        if len(bucket) < exemplars_per_bucket:
            bucket.append((gid, serialize(g)))
    return counts, {d: tuple(v) for d, v in examples.items()}
