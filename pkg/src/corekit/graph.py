"""Immutable simple graphs with label-based vertex sets.

Vertices are whitespace-free string labels mapped to dense indices in order of
first appearance. Adjacency is kept as per-vertex bitmasks, which is what the
exponential routines in the rest of the package operate on. All graph values
and VertexSet values are immutable; derived graphs (induced subgraphs,
deletions) are new objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DomainError, OwnershipError, ParseError

__all__ = [
    "Graph",
    "VertexSet",
    "ShapeClass",
    "parse_edge_list",
    "serialize",
]

# A label containing whitespace or '#' cannot survive the text format, and a
# vertex literally named 'node' would collide with the isolated-vertex keyword.
_FORBIDDEN_LABEL = "node"


def _check_label(label: str) -> str:
    if not label or label != label.strip() or any(c.isspace() for c in label):
        raise DomainError(f"invalid vertex label {label!r}: labels are non-empty whitespace-free tokens")
    if "#" in label:
        raise DomainError(f"invalid vertex label {label!r}: '#' starts a comment in the edge-list format")
    if label == _FORBIDDEN_LABEL:
        raise DomainError(f"invalid vertex label {label!r}: reserved keyword in the edge-list format")
    return label


class Graph:
    """An immutable simple undirected graph.

    Construct via from_edges() or parse_edge_list(); direct construction is
    internal. Equality is object identity: vertex sets are owned by one graph
    value and refuse to mix with sets of any other, even a structural copy.
    """

    __slots__ = ("labels", "adj", "m", "_index")

    def __init__(self, labels: tuple[str, ...], adj: tuple[int, ...], m: int):
        self.labels = labels
        self.adj = adj  # adj[i] = bitmask of neighbours of vertex i
        self.m = m
        self._index = {lab: i for i, lab in enumerate(labels)}

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[str, str]] = (),
        isolated: Iterable[str] = (),
    ) -> "Graph":
        """Build a graph from label pairs plus explicitly isolated vertices.

        Indices are assigned by first appearance (isolated list first, then
        edge endpoints left to right). Self-loops and duplicate edges are
        rejected, as are repeated isolated declarations.
        """
        labels: list[str] = []
        index: dict[str, int] = {}

        def intern(lab: str) -> int:
            i = index.get(lab)
            if i is None:
                _check_label(lab)
                i = len(labels)
                index[lab] = i
                labels.append(lab)
            return i

        for lab in isolated:
            if lab in index:
                raise DomainError(f"vertex {lab!r} declared isolated more than once")
            intern(lab)
        adj: list[int] = [0] * len(labels)
        m = 0
        for u, v in edges:
            iu, iv = intern(u), intern(v)
            while len(adj) < len(labels):
                adj.append(0)
            if iu == iv:
                raise DomainError(f"self-loop at vertex {u!r}")
            if adj[iu] >> iv & 1:
                raise DomainError(f"duplicate edge {u!r} {v!r}")
            adj[iu] |= 1 << iv
            adj[iv] |= 1 << iu
            m += 1
        return cls(tuple(labels), tuple(adj), m)

    # -- basic accessors ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise DomainError(f"no vertex labelled {label!r}") from None

    def has_edge(self, u: str, v: str) -> bool:
        return bool(self.adj[self.index_of(u)] >> self.index_of(v) & 1)

    def degree(self, label: str) -> int:
        return self.adj[self.index_of(label)].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Index pairs (i, j) with i < j, in index order."""
        for i in range(self.n):
            rest = self.adj[i] >> (i + 1) << (i + 1)
            while rest:
                b = rest & -rest
                yield i, b.bit_length() - 1
                rest ^= b

    def edge_labels(self) -> list[tuple[str, str]]:
        """All edges as sorted label pairs, list sorted lexicographically."""
        out = []
        for i, j in self.edges():
            a, b = self.labels[i], self.labels[j]
            out.append((a, b) if a <= b else (b, a))
        out.sort()
        return out

    # -- vertex sets --------------------------------------------------------

    def set_of(self, labels: Iterable[str]) -> "VertexSet":
        mask = 0
        for lab in labels:
            mask |= 1 << self.index_of(lab)
        return VertexSet(self, mask)

    def vertex(self, label: str) -> "VertexSet":
        return VertexSet(self, 1 << self.index_of(label))

    def empty_set(self) -> "VertexSet":
        return VertexSet(self, 0)

    def full_set(self) -> "VertexSet":
        return VertexSet(self, (1 << self.n) - 1)

    def set_from_mask(self, mask: int) -> "VertexSet":
        if mask >> self.n:
            raise DomainError("mask has bits outside the vertex range")
        return VertexSet(self, mask)

    # -- structure ----------------------------------------------------------

    def neighborhood(self, vs: "VertexSet", closed: bool = False) -> "VertexSet":
        """N(A), or N[A] when closed. A may contain adjacent vertices, in
        which case N(A) intersects A."""
        self._own(vs)
        out = 0
        rest = vs.mask
        while rest:
            b = rest & -rest
            out |= self.adj[b.bit_length() - 1]
            rest ^= b
        if closed:
            out |= vs.mask
        return VertexSet(self, out)

    def induced_subgraph(self, vs: "VertexSet") -> "Graph":
        """The subgraph induced on vs; labels kept, index order preserved."""
        self._own(vs)
        keep = [i for i in range(self.n) if vs.mask >> i & 1]
        labels = tuple(self.labels[i] for i in keep)
        pos = {old: new for new, old in enumerate(keep)}
        adj = []
        m = 0
        for old in keep:
            row = 0
            rest = self.adj[old] & vs.mask
            while rest:
                b = rest & -rest
                row |= 1 << pos[b.bit_length() - 1]
                rest ^= b
            adj.append(row)
            m += row.bit_count()
        return Graph(labels, tuple(adj), m // 2)

    def delete_vertices(self, vs: "VertexSet") -> "Graph":
        self._own(vs)
        return self.induced_subgraph(VertexSet(self, ((1 << self.n) - 1) & ~vs.mask))

    def delete_edge(self, u: str, v: str) -> "Graph":
        iu, iv = self.index_of(u), self.index_of(v)
        if not self.adj[iu] >> iv & 1:
            raise DomainError(f"no edge {u!r} {v!r} to delete")
        adj = list(self.adj)
        adj[iu] &= ~(1 << iv)
        adj[iv] &= ~(1 << iu)
        return Graph(self.labels, tuple(adj), self.m - 1)

    def components(self) -> list[int]:
        """Vertex masks of connected components, ordered by smallest index."""
        seen = 0
        out = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = 1 << start
            frontier = 1 << start
            while frontier:
                nxt = 0
                rest = frontier
                while rest:
                    b = rest & -rest
                    nxt |= self.adj[b.bit_length() - 1]
                    rest ^= b
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(comp)
        return out

    def _own(self, vs: "VertexSet") -> None:
        if vs.graph is not self:
            raise OwnershipError("vertex set belongs to a different graph")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class VertexSet:
    """An immutable subset of one graph's vertices.

    Set algebra is only defined between sets of the same graph object;
    anything else raises OwnershipError rather than silently reusing indices.
    """

    __slots__ = ("graph", "mask")

    def __init__(self, graph: Graph, mask: int):
        self.graph = graph
        self.mask = mask

    def _peer(self, other: "VertexSet") -> int:
        if not isinstance(other, VertexSet):
            raise TypeError(f"expected VertexSet, got {type(other).__name__}")
        if other.graph is not self.graph:
            raise OwnershipError("vertex sets belong to different graphs")
        return other.mask

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.graph, self.mask | self._peer(other))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.graph, self.mask & self._peer(other))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.graph, self.mask & ~self._peer(other))

    def complement(self) -> "VertexSet":
        return VertexSet(self.graph, ((1 << self.graph.n) - 1) & ~self.mask)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.mask == self._peer(other)

    def __le__(self, other: "VertexSet") -> bool:
        return self.mask & ~self._peer(other) == 0

    def __hash__(self) -> int:
        return hash((id(self.graph), self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, label: str) -> bool:
        return bool(self.mask >> self.graph.index_of(label) & 1)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels())

    def indices(self) -> tuple[int, ...]:
        out = []
        rest = self.mask
        while rest:
            b = rest & -rest
            out.append(b.bit_length() - 1)
            rest ^= b
        return tuple(out)

    def labels(self) -> tuple[str, ...]:
        """Member labels, sorted; this is the canonical rendering order."""
        return tuple(sorted(self.graph.labels[i] for i in self.indices()))

    def __repr__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


@dataclass(frozen=True)
class ShapeClass:
    """Structural classification used for algorithm dispatch.

    kind is one of 'tree', 'forest', 'unicyclic', 'other'; tree and forest are
    mutually exclusive (a tree is connected). The 0-vertex graph classifies as
    a connected bipartite forest by convention.
    """

    connected: bool
    kind: str
    bipartite: bool


def classify_shape(g: Graph) -> ShapeClass:
    comps = g.components()
    connected = len(comps) <= 1
    acyclic = g.m == g.n - len(comps)
    if g.n == 0:
        kind = "forest"
    elif acyclic:
        kind = "tree" if connected else "forest"
    elif connected and g.m == g.n:
        kind = "unicyclic"
    else:
        kind = "other"
    return ShapeClass(connected=connected, kind=kind, bipartite=_is_bipartite(g))


def _is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            rest = g.adj[v]
            while rest:
                b = rest & -rest
                u = b.bit_length() - 1
                rest ^= b
                if color[u] == -1:
                    color[u] = color[v] ^ 1
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


# -- text format ------------------------------------------------------------
#
# One item per line. '#' starts a comment running to end of line; blank lines
# are ignored. 'u v' declares an edge, 'node w' declares an isolated vertex.
# Parsing is strict: self-loops, repeated edges, repeated declarations,
# malformed lines and a resulting empty graph are all hard errors carrying the
# offending line number.


def parse_edge_list(text: str) -> Graph:
    labels: list[str] = []
    index: dict[str, int] = {}
    adj: list[int] = []
    m = 0
    lineno = 0

    def intern(lab: str) -> int:
        i = index.get(lab)
        if i is None:
            try:
                _check_label(lab)
            except DomainError as exc:
                raise ParseError(lineno, str(exc)) from None
            i = len(labels)
            index[lab] = i
            labels.append(lab)
            adj.append(0)
        return i

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected two tokens, got {len(tokens)}: {line!r}")
        a, b = tokens
        if a == "node":
            if b in index:
                raise ParseError(lineno, f"vertex {b!r} already declared")
            intern(b)
            continue
        iu, iv = intern(a), intern(b)
        if iu == iv:
            raise ParseError(lineno, f"self-loop at vertex {a!r}")
        if adj[iu] >> iv & 1:
            raise ParseError(lineno, f"duplicate edge {a!r} {b!r}")
        adj[iu] |= 1 << iv
        adj[iv] |= 1 << iu
        m += 1

    if not labels:
        raise ParseError(max(lineno, 1), "empty graph: no vertices declared")
    return Graph(tuple(labels), tuple(adj), m)


def serialize(g: Graph) -> str:
    """Canonical text form: isolated vertices first (sorted), then edges
    sorted by label pair. parse_edge_list(serialize(g)) reproduces g up to
    index order."""
    lines = [f"node {lab}" for lab in sorted(g.labels) if g.degree(lab) == 0]
    lines += [f"{u} {v}" for u, v in g.edge_labels()]
    return "\n".join(lines) + ("\n" if lines else "")
