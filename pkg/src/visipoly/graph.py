"""Immutable bitset-backed simple graphs and unweighted shortest-path machinery.

Vertices are 0..n-1 and adjacency is one integer bitmask per vertex, so
membership tests and neighbourhood unions are single integer operations for
graphs up to machine-word size. Every operation is a pure function over
immutable values; editors such as ``complement`` and ``delete_edge`` return
new graphs, which makes everything safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

from .errors import FormatError, ParameterError


class _Unreachable:
    """Sentinel distance for vertex pairs with no connecting path.

    Deliberately not an integer: ordering comparisons against it raise, so a
    disconnected input can never silently satisfy a distance threshold.
    """

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"


UNREACHABLE = _Unreachable()

Distance = Union[int, _Unreachable]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1, immutable after construction.

    ``adj[u]`` is the neighbourhood of u as a bitmask. The adjacency relation
    is validated to be symmetric and irreflexive; ``edge_count`` is derived.
    """

    n: int
    adj: tuple[int, ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ParameterError("vertex count must be nonnegative")
        if len(self.adj) != self.n:
            raise ParameterError(
                f"expected {self.n} adjacency masks, got {len(self.adj)}"
            )
        full = (1 << self.n) - 1
        degree_total = 0
        for u, mask in enumerate(self.adj):
            if mask & ~full:
                raise ParameterError(f"adjacency mask of vertex {u} is out of range")
            if (mask >> u) & 1:
                raise ParameterError(f"self-loop at vertex {u}")
            degree_total += mask.bit_count()
            for v in iter_bits(mask):
                if not (self.adj[v] >> u) & 1:
                    raise ParameterError(f"adjacency is not symmetric for ({u}, {v})")
        object.__setattr__(self, "edge_count", degree_total // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an iterable of (u, v) pairs."""
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, tuple(masks))

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


class DistanceMatrix:
    """All-pairs unweighted shortest-path distances.

    Rows are stored internally with -1 marking unreachable pairs; the public
    accessor translates that to the UNREACHABLE sentinel.
    """

    __slots__ = ("n", "_rows")

    def __init__(self, rows: Sequence[Sequence[int]]):
        self.n = len(rows)
        self._rows = tuple(tuple(row) for row in rows)

    def dist(self, u: int, v: int) -> Distance:
        d = self._rows[u][v]
        return UNREACHABLE if d < 0 else d

    def row(self, u: int) -> tuple[int, ...]:
        """Raw distance row for vertex u, with -1 for unreachable."""
        return self._rows[u]

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n})"


def bfs_layer_masks(adj: Sequence[int], source: int) -> list[int]:
    """Breadth-first layers from ``source`` as bitmasks, index = distance."""
    seen = 1 << source
    frontier = seen
    layers = [frontier]
    while frontier:
        reach = 0
        m = frontier
        while m:
            low = m & -m
            reach |= adj[low.bit_length() - 1]
            m ^= low
        frontier = reach & ~seen
        if frontier:
            layers.append(frontier)
            seen |= frontier
    return layers


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Exact distances by one BFS per source; -1 rows mark unreachable pairs."""
    rows = []
    for src in range(g.n):
        row = [-1] * g.n
        for d, layer in enumerate(bfs_layer_masks(g.adj, src)):
            for v in iter_bits(layer):
                row[v] = d
        rows.append(row)
    return DistanceMatrix(rows)


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        mask = 0
        for layer in bfs_layer_masks(g.adj, v):
            mask |= layer
        seen |= mask
        out.append(tuple(iter_bits(mask)))
    return out


def induced_diameter(g: Graph, d: DistanceMatrix, x: Iterable[int]) -> Distance:
    """Maximum pairwise distance within ``x``, measured in the whole graph.

    Returns UNREACHABLE as soon as ``x`` spans two components.
    """
    members = sorted(set(x))
    if not members:
        raise ParameterError("induced diameter of the empty set is undefined")
    for v in members:
        if not 0 <= v < g.n:
            raise ParameterError(f"vertex {v} out of range for order {g.n}")
    best = 0
    for i, u in enumerate(members):
        row = d.row(u)
        for v in members[i + 1:]:
            duv = row[v]
            if duv < 0:
                return UNREACHABLE
            if duv > best:
                best = duv
    return best


# Constructors for the analysed graph families. Labelings are fixed so that
# golden tests are deterministic.

def empty_graph(n: int) -> Graph:
    if n < 0:
        raise ParameterError("order must be nonnegative")
    return Graph(n, (0,) * n)


def path_graph(n: int) -> Graph:
    """P_n with vertices 0..n-1 in path order."""
    if n < 1:
        raise ParameterError("a path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """C_n: the path 0..n-1 closed by the edge {0, n-1}."""
    if n < 3:
        raise ParameterError("a cycle needs at least three vertices")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges.append((0, n - 1))
    return Graph.from_edges(n, edges)


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ParameterError("order must be nonnegative")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << u) for u in range(n)))


def star_graph(n: int) -> Graph:
    """Star with n leaves 0..n-1 and centre at index n (order n+1)."""
    if n < 0:
        raise ParameterError("leaf count must be nonnegative")
    return Graph.from_edges(n + 1, [(i, n) for i in range(n)])


def complete_bipartite_graph(m: int, n: int) -> Graph:
    """K_{m,n} with parts {0..m-1} and {m..m+n-1}."""
    if m < 1 or n < 1:
        raise ParameterError("both parts need at least one vertex")
    return Graph.from_edges(m + n, [(a, m + b) for a in range(m) for b in range(n)])


def paw_graph() -> Graph:
    """Triangle 0-1-2 with the pendant vertex 3 attached to 2."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


def diamond_graph() -> Graph:
    """K_4 minus one edge: the 4-cycle 0-1-2-3 plus the chord {1, 3}."""
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)])


def join(g: Graph, h: Graph) -> Graph:
    """Join of two graphs: g's vertices first, then h's, plus all cross edges."""
    n = g.n + h.n
    h_block = ((1 << h.n) - 1) << g.n
    g_block = (1 << g.n) - 1
    masks = [g.adj[u] | h_block for u in range(g.n)]
    masks += [(h.adj[v] << g.n) | g_block for v in range(h.n)]
    return Graph(n, tuple(masks))


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    """Concatenate vertex ranges with no cross edges."""
    masks: list[int] = []
    offset = 0
    for g in gs:
        masks.extend(mask << offset for mask in g.adj)
        offset += g.n
    return Graph(offset, tuple(masks))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~(mask | (1 << u)) for u, mask in enumerate(g.adj)))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ParameterError(f"vertex pair ({u}, {v}) out of range for order {g.n}")
    if not g.adjacent(u, v):
        raise ParameterError(f"({u}, {v}) is not an edge")
    masks = list(g.adj)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph(g.n, tuple(masks))


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: header line "n m", then m lines "u v".

    Blank lines and lines starting with "#" are ignored. 0-based endpoints.
    """
    header = None
    edges = []
    header_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"expected two integers, got {raw!r}", line=lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"non-integer field in {raw!r}", line=lineno) from None
        if header is None:
            header = (a, b)
            header_line = lineno
            continue
        edges.append((a, b, lineno))
    if header is None:
        raise FormatError("missing header line \"n m\"")
    n, m = header
    if n < 0 or m < 0:
        raise FormatError("header counts must be nonnegative", line=header_line)
    if len(edges) != m:
        raise FormatError(f"header announced {m} edges, found {len(edges)}")
    try:
        return Graph.from_edges(n, [(a, b) for a, b, _ in edges])
    except ParameterError as exc:
        raise FormatError(str(exc)) from exc
