"""Mutual-visibility membership testing and per-graph statistics.

A set X is a mutual-visibility set when every pair u, v in X has some
shortest u-v path whose internal vertices all avoid X. The membership test
runs one BFS per source u in X and then clears vertices in nondecreasing
distance order: a vertex is clear when some neighbour one layer closer to u
is clear and is not an element of X other than u itself. The pair (u, v) is
u-visible exactly when v ends up clear. Layers are bitmasks, so each layer
step is a handful of integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .errors import ParameterError
from .graph import DistanceMatrix, Graph, bfs_layer_masks, iter_bits


def _visible_from_source(adj: Sequence[int], layers: Sequence[int], u: int, x_mask: int) -> bool:
    """True when every member of x_mask is clear from source u.

    ``layers`` are the BFS layer masks from u. Propagation stops early once
    all members are cleared, a member's layer is reached without clearing it,
    or the clear frontier dies out.
    """
    ubit = 1 << u
    remaining = x_mask & ~ubit
    if not remaining:
        return True
    allowed = ~(x_mask & ~ubit)
    frontier = ubit
    for d in range(1, len(layers)):
        layer = layers[d]
        cleared = 0
        m = frontier
        while m:
            low = m & -m
            cleared |= adj[low.bit_length() - 1]
            m ^= low
        cleared &= layer
        targets = remaining & layer
        if targets & ~cleared:
            return False
        remaining &= ~targets
        if not remaining:
            return True
        if not cleared:
            return False
        frontier = cleared & allowed
    return not remaining


class VisibilityContext:
    """Per-graph BFS tables reused across many membership tests.

    Building the context costs one BFS per vertex; afterwards each test is a
    short pass over precomputed layer masks. Instances are immutable and safe
    to share between workers.
    """

    __slots__ = ("graph", "n", "adj", "layers")

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.n
        self.adj = graph.adj
        self.layers = tuple(
            tuple(bfs_layer_masks(graph.adj, src)) for src in range(graph.n)
        )

    def is_mv(self, x_mask: int, members: Sequence[int]) -> bool:
        """Membership test for the set with bitmask x_mask and vertex list members."""
        adj = self.adj
        layers = self.layers
        for u in members:
            if not _visible_from_source(adj, layers[u], u, x_mask):
                return False
        return True

    def distance_rows(self) -> list[list[int]]:
        """Distance rows derived from the cached layers; -1 marks unreachable."""
        rows = []
        for src in range(self.n):
            row = [-1] * self.n
            for d, layer in enumerate(self.layers[src]):
                for v in iter_bits(layer):
                    row[v] = d
            rows.append(row)
        return rows


def is_mutual_visibility_set(g: Graph, d: DistanceMatrix, x: Iterable[int]) -> bool:
    """True iff every pair in x is x-visible in g.

    Sets of size 0 or 1 are trivially mutual-visibility sets. Pairs lying in
    different components are never x-visible, so any such x fails.
    """
    members = sorted(set(x))
    for v in members:
        if not 0 <= v < g.n:
            raise ParameterError(f"vertex {v} out of range for order {g.n}")
    if len(members) <= 1:
        return True
    x_mask = 0
    for v in members:
        x_mask |= 1 << v
    for u in members:
        layers = _layers_from_row(d.row(u))
        if not _visible_from_source(g.adj, layers, u, x_mask):
            return False
    return True


def _layers_from_row(row: Sequence[int]) -> list[int]:
    ecc = max(row)
    layers = [0] * (ecc + 1)
    for v, dv in enumerate(row):
        if dv >= 0:
            layers[dv] |= 1 << v
    return layers


@dataclass(frozen=True, eq=True)
class VisStats:
    """Per-graph mutual-visibility statistics.

    ``theta`` maps (size, diameter) to the number of mutual-visibility sets
    of that size whose maximum pairwise distance (measured in the whole
    graph) is that diameter; zero entries are omitted. ``cliques`` maps k to
    the k-clique count for every k up to the requested bound.
    """

    mu: int
    r_mu: int
    theta: Mapping[Tuple[int, int], int]
    cliques: Mapping[int, int]

    def theta_count(self, k: int, d: int) -> int:
        return self.theta.get((k, d), 0)

    def to_json_dict(self) -> dict:
        return {
            "mu": self.mu,
            "r_mu": self.r_mu,
            "theta": [[k, d, c] for (k, d), c in sorted(self.theta.items())],
            "cliques": [[k, c] for k, c in sorted(self.cliques.items())],
        }


def compute_stats(g: Graph, k_max: int | None = None) -> VisStats:
    """Exact theta and clique tables for sizes up to k_max, plus mu and r_mu.

    mu and r_mu always come from the full enumeration, independent of k_max.
    One pruned enumeration pass classifies every mutual-visibility set by
    size and diameter, so the counts are consistent by construction.
    """
    from .enumeration import _walk_mv_sets

    n = g.n
    if k_max is None:
        k_max = n
    if not 0 <= k_max <= n:
        raise ParameterError(f"k_max {k_max} out of range for order {n}")
    ctx = VisibilityContext(g)
    size_counts = [0] * (n + 1)
    theta: Dict[Tuple[int, int], int] = {}
    for members, diam in _walk_mv_sets(ctx):
        k = len(members)
        size_counts[k] += 1
        if k <= k_max:
            key = (k, diam)
            theta[key] = theta.get(key, 0) + 1
    mu = 0
    for k in range(n, 0, -1):
        if size_counts[k]:
            mu = k
            break
    r_mu = size_counts[mu] if mu else 1
    cliques = dict(enumerate(_clique_size_counts(g.adj, g.n, k_max)))
    return VisStats(mu=mu, r_mu=r_mu, theta=theta, cliques=cliques)


def _clique_size_counts(adj: Sequence[int], n: int, k_max: int) -> list[int]:
    """Counts of k-cliques for k = 0..k_max; the empty set counts as the 0-clique."""
    counts = [0] * (k_max + 1)
    counts[0] = 1
    if k_max == 0:
        return counts

    def extend(candidates: int, size: int):
        m = candidates
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            counts[size + 1] += 1
            if size + 1 < k_max:
                # vertices above v adjacent to the whole current clique and v
                extend(m & adj[v], size + 1)

    extend((1 << n) - 1, 0)
    return counts


def clique_count(g: Graph, k: int) -> int:
    """Number of k-subsets inducing complete subgraphs; c_0 = 1 by convention."""
    if not 0 <= k <= g.n:
        raise ParameterError(f"clique size {k} out of range for order {g.n}")
    return _clique_size_counts(g.adj, g.n, k)[k]


def mu_complete_bipartite(m: int, n: int) -> int:
    """Largest mutual-visibility set size in K_{m,n}: m + n - 2, for m, n >= 3."""
    if m < 3 or n < 3:
        raise ParameterError("the complete bipartite value m + n - 2 needs m, n >= 3")
    return m + n - 2
