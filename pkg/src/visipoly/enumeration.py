"""Visibility polynomial computation by subset enumeration.

Two engines produce the same coefficient vector. The brute-force engine
tests every subset of every size, exactly the shape whose total cost is
O(|V| (|V|+|E|) 2^|V|). The pruned engine walks a depth-first
set-enumeration tree instead: a node holds a mutual-visibility set and
extends it only with vertices above its maximum, and a child that fails the
membership test is cut off together with its whole subtree. The pruning is
sound because the property is hereditary: every subset of a
mutual-visibility set is one, so no failing set has a passing superset.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, Iterator, Tuple

from .errors import GuardrailError
from .graph import Graph
from .polynomial import Polynomial
from .visibility import VisibilityContext, _visible_from_source

BRUTEFORCE_MAX_VERTICES = 25
PRUNED_MAX_VERTICES = 64


def polynomial_bruteforce(g: Graph, max_vertices: int = BRUTEFORCE_MAX_VERTICES) -> Polynomial:
    """Visibility polynomial by testing all subsets, size by size.

    Coefficient k is the number of mutual-visibility sets of cardinality k;
    the empty set contributes coefficient 1 at degree 0.
    """
    n = g.n
    if n > max_vertices:
        raise GuardrailError(
            f"brute force over 2^{n} subsets refused (limit {max_vertices} vertices); "
            "use polynomial_pruned or a closed form"
        )
    ctx = VisibilityContext(g)
    adj = ctx.adj
    layers = ctx.layers
    counts = [0] * (n + 1)
    counts[0] = 1
    bit = [1 << v for v in range(n)]
    for k in range(1, n + 1):
        total = 0
        for combo in combinations(range(n), k):
            x_mask = 0
            for v in combo:
                x_mask |= bit[v]
            for u in combo:
                if not _visible_from_source(adj, layers[u], u, x_mask):
                    break
            else:
                total += 1
        counts[k] = total
    return Polynomial(tuple(counts))


def _walk_mv_sets(ctx: VisibilityContext) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """Yield (vertices, diameter) for every nonempty mutual-visibility set.

    Sets are visited once each, in lexicographic order by maximum extension.
    The diameter is maintained incrementally; members of one set always sit
    in one component, so the distances involved are finite.
    """
    n = ctx.n
    dist = ctx.distance_rows()
    is_mv = ctx.is_mv

    def extend(mask: int, members: Tuple[int, ...], diam: int, last: int):
        for v in range(last + 1, n):
            cand_mask = mask | (1 << v)
            cand = members + (v,)
            if not is_mv(cand_mask, cand):
                continue
            row = dist[v]
            cand_diam = diam
            for w in members:
                dw = row[w]
                if dw > cand_diam:
                    cand_diam = dw
            yield cand, cand_diam
            yield from extend(cand_mask, cand, cand_diam, v)

    yield from extend(0, (), 0, -1)


def iter_mv_sets(g: Graph) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """Public wrapper around the pruned walk: (vertices, diameter) pairs."""
    _check_pruned_guardrail(g.n)
    yield from _walk_mv_sets(VisibilityContext(g))


def _check_pruned_guardrail(n: int) -> None:
    if n > PRUNED_MAX_VERTICES:
        raise GuardrailError(
            f"enumeration is limited to {PRUNED_MAX_VERTICES} vertices, got {n}; "
            "use a closed form"
        )


def polynomial_pruned(g: Graph) -> Polynomial:
    """Visibility polynomial via the pruned set-enumeration tree.

    Output contract is identical to polynomial_bruteforce.
    """
    _check_pruned_guardrail(g.n)
    counts = [0] * (g.n + 1)
    counts[0] = 1
    for members, _ in _walk_mv_sets(VisibilityContext(g)):
        counts[len(members)] += 1
    return Polynomial(tuple(counts))


def count_by_size_and_diameter(g: Graph) -> Dict[Tuple[int, int], int]:
    """Map (size, diameter) -> number of mutual-visibility sets of that shape.

    Same enumeration as polynomial_pruned; the empty set is not classified.
    """
    _check_pruned_guardrail(g.n)
    table: Dict[Tuple[int, int], int] = {}
    for members, diam in _walk_mv_sets(VisibilityContext(g)):
        key = (len(members), diam)
        table[key] = table.get(key, 0) + 1
    return table
