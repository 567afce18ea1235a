#!/usr/bin/env python3
"""Regenerate the committed connected-graph corpora under data/.

Orders 1..7 come from the networkx graph atlas (every simple graph on up to
seven vertices), filtered to connected graphs and written as graph6 records
with this package's encoder. Each record is cross-checked by decoding it
with networkx. For orders 8 and 9 no generator is bundled; use nauty's geng
and drop the output next to the committed files:

    geng -c 8 > data/connected_n8.g6     # 11117 graphs
    geng -c 9 > data/connected_n9.g6     # 261080 graphs
"""

from __future__ import annotations

import sys
from collections import Counter
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from visipoly import Graph, encode_graph6, parse_graph6

EXPECTED_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def main() -> int:
    data_dir = Path(__file__).resolve().parent.parent / "data"
    data_dir.mkdir(exist_ok=True)
    by_order: dict[int, list[str]] = {n: [] for n in EXPECTED_CONNECTED}
    for atlas_graph in nx.graph_atlas_g():
        n = atlas_graph.number_of_nodes()
        if n == 0 or not nx.is_connected(atlas_graph):
            continue
        graph = Graph.from_edges(n, list(atlas_graph.edges()))
        record = encode_graph6(graph)
        decoded = nx.from_graph6_bytes(record.encode("ascii"))
        assert set(decoded.nodes()) == set(atlas_graph.nodes()), record
        assert {frozenset(e) for e in decoded.edges()} == {
            frozenset(e) for e in atlas_graph.edges()
        }, record
        assert parse_graph6(record) == graph
        by_order[n].append(record)
    counts = Counter({n: len(records) for n, records in by_order.items()})
    assert dict(counts) == EXPECTED_CONNECTED, counts
    for n, records in sorted(by_order.items()):
        path = data_dir / f"connected_n{n}.g6"
        path.write_text("\n".join(records) + "\n", encoding="ascii")
        print(f"wrote {path} ({len(records)} graphs)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
