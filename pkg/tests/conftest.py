from __future__ import annotations

import random
from pathlib import Path

import pytest

from oracles import random_graph

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def corpus_path(order: int) -> Path:
    return DATA_DIR / f"connected_n{order}.g6"


@pytest.fixture(scope="session")
def random_small_graphs():
    """Deterministic sample of small graphs at mixed densities, disconnected included."""
    rng = random.Random(20240901)
    graphs = []
    for _ in range(220):
        n = rng.randint(1, 7)
        p = rng.choice((0.15, 0.3, 0.5, 0.7, 0.9))
        graphs.append(random_graph(rng, n, p))
    return graphs
