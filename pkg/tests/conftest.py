import random

import pytest

from paritybei.graphs import Graph, build_graph


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return build_graph(n, edges)


@pytest.fixture(scope="session")
def small_random_graphs() -> list[Graph]:
    out = []
    for seed in range(60):
        n = 1 + seed % 9
        out.append(random_graph(n, 0.25 + (seed % 4) * 0.15, seed))
    return out
