"""Shared fixtures for the test modules."""

import random
from pathlib import Path

import networkx as nx

from simplicialcentrality.simplicial import (
    Graph,
    clique_complex,
    read_edge_list,
)

base_path = Path(__file__).resolve().parent
BRIDGED_TRIANGLES = base_path / "bridged_triangles.txt"


def bridged_triangles():
    return clique_complex(read_edge_list(BRIDGED_TRIANGLES))


def random_graph(n, p, seed) -> Graph:
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def random_complexes(count, max_vertices=8, seed=2024):
    """Clique complexes of small seeded random graphs."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_vertices)
        p = rng.choice([0.2, 0.4, 0.6, 0.8])
        yield clique_complex(random_graph(n, p, rng.randrange(10**6)))
