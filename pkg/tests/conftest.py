from __future__ import annotations

import pytest

from beyondplanar.embeddings import PlaneEmbedding
from beyondplanar.graphs import Graph


@pytest.fixture
def k4_embedding() -> PlaneEmbedding:
    # outer triangle (0,1,2) with 3 in the middle, rotations counterclockwise
    return PlaneEmbedding(
        [
            [1, 3, 2],
            [2, 3, 0],
            [0, 3, 1],
            [0, 1, 2],
        ],
        outer_dart=(0, 2),
    )


@pytest.fixture
def cube_embedding() -> PlaneEmbedding:
    # outer square 0..3, inner square 4..7, spokes i -> i+4
    return PlaneEmbedding(
        [
            [1, 4, 3],
            [2, 5, 0],
            [3, 6, 1],
            [0, 7, 2],
            [0, 5, 7],
            [1, 6, 4],
            [2, 7, 5],
            [3, 4, 6],
        ],
        outer_dart=(0, 3),
    )


@pytest.fixture
def pentagon_embedding() -> PlaneEmbedding:
    return PlaneEmbedding(
        [[1, 4], [2, 0], [3, 1], [4, 2], [0, 3]],
        outer_dart=(0, 4),
    )


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)
