"""Deterministic fixture graphs: torus grids, theta, Petersen, honeycombs.

All generators fix vertex and edge ids so downstream constructions are
reproducible byte-for-byte.
"""

from __future__ import annotations

from typing import List, Tuple

from . import embed_graph
from .embed_graph import Dart, EmbeddedGraph
from .errors import BadParams


def theta_graph() -> EmbeddedGraph:
    """Two vertices joined by three parallel edges, embedded in the sphere."""
    edges = [(0, 1), (0, 1), (0, 1)]
    rotation = [
        [(0, 0), (1, 0), (2, 0)],
        [(2, 1), (1, 1), (0, 1)],
    ]
    return embed_graph.build(2, edges, rotation)


def torus_grid(m: int, n: int) -> EmbeddedGraph:
    """m x n square grid on the torus; every vertex has degree 4."""
    if m < 2 or n < 2:
        raise BadParams("torus grid needs m, n >= 2")
    nv = m * n

    def vid(i: int, j: int) -> int:
        return (i % m) * n + (j % n)

    edges: List[Tuple[int, int]] = []
    east = {}
    south = {}
    for i in range(m):
        for j in range(n):
            east[(i, j)] = len(edges)
            edges.append((vid(i, j), vid(i, j + 1)))
    for i in range(m):
        for j in range(n):
            south[(i, j)] = len(edges)
            edges.append((vid(i, j), vid(i + 1, j)))
    rotation: List[List[Dart]] = []
    for i in range(m):
        for j in range(n):
            rotation.append(
                [
                    (east[(i, j)], 0),
                    (south[(i, j)], 0),
                    (east[(i, (j - 1) % n)], 1),
                    (south[((i - 1) % m, j)], 1),
                ]
            )
    return embed_graph.build(nv, edges, rotation)


def triangular_torus(m: int, n: int) -> EmbeddedGraph:
    """Torus grid plus one diagonal per cell; every vertex has degree 6."""
    if m < 2 or n < 2:
        raise BadParams("triangular torus needs m, n >= 2")
    nv = m * n

    def vid(i: int, j: int) -> int:
        return (i % m) * n + (j % n)

    edges: List[Tuple[int, int]] = []
    east = {}
    south = {}
    diag = {}
    for i in range(m):
        for j in range(n):
            east[(i, j)] = len(edges)
            edges.append((vid(i, j), vid(i, j + 1)))
    for i in range(m):
        for j in range(n):
            south[(i, j)] = len(edges)
            edges.append((vid(i, j), vid(i + 1, j)))
    for i in range(m):
        for j in range(n):
            diag[(i, j)] = len(edges)
            edges.append((vid(i, j), vid(i + 1, j + 1)))
    rotation: List[List[Dart]] = []
    for i in range(m):
        for j in range(n):
            rotation.append(
                [
                    (east[(i, j)], 0),
                    (diag[(i, j)], 0),
                    (south[(i, j)], 0),
                    (east[(i, (j - 1) % n)], 1),
                    (diag[((i - 1) % m, (j - 1) % n)], 1),
                    (south[((i - 1) % m, j)], 1),
                ]
            )
    return embed_graph.build(nv, edges, rotation)


def petersen_graph() -> EmbeddedGraph:
    """The Petersen graph with a fixed (genus-irrelevant) rotation system."""
    edges: List[Tuple[int, int]] = []
    outer = {}
    spoke = {}
    inner = {}
    for i in range(5):
        outer[i] = len(edges)
        edges.append((i, (i + 1) % 5))
    for i in range(5):
        spoke[i] = len(edges)
        edges.append((i, 5 + i))
    for i in range(5):
        inner[i] = len(edges)
        edges.append((5 + i, 5 + (i + 2) % 5))
    rotation: List[List[Dart]] = []
    for i in range(5):
        rotation.append([(outer[i], 0), (spoke[i], 0), (outer[(i - 1) % 5], 1)])
    for i in range(5):
        rotation.append([(spoke[i], 1), (inner[i], 0), (inner[(i - 2) % 5], 1)])
    return embed_graph.build(10, edges, rotation)


def honeycomb_torus(m: int, n: int) -> EmbeddedGraph:
    """Hexagonal lattice on the torus: 2mn vertices, 3mn edges, mn faces.

    Vertices come in two sublattices a(i,j) and b(i,j); b(i,j) joins a(i,j),
    a(i,j+1) and a(i+1,j).  The graph is always bipartite; its faces are
    3-colorable only for suitable (m, n).
    """
    if m < 2 or n < 2:
        raise BadParams("honeycomb torus needs m, n >= 2")
    nv = 2 * m * n

    def a(i: int, j: int) -> int:
        return 2 * ((i % m) * n + (j % n))

    def b(i: int, j: int) -> int:
        return a(i, j) + 1

    edges: List[Tuple[int, int]] = []
    e_v = {}
    e_e = {}
    e_s = {}
    for i in range(m):
        for j in range(n):
            e_v[(i, j)] = len(edges)
            edges.append((a(i, j), b(i, j)))
    for i in range(m):
        for j in range(n):
            e_e[(i, j)] = len(edges)
            edges.append((b(i, j), a(i, j + 1)))
    for i in range(m):
        for j in range(n):
            e_s[(i, j)] = len(edges)
            edges.append((b(i, j), a(i + 1, j)))
    rotation: List[List[Dart]] = []
    for i in range(m):
        for j in range(n):
            rotation.append(
                [
                    (e_v[(i, j)], 0),
                    (e_s[((i - 1) % m, j)], 1),
                    (e_e[(i, (j - 1) % n)], 1),
                ]
            )
            rotation.append(
                [
                    (e_v[(i, j)], 1),
                    (e_s[(i, j)], 0),
                    (e_e[(i, j)], 0),
                ]
            )
    flat: List[List[Dart]] = [[] for _ in range(nv)]
    vidx = 0
    for i in range(m):
        for j in range(n):
            flat[a(i, j)] = rotation[vidx]
            flat[b(i, j)] = rotation[vidx + 1]
            vidx += 2
    return embed_graph.build(nv, edges, flat)
