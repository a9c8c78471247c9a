"""Connected multigraphs with 2-cell embeddings on orientable surfaces.

An embedding is a rotation system: at every vertex, a cyclic order of the
incident edge-ends.  An edge-end ("dart") is a pair ``(edge_id, side)`` with
``edges[edge_id][side]`` the vertex it sits at.  Faces are the orbits of
``dart -> rotation-successor of the reversed dart`` and are derived on build.

Loops are forbidden; parallel edges are allowed (duals and medials need them).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    ContractionDisconnects,
    DisconnectedGraph,
    LoopCreated,
    LoopEdge,
    MalformedRotation,
    OddChi,
)

Dart = Tuple[int, int]  # (edge id, side in {0, 1})


@dataclass(frozen=True)
class EmbeddedGraph:
    num_vertices: int
    edges: Tuple[Tuple[int, int], ...]
    rotation: Tuple[Tuple[Dart, ...], ...]
    faces: Tuple[Tuple[Dart, ...], ...] = field(compare=False)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    @property
    def chi(self) -> int:
        return self.num_vertices - self.num_edges + self.num_faces

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def dart_vertex(self, d: Dart) -> int:
        return self.edges[d[0]][d[1]]

    def other_end(self, d: Dart) -> int:
        return self.edges[d[0]][1 - d[1]]

    def face_of_dart(self) -> Dict[Dart, int]:
        out: Dict[Dart, int] = {}
        for fid, walk in enumerate(self.faces):
            for d in walk:
                out[d] = fid
        return out

    def edge_faces(self, e: int) -> Tuple[int, int]:
        """The two faces flanking edge e, in dart-side order."""
        fod = self.face_of_dart()
        return fod[(e, 0)], fod[(e, 1)]

    def neighbors(self, v: int) -> List[int]:
        return [self.other_end(d) for d in self.rotation[v]]


def _trace_faces(
    edges: Sequence[Tuple[int, int]],
    rotation: Sequence[Sequence[Dart]],
) -> Tuple[Tuple[Dart, ...], ...]:
    succ: Dict[Dart, Dart] = {}
    for circ in rotation:
        k = len(circ)
        for i, d in enumerate(circ):
            succ[d] = circ[(i + 1) % k]
    faces: List[Tuple[Dart, ...]] = []
    seen: set[Dart] = set()
    for circ in rotation:
        for d0 in circ:
            if d0 in seen:
                continue
            walk: List[Dart] = []
            d = d0
            while True:
                walk.append(d)
                seen.add(d)
                d = succ[(d[0], 1 - d[1])]
                if d == d0:
                    break
            faces.append(tuple(walk))
    return tuple(faces)


def build(
    num_vertices: int,
    edges: Sequence[Tuple[int, int]],
    rotation: Sequence[Sequence[Dart]],
) -> EmbeddedGraph:
    """Validate the combinatorial map and trace its faces.

    Raises LoopEdge, MalformedRotation or DisconnectedGraph on bad input.
    """
    edges = [tuple(e) for e in edges]
    for eid, (u, v) in enumerate(edges):
        if u == v:
            raise LoopEdge(f"edge {eid} is a loop at vertex {u}")
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise MalformedRotation(f"edge {eid} references unknown vertex")
    if len(rotation) != num_vertices:
        raise MalformedRotation("rotation must list every vertex")
    seen: set[Dart] = set()
    for v, circ in enumerate(rotation):
        for d in circ:
            e, s = d
            if not (0 <= e < len(edges)) or s not in (0, 1):
                raise MalformedRotation(f"bad edge-end {d} at vertex {v}")
            if edges[e][s] != v:
                raise MalformedRotation(f"edge-end {d} is not at vertex {v}")
            if d in seen:
                raise MalformedRotation(f"edge-end {d} appears twice")
            seen.add(d)
    if len(seen) != 2 * len(edges):
        missing = 2 * len(edges) - len(seen)
        raise MalformedRotation(f"{missing} edge-end(s) missing from rotation")
    # Connectivity.
    if num_vertices > 0:
        stack = [0]
        reach = {0}
        adj: List[List[int]] = [[] for _ in range(num_vertices)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in reach:
                    reach.add(w)
                    stack.append(w)
        if len(reach) != num_vertices:
            raise DisconnectedGraph(
                f"only {len(reach)} of {num_vertices} vertices reachable"
            )
    faces = _trace_faces(edges, rotation)
    g = EmbeddedGraph(
        num_vertices=num_vertices,
        edges=tuple(edges),
        rotation=tuple(tuple(c) for c in rotation),
        faces=faces,
    )
    if g.chi % 2 != 0:
        raise OddChi(f"chi = {g.chi} is odd")  # unreachable for valid maps
    return g


def genus(g: EmbeddedGraph) -> int:
    """Genus of the embedding surface, (2 - chi) / 2."""
    if g.chi % 2 != 0:
        raise OddChi(f"chi = {g.chi} is odd")
    return (2 - g.chi) // 2


def dual(g: EmbeddedGraph) -> EmbeddedGraph:
    """Swap faces and vertices; edge ids are preserved.

    The dual vertex of a face inherits the face walk as its rotation, so
    dual(dual(g)) is isomorphic to g.
    """
    fod = g.face_of_dart()
    edges = []
    for e in range(g.num_edges):
        f0, f1 = fod[(e, 0)], fod[(e, 1)]
        if f0 == f1:
            raise LoopEdge(f"edge {e} borders face {f0} on both sides")
        edges.append((f0, f1))
    rotation: List[List[Dart]] = []
    for walk in g.faces:
        rotation.append([(e, s) for (e, s) in walk])
    return build(g.num_faces, edges, rotation)


def medial(g: EmbeddedGraph) -> EmbeddedGraph:
    return medial_with_origin(g)[0]


def medial_with_origin(
    g: EmbeddedGraph,
) -> Tuple[EmbeddedGraph, List[Tuple[str, int]]]:
    """4-valent medial graph plus a tag per medial face.

    Medial vertices are the edges of g; one medial edge per corner (a dart d
    together with its rotation successor).  Each medial face comes from either
    a vertex of g or a face of g; tags are ("vertex", v) / ("face", f).
    """
    succ: Dict[Dart, Dart] = {}
    for circ in g.rotation:
        k = len(circ)
        for i, d in enumerate(circ):
            succ[d] = circ[(i + 1) % k]
    darts = [(e, s) for e in range(g.num_edges) for s in (0, 1)]
    corner_id = {d: i for i, d in enumerate(darts)}
    m_edges = [(d[0], succ[d][0]) for d in darts]
    # Rotation at medial vertex m(e): corners at the two ends of e, ordered so
    # that the faces of the medial alternate vertex-type and face-type.
    m_rot: List[List[Dart]] = [[] for _ in range(g.num_edges)]
    pred = {succ[d]: d for d in succ}
    for e in range(g.num_edges):
        circ: List[Dart] = []
        for s in (0, 1):
            d = (e, s)
            c_out = corner_id[d]          # corner (d, succ d): medial edge side 0
            c_in = corner_id[pred[d]]     # corner (pred d, d): side 1
            circ.append((c_out, 0))
            circ.append((c_in, 1))
        m_rot[e] = circ
    m = build(g.num_edges, m_edges, m_rot)
    # Tag medial faces.  A corner (d, succ d) lies at vertex dart_vertex(d);
    # within the seed it belongs to the face containing dart succ(d).
    fod = g.face_of_dart()
    origins: List[Tuple[str, int]] = []
    for walk in m.faces:
        vertices_hit = {g.dart_vertex(darts[c]) for (c, _) in walk}
        faces_hit = {fod[succ[darts[c]]] for (c, _) in walk}
        if len(vertices_hit) == 1:
            origins.append(("vertex", vertices_hit.pop()))
        elif len(faces_hit) == 1:
            origins.append(("face", faces_hit.pop()))
        else:
            raise MalformedRotation("medial face mixes vertex and face corners")
    return m, origins


def is_bipartite(g: EmbeddedGraph) -> Optional[Tuple[List[int], List[int]]]:
    """Two vertex classes, or None when an odd cycle exists."""
    color = [-1] * g.num_vertices
    color[0] = 0
    queue = [0]
    while queue:
        u = queue.pop()
        for w in g.neighbors(u):
            if color[w] == -1:
                color[w] = 1 - color[u]
                queue.append(w)
            elif color[w] == color[u]:
                return None
    return (
        [v for v in range(g.num_vertices) if color[v] == 0],
        [v for v in range(g.num_vertices) if color[v] == 1],
    )


class _MutableMap:
    """Loop-tolerant working form for contractions and deletions."""

    def __init__(self, g: EmbeddedGraph) -> None:
        self.edges: Dict[int, Tuple[int, int]] = dict(enumerate(g.edges))
        self.rot: Dict[int, List[Dart]] = {
            v: list(circ) for v, circ in enumerate(g.rotation)
        }

    def dart_vertex(self, d: Dart) -> int:
        return self.edges[d[0]][d[1]]

    def contract(self, e: int) -> int:
        """Merge the endpoints of e (which must not be a loop); returns the
        surviving vertex id."""
        u, v = self.edges[e]
        if u == v:
            raise LoopCreated(f"edge {e} is a loop")
        ru, rv = self.rot[u], self.rot[v]
        iu = next(i for i, d in enumerate(ru) if d[0] == e)
        iv = next(i for i, d in enumerate(rv) if d[0] == e)
        spliced = (
            ru[:iu]
            + rv[iv + 1 :]
            + rv[:iv]
            + ru[iu + 1 :]
        )
        self.rot[u] = spliced
        del self.rot[v]
        del self.edges[e]
        for eid, (a, b) in list(self.edges.items()):
            if a == v:
                a = u
            if b == v:
                b = u
            self.edges[eid] = (a, b)
        return u

    def delete_edge(self, e: int) -> None:
        u, v = self.edges[e]
        for w in {u, v}:
            self.rot[w] = [d for d in self.rot[w] if d[0] != e]
        del self.edges[e]

    def freeze(self) -> Tuple[EmbeddedGraph, Dict[int, int], Dict[int, int]]:
        """Relabel densely and build; returns (graph, vertex map, edge map)."""
        vmap = {v: i for i, v in enumerate(sorted(self.rot))}
        emap = {e: i for i, e in enumerate(sorted(self.edges))}
        edges = [
            (vmap[self.edges[e][0]], vmap[self.edges[e][1]])
            for e in sorted(self.edges)
        ]
        rotation = [
            [(emap[e], s) for (e, s) in self.rot[v]] for v in sorted(self.rot)
        ]
        return build(len(vmap), edges, rotation), vmap, emap


def contract_edges(g: EmbeddedGraph, edge_set: Sequence[int]) -> EmbeddedGraph:
    """Contract the given edges, splicing rotations at each merge.

    Raises LoopCreated if some requested edge has become a loop (the edge set
    contained a cycle); callers that need to collapse whole cycles should use
    contract_and_drop_loops.
    """
    targets = sorted(set(edge_set))
    if any(not (0 <= e < g.num_edges) for e in targets):
        raise MalformedRotation("edge set references unknown edges")
    work = _MutableMap(g)
    for e in targets:
        u, v = work.edges[e]
        if u == v:
            raise LoopCreated(f"contracting edge set turns edge {e} into a loop")
        work.contract(e)
    if not work.rot:
        raise ContractionDisconnects("contracted away the whole graph")
    graph, _, _ = work.freeze()
    return graph


def contract_and_drop_loops(
    g: EmbeddedGraph, edge_set: Sequence[int]
) -> Tuple[EmbeddedGraph, Dict[int, int], Dict[int, int]]:
    """Contract edges, deleting any that become loops along the way.

    Collapsing a cycle necessarily makes its last edge a loop; dropping the
    loop keeps chi unchanged.  Returns (graph, vertex map, edge map) where the
    maps send surviving old ids to new dense ids.
    """
    work = _MutableMap(g)
    pending = sorted(edge_set)
    for e in pending:
        u, v = work.edges[e]
        if u == v:
            work.delete_edge(e)
        else:
            work.contract(e)
    return work.freeze()


def simplify_parallel(g: EmbeddedGraph) -> EmbeddedGraph:
    """Drop all but the lowest-id edge of every parallel class."""
    work = _MutableMap(g)
    seen: Dict[Tuple[int, int], int] = {}
    for e in sorted(work.edges):
        key = tuple(sorted(work.edges[e]))
        if key in seen:
            work.delete_edge(e)
        else:
            seen[key] = e
    graph, _, _ = work.freeze()
    return graph


def canonical_form(g: EmbeddedGraph) -> Tuple:
    """Canonical encoding of the embedded graph up to map isomorphism.

    BFS over darts from every dart of every minimum-degree vertex, in both
    orientations, taking the lexicographically smallest traversal code.
    Adequate at fixture scale.
    """
    if g.num_edges == 0:
        return (g.num_vertices,)
    min_deg = min(len(c) for c in g.rotation)
    starts = [
        d
        for v in range(g.num_vertices)
        if len(g.rotation[v]) == min_deg
        for d in g.rotation[v]
    ]
    best: Optional[Tuple] = None
    for mirror in (False, True):
        rot = [list(reversed(c)) if mirror else list(c) for c in g.rotation]
        for start in starts:
            code = _traverse_code(g, rot, start)
            if best is None or code < best:
                best = code
    return best  # type: ignore[return-value]


def _traverse_code(
    g: EmbeddedGraph, rot: List[List[Dart]], start: Dart
) -> Tuple:
    vnum: Dict[int, int] = {}
    enum: Dict[int, int] = {}
    code: List[int] = []
    v0 = g.dart_vertex(start)
    vnum[v0] = 0
    queue: List[Tuple[int, Dart]] = [(v0, start)]
    qi = 0
    while qi < len(queue):
        v, entry = queue[qi]
        qi += 1
        circ = rot[v]
        i0 = circ.index(entry)
        for k in range(len(circ)):
            e, s = circ[(i0 + k) % len(circ)]
            if e not in enum:
                enum[e] = len(enum)
            w = g.edges[e][1 - s]
            if w not in vnum:
                vnum[w] = len(vnum)
                queue.append((w, (e, 1 - s)))
            code.append(enum[e])
            code.append(vnum[w])
    return tuple(code)


def is_isomorphic(a: EmbeddedGraph, b: EmbeddedGraph) -> bool:
    if (a.num_vertices, a.num_edges, a.num_faces) != (
        b.num_vertices,
        b.num_edges,
        b.num_faces,
    ):
        return False
    return canonical_form(a) == canonical_form(b)


def to_json_dict(g: EmbeddedGraph) -> dict:
    return {
        "vertices": list(range(g.num_vertices)),
        "edges": [list(e) for e in g.edges],
        "rotation": {
            str(v): [list(d) for d in circ] for v, circ in enumerate(g.rotation)
        },
    }


def from_json_dict(data: dict) -> EmbeddedGraph:
    n = len(data["vertices"])
    edges = [tuple(e) for e in data["edges"]]
    rotation = [
        [tuple(d) for d in data["rotation"][str(v)]] for v in range(n)
    ]
    return build(n, edges, rotation)


def to_json(g: EmbeddedGraph) -> str:
    return json.dumps(to_json_dict(g), indent=2, sort_keys=True)


def to_dot(g: EmbeddedGraph, name: str = "g") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.num_vertices):
        lines.append(f"  {v};")
    for e, (u, v) in enumerate(g.edges):
        lines.append(f'  {u} -- {v} [label="e{e}"];')
    for fid, walk in enumerate(g.faces):
        cyc = " ".join(f"({e},{s})" for (e, s) in walk)
        lines.append(f"  // face {fid}: {cyc}")
    lines.append("}")
    return "\n".join(lines)
