"""3-valent hypergraphs with rank-2/rank-3 edges built from 2-colexes.

``promote`` implements the face-promotion construction: inside each chosen
face f (|f| = 0 mod 4, |f| > 4) an inner face f' with |f|/2 new vertices is
added and one alternating class of boundary edges becomes disjoint rank-3
edges (triangles).  The result satisfies H1-H4 and is properly 3-edge-colored
with every rank-3 edge colored "b" (so the fixed color -> Pauli table keeps
the commutation law exact: a rank-3 ZZZ operator must never meet a rank-2 ZZ
on a single shared qubit).

Hyperedge ids 0..E-1 coincide with the parent colex edge ids (promoted edges
keep their id and gain a vertex); inner-face edges are appended after.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import embed_graph, gf2
from .colex import COLORS, TwoColex
from .embed_graph import EmbeddedGraph
from .errors import BadFaceSize, MixedColorF, UnclassifiedFace


@dataclass(frozen=True)
class HEdge:
    vertices: Tuple[int, ...]  # sorted; length 2 or 3
    color: Optional[str]
    provenance: Tuple

    @property
    def rank(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class Triangle:
    """A promoted edge: original endpoints in boundary-walk order plus the
    new inner vertex."""

    edge_id: int
    u_first: int
    u_second: int
    w: int

    def far(self, u: int) -> int:
        """The original endpoint other than u."""
        return self.u_second if u == self.u_first else self.u_first


@dataclass(frozen=True)
class FaceRec:
    """Structure of one parent-colex face inside the hypergraph."""

    kind: str  # "promoted" | "plain" | "broken"
    boundary: Tuple[int, ...]  # hyperedge ids, cyclic walk order
    boundary_vertices: Tuple[int, ...]  # cyclic, vertex j starts edge j
    triangles: Tuple[Triangle, ...] = ()
    kept: Tuple[int, ...] = ()  # unpromoted boundary edges (promoted faces)
    fprime: Tuple[int, ...] = ()  # inner-face edge ids, cyclic
    new_vertices: Tuple[int, ...] = ()


@dataclass(frozen=True)
class Hypergraph:
    num_vertices: int
    edges: Tuple[HEdge, ...]
    n_original: int
    source: Optional[TwoColex] = field(default=None, compare=False)
    faces: Optional[Tuple[FaceRec, ...]] = field(default=None, compare=False)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def rank3_ids(self) -> List[int]:
        return [i for i, e in enumerate(self.edges) if e.rank == 3]

    def rank2_ids(self) -> List[int]:
        return [i for i, e in enumerate(self.edges) if e.rank == 2]

    def rank3_mask(self) -> int:
        m = 0
        for i in self.rank3_ids():
            m |= 1 << i
        return m

    def incident_edges(self, v: int) -> List[int]:
        return [i for i, e in enumerate(self.edges) if v in e.vertices]

    def incidence_rows(self) -> List[int]:
        """Vertex-edge incidence matrix rows as edge bitmasks."""
        rows = [0] * self.num_vertices
        for i, e in enumerate(self.edges):
            for v in e.vertices:
                rows[v] |= 1 << i
        return rows

    def triangle_of_vertex(self) -> Dict[int, Triangle]:
        out: Dict[int, Triangle] = {}
        if self.faces is None:
            return out
        for rec in self.faces:
            for t in rec.triangles:
                out[t.u_first] = t
                out[t.u_second] = t
                out[t.w] = t
        return out

    def fprime_by_wpair(self) -> Dict[frozenset, int]:
        out: Dict[frozenset, int] = {}
        for i, e in enumerate(self.edges):
            if e.provenance and e.provenance[0] == "fprime":
                out[frozenset(e.vertices)] = i
        return out

    def recolored(self, colors: Sequence[Optional[str]]) -> "Hypergraph":
        new_edges = tuple(
            HEdge(e.vertices, colors[i], e.provenance)
            for i, e in enumerate(self.edges)
        )
        return Hypergraph(
            self.num_vertices, new_edges, self.n_original, self.source, self.faces
        )


def from_colex(colex: TwoColex) -> Hypergraph:
    """View a colex as a rank-2 hypergraph, keeping its edge colors."""
    g = colex.graph
    edges = tuple(
        HEdge(tuple(sorted(g.edges[e])), colex.edge_color[e], ("colex", e))
        for e in range(g.num_edges)
    )
    faces = tuple(
        FaceRec(
            kind="plain",
            boundary=tuple(e for (e, _) in g.faces[f]),
            boundary_vertices=tuple(g.dart_vertex(d) for d in g.faces[f]),
        )
        for f in range(g.num_faces)
    )
    return Hypergraph(g.num_vertices, edges, g.num_vertices, colex, faces)


def from_graph(g: EmbeddedGraph) -> Hypergraph:
    """An uncolored rank-2 hypergraph (e.g. the Petersen negative fixture)."""
    edges = tuple(
        HEdge(tuple(sorted(g.edges[e])), None, ("graph", e))
        for e in range(g.num_edges)
    )
    return Hypergraph(g.num_vertices, edges, g.num_vertices, None, None)


def promote(
    colex: TwoColex,
    faces: Sequence[int],
    promote_color: str,
    fprime_class: Optional[Callable[[int], str]] = None,
) -> Hypergraph:
    """Insert inner faces and promote one alternating boundary class.

    ``promote_color`` is the colex edge color to turn into rank-3 edges; the
    triangles then border the faces of the remaining color.  ``fprime_class``
    may pin the color ("r"/"g") of the inner edge lying across a given kept
    boundary edge (used to align the coloring with a seed-face bipartition);
    by default inner edges alternate starting with "g" at the lowest-id new
    vertex.

    Colors are normalized so rank-3 edges are "b", the chosen faces' color
    maps to "r" and the kept boundary class to "g".
    """
    g = colex.graph
    faces = sorted(set(faces))
    fcolors = {colex.face_color[f] for f in faces}
    if len(fcolors) > 1:
        raise MixedColorF(f"faces span colors {sorted(fcolors)}")
    face_color = fcolors.pop() if fcolors else None
    if face_color is not None and promote_color == face_color:
        raise MixedColorF("promoted edge class must differ from the face color")
    keep_color = None
    if face_color is not None:
        keep_color = next(c for c in COLORS if c not in (face_color, promote_color))
    # Normalized color map; identity when nothing is promoted.
    if faces:
        cmap = {promote_color: "b", face_color: "r", keep_color: "g"}
    else:
        cmap = {c: c for c in COLORS}

    promoted_info: Dict[int, Tuple[int, int, int]] = {}  # colex edge -> (uf, us, w)
    fprime_edges: List[Tuple[int, int, str, Tuple]] = []
    face_build: Dict[int, dict] = {}
    next_vertex = g.num_vertices
    next_edge = g.num_edges
    for f in faces:
        walk = list(g.faces[f])
        size = len(walk)
        if size % 4 != 0 or size <= 4:
            raise BadFaceSize(f"face {f} has {size} sides")
        ecyc = [e for (e, _) in walk]
        vcyc = [g.dart_vertex(d) for d in walk]
        colors = [colex.edge_color[e] for e in ecyc]
        if sorted(set(colors)) != sorted({promote_color, keep_color}):
            raise MixedColorF(f"face {f} boundary lacks the promoted class")
        # Rotate so a promoted edge comes first; classes must alternate.
        start = colors.index(promote_color)
        ecyc = ecyc[start:] + ecyc[:start]
        vcyc = vcyc[start:] + vcyc[:start]
        colors = colors[start:] + colors[:start]
        if any(
            colors[j] != (promote_color if j % 2 == 0 else keep_color)
            for j in range(size)
        ):
            raise MixedColorF(f"face {f} boundary classes do not alternate")
        m = size // 2
        ws = list(range(next_vertex, next_vertex + m))
        next_vertex += m
        tris: List[Triangle] = []
        for i in range(m):
            e = ecyc[2 * i]
            uf, us = vcyc[2 * i], vcyc[2 * i + 1]
            promoted_info[e] = (uf, us, ws[i])
            tris.append(Triangle(e, uf, us, ws[i]))
        fps: List[int] = []
        for i in range(m):
            kept_edge = ecyc[2 * i + 1]
            if fprime_class is not None:
                col = fprime_class(kept_edge)
            else:
                col = "g" if i % 2 == 0 else "r"
            if col not in ("r", "g"):
                raise MixedColorF(f"inner edge color {col!r} must be r or g")
            fprime_edges.append(
                (ws[i], ws[(i + 1) % m], col, ("fprime", f, i))
            )
            fps.append(next_edge)
            next_edge += 1
        face_build[f] = {
            "triangles": tuple(tris),
            "kept": tuple(ecyc[2 * i + 1] for i in range(m)),
            "fprime": tuple(fps),
            "ws": tuple(ws),
            "boundary": tuple(ecyc),
            "bvertices": tuple(vcyc),
        }
        cols = [fprime_edges[j - g.num_edges][2] for j in fps]
        if any(cols[i] == cols[(i + 1) % m] for i in range(m)):
            raise MixedColorF(f"inner edge colors of face {f} do not alternate")

    edges: List[HEdge] = []
    for e in range(g.num_edges):
        if e in promoted_info:
            uf, us, w = promoted_info[e]
            edges.append(
                HEdge(tuple(sorted((uf, us, w))), "b", ("rank3", e))
            )
        else:
            edges.append(
                HEdge(
                    tuple(sorted(g.edges[e])),
                    cmap[colex.edge_color[e]],
                    ("colex", e),
                )
            )
    for (w1, w2, col, prov) in fprime_edges:
        edges.append(HEdge(tuple(sorted((w1, w2))), col, prov))

    face_recs: List[FaceRec] = []
    for f in range(g.num_faces):
        if f in face_build:
            fb = face_build[f]
            face_recs.append(
                FaceRec(
                    kind="promoted",
                    boundary=fb["boundary"],
                    boundary_vertices=fb["bvertices"],
                    triangles=fb["triangles"],
                    kept=fb["kept"],
                    fprime=fb["fprime"],
                    new_vertices=fb["ws"],
                )
            )
        else:
            ecyc = [e for (e, _) in g.faces[f]]
            vcyc = [g.dart_vertex(d) for d in g.faces[f]]
            kind = "broken" if any(e in promoted_info for e in ecyc) else "plain"
            face_recs.append(
                FaceRec(
                    kind=kind,
                    boundary=tuple(ecyc),
                    boundary_vertices=tuple(vcyc),
                )
            )
    return Hypergraph(
        next_vertex, tuple(edges), g.num_vertices, colex, tuple(face_recs)
    )


@dataclass(frozen=True)
class ConditionReport:
    ok: bool
    witness: Optional[Tuple] = None


@dataclass(frozen=True)
class HReport:
    h1: ConditionReport
    h2: ConditionReport
    h3: ConditionReport
    h4: ConditionReport
    coloring_proper: ConditionReport
    rank3_monochrome: ConditionReport

    @property
    def all_ok(self) -> bool:
        return all(
            c.ok
            for c in (self.h1, self.h2, self.h3, self.h4)
        )


def validate_H(h: Hypergraph) -> HReport:
    """Check H1-H4 with witnesses, plus the edge-coloring invariants."""
    h1 = ConditionReport(True)
    for i, e in enumerate(h.edges):
        if e.rank not in (2, 3):
            h1 = ConditionReport(False, (i,))
            break
    inc: List[List[int]] = [[] for _ in range(h.num_vertices)]
    for i, e in enumerate(h.edges):
        for v in e.vertices:
            inc[v].append(i)
    h2 = ConditionReport(True)
    for v, lst in enumerate(inc):
        if len(lst) != 3:
            h2 = ConditionReport(False, (v, len(lst)))
            break
    h3 = ConditionReport(True)
    h4 = ConditionReport(True)
    pairs = set()
    for v, lst in enumerate(inc):
        for a in lst:
            for b in lst:
                if a < b:
                    pairs.add((a, b))
    for (a, b) in sorted(pairs):
        shared = set(h.edges[a].vertices) & set(h.edges[b].vertices)
        if len(shared) > 1 and h3.ok:
            h3 = ConditionReport(False, (a, b))
        if h.edges[a].rank == 3 and h.edges[b].rank == 3 and h4.ok:
            h4 = ConditionReport(False, (a, b))
    proper = ConditionReport(True)
    for v, lst in enumerate(inc):
        cols = [h.edges[i].color for i in lst]
        if None in cols:
            proper = ConditionReport(False, (v,))
            break
        if len(set(cols)) != len(cols):
            proper = ConditionReport(False, (v,))
            break
    mono = ConditionReport(True)
    r3cols = {h.edges[i].color for i in h.rank3_ids()}
    if len(r3cols) > 1:
        mono = ConditionReport(False, tuple(sorted(r3cols)))
    return HReport(h1, h2, h3, h4, proper, mono)


def three_edge_color(h: Hypergraph) -> Optional[Tuple[str, ...]]:
    """Proper 3-edge-coloring with all rank-3 edges colored "b", by exact
    backtracking with smallest-domain-first ordering; None if impossible."""
    ne = h.num_edges
    inc: List[List[int]] = [[] for _ in range(h.num_vertices)]
    for i, e in enumerate(h.edges):
        for v in e.vertices:
            inc[v].append(i)
    neighbors: List[set] = [set() for _ in range(ne)]
    for lst in inc:
        for a in lst:
            for b in lst:
                if a != b:
                    neighbors[a].add(b)
    domains: List[set] = []
    for i, e in enumerate(h.edges):
        domains.append({"b"} if e.rank == 3 else {"r", "g", "b"})
    color: List[Optional[str]] = [None] * ne

    def propagate(i: int, c: str, removed: List[Tuple[int, str]]) -> bool:
        for j in neighbors[i]:
            if color[j] is None and c in domains[j]:
                domains[j].discard(c)
                removed.append((j, c))
                if not domains[j]:
                    return False
        return True

    def pick() -> int:
        best, size = -1, 4
        for i in range(ne):
            if color[i] is None and len(domains[i]) < size:
                best, size = i, len(domains[i])
        return best

    def run() -> bool:
        i = pick()
        if i == -1:
            return True
        for c in sorted(domains[i]):
            color[i] = c
            removed: List[Tuple[int, str]] = []
            if propagate(i, c, removed) and run():
                return True
            color[i] = None
            for j, c2 in removed:
                domains[j].add(c2)
        return False

    return tuple(color) if run() else None  # type: ignore[arg-type]


@dataclass(frozen=True)
class HypercycleSpace:
    basis: Tuple[int, ...]  # edge bitmasks with even incidence everywhere
    dim: int
    incidence_rank: int
    trivial_basis: Tuple[int, ...] = ()  # canonical-face-cycle span


def incidence_rank(h: Hypergraph) -> int:
    return gf2.rank(h.incidence_rows())


def cycle_space(h: Hypergraph) -> HypercycleSpace:
    """Nullspace of the incidence map: edge sets with even incidence at
    every vertex.  dim = |E| - rk2(I)."""
    rows = h.incidence_rows()
    basis = gf2.kernel(rows, h.num_edges)
    rk = gf2.rank(rows)
    assert len(basis) == h.num_edges - rk
    return HypercycleSpace(tuple(basis), len(basis), rk)


def is_cycle(h: Hypergraph, sigma: int) -> bool:
    for row in h.incidence_rows():
        if gf2.dot(row, sigma):
            return False
    return True


@dataclass(frozen=True)
class FaceCycles:
    sigma1: Optional[int]
    sigma2: Optional[int]


def _other_face(h: Hypergraph, edge_id: int, fid: int) -> Optional[int]:
    for f2, rec in enumerate(h.faces):
        if f2 != fid and edge_id in rec.boundary:
            return f2
    # A face may be adjacent to itself through an edge appearing twice.
    if h.faces[fid].boundary.count(edge_id) > 1:
        return fid
    return None


def canonical_face_cycles(h: Hypergraph, fid: int) -> FaceCycles:
    """The one or two canonical hypercycles attached to a parent-colex face.

    Promoted faces get the inner-face boundary and the triangle-bearing cycle
    whose pairing edges share the kept color.  A face with no rank-3 edge in
    its boundary always yields its boundary cycle; it gets a second cycle
    when either every boundary vertex carries a triangle (the triangles of
    the surrounding promoted faces chain through it) or when it is joined
    through intact 4-gon faces to promoted faces on all sides.
    """
    if h.faces is None:
        raise UnclassifiedFace("hypergraph carries no face structure")
    rec = h.faces[fid]
    if rec.kind == "broken":
        return FaceCycles(None, None)
    if rec.kind == "promoted":
        sigma1 = 0
        for e in rec.fprime:
            sigma1 ^= 1 << e
        sigma2 = 0
        for t in rec.triangles:
            sigma2 ^= 1 << t.edge_id
        for e in rec.kept:
            sigma2 ^= 1 << e
        for e in rec.fprime:
            if h.edges[e].color == "g":
                sigma2 ^= 1 << e
        return FaceCycles(sigma1, sigma2)
    # Plain face.
    sigma1 = 0
    for e in rec.boundary:
        sigma1 ^= 1 << e
    sigma2 = _plain_sigma2(h, fid)
    return FaceCycles(sigma1, sigma2)


def _plain_sigma2(h: Hypergraph, fid: int) -> Optional[int]:
    rec = h.faces[fid]
    tov = h.triangle_of_vertex()
    verts = rec.boundary_vertices
    if len(set(verts)) != len(verts):
        return None  # self-touching faces are out of scope here
    if all(v in tov for v in verts):
        return _necklace_sigma2(h, fid, tov)
    if not any(v in tov for v in verts):
        return _bridged_sigma2(h, fid)
    return None


def _necklace_sigma2(
    h: Hypergraph, fid: int, tov: Dict[int, Triangle]
) -> Optional[int]:
    """Every boundary vertex carries a triangle: chain them with the paired
    surviving edges of the broken 4-gons and one inner edge per promoted
    neighbor."""
    rec = h.faces[fid]
    wpair = h.fprime_by_wpair()
    sigma = 0
    for v in set(rec.boundary_vertices):
        sigma ^= 1 << tov[v].edge_id
    n = len(rec.boundary)
    for j, e in enumerate(rec.boundary):
        partner = _other_face(h, e, fid)
        if partner is None:
            return None
        pkind = h.faces[partner].kind
        a, a2 = rec.boundary_vertices[j], rec.boundary_vertices[(j + 1) % n]
        if pkind == "broken":
            survivors = [
                be
                for be in h.faces[partner].boundary
                if h.edges[be].rank == 2
            ]
            if len(survivors) != 2 or e not in survivors:
                return None
            opposite = survivors[0] if survivors[1] == e else survivors[1]
            sigma ^= (1 << e) ^ (1 << opposite)
        elif pkind == "promoted":
            key = frozenset((tov[a].w, tov[a2].w))
            if key not in wpair:
                return None
            sigma ^= 1 << wpair[key]
        else:
            return None
    return sigma


@dataclass(frozen=True)
class BridgedStructure:
    """Second-cycle structure of an unpromoted face all of whose 4-gon
    neighbors lead across to promoted faces.

    Per corner: the far kept edge of the 4-gon neighbor, the two triangles
    flanking it, and the inner-face edge joining their new vertices.  Corners
    are chained by 3-edge paths (r, b, r) through the neighboring faces.
    """

    kept: Tuple[int, ...]
    triangles: Tuple[Tuple[Triangle, Triangle], ...]
    inner: Tuple[int, ...]
    paths: Tuple[Tuple[int, int, int], ...]

    def cycle(self) -> int:
        sigma = 0
        for e in self.kept:
            sigma ^= 1 << e
        for (ta, tb) in self.triangles:
            sigma ^= (1 << ta.edge_id) ^ (1 << tb.edge_id)
        for e in self.inner:
            sigma ^= 1 << e
        for path in self.paths:
            for e in path:
                sigma ^= 1 << e
        return sigma


def bridged_structure(h: Hypergraph, fid: int) -> Optional[BridgedStructure]:
    rec = h.faces[fid]
    tov = h.triangle_of_vertex()
    wpair = h.fprime_by_wpair()
    corners: List[Tuple[int, Triangle, Triangle]] = []
    for e in rec.boundary:
        partner = _other_face(h, e, fid)
        if partner is None:
            return None
        pkind = h.faces[partner].kind
        if pkind == "promoted":
            return None
        if pkind == "broken":
            continue
        prec = h.faces[partner]
        far = [
            be
            for be in prec.boundary
            if be != e
            and (pf := _other_face(h, be, partner)) is not None
            and h.faces[pf].kind == "promoted"
        ]
        if len(far) != 1:
            return None
        a_far = far[0]
        p, q = h.edges[a_far].vertices
        if p not in tov or q not in tov or tov[p].edge_id == tov[q].edge_id:
            return None
        corners.append((a_far, tov[p], tov[q]))
    if not corners:
        return None
    kept: List[int] = []
    tris: List[Tuple[Triangle, Triangle]] = []
    inner: List[int] = []
    outward: set = set()
    for (a_far, ta, tb) in corners:
        key = frozenset((ta.w, tb.w))
        if key not in wpair:
            return None
        kept.append(a_far)
        tris.append((ta, tb))
        inner.append(wpair[key])
        p, q = h.edges[a_far].vertices
        outward.add(ta.far(p) if p in (ta.u_first, ta.u_second) else ta.far(q))
        outward.add(tb.far(q) if q in (tb.u_first, tb.u_second) else tb.far(p))
    if len(outward) != 2 * len(corners):
        return None

    def unique_colored(v: int, color: str, avoid: int = -1) -> Optional[int]:
        cand = [
            i
            for i in h.incident_edges(v)
            if i != avoid and h.edges[i].rank == 2 and h.edges[i].color == color
        ]
        return cand[0] if len(cand) == 1 else None

    paths: List[Tuple[int, int, int]] = []
    seen: set = set()
    for o in sorted(outward):
        if o in seen:
            continue
        e1 = unique_colored(o, "r")
        if e1 is None:
            return None
        rhat = next(v for v in h.edges[e1].vertices if v != o)
        e2 = unique_colored(rhat, "b", avoid=e1)
        if e2 is None:
            return None
        rhat2 = next(v for v in h.edges[e2].vertices if v != rhat)
        e3 = unique_colored(rhat2, "r", avoid=e2)
        if e3 is None:
            return None
        o2 = next(v for v in h.edges[e3].vertices if v != rhat2)
        if o2 not in outward or o2 in seen:
            return None
        seen.add(o)
        seen.add(o2)
        paths.append((e1, e2, e3))
    if len(paths) != len(corners):
        return None
    return BridgedStructure(tuple(kept), tuple(tris), tuple(inner), tuple(paths))


def _bridged_sigma2(h: Hypergraph, fid: int) -> Optional[int]:
    bs = bridged_structure(h, fid)
    return None if bs is None else bs.cycle()


def derived_graph(h: Hypergraph) -> "DerivedGraph":
    """Expand every rank-3 edge into its ZZ triangle; rank-2 edges map to a
    single link carrying the Pauli of their color."""
    links: List[DLink] = []
    for i, e in enumerate(h.edges):
        if e.rank == 2:
            links.append(
                DLink(
                    vertices=e.vertices,
                    pauli=PAULI_OF_COLOR.get(e.color),
                    color=e.color,
                    origin=(i, None),
                )
            )
        else:
            v0, v1, v2 = e.vertices
            for side, (a, b) in enumerate(((v0, v1), (v1, v2), (v0, v2))):
                links.append(
                    DLink(vertices=(a, b), pauli="ZZ", color=e.color, origin=(i, side))
                )
    return DerivedGraph(h.num_vertices, tuple(links))


PAULI_OF_COLOR = {"r": "XX", "g": "YY", "b": "ZZ"}


@dataclass(frozen=True)
class DLink:
    vertices: Tuple[int, int]
    pauli: Optional[str]
    color: Optional[str]
    origin: Tuple[int, Optional[int]]  # (hyperedge id, triangle side or None)


@dataclass(frozen=True)
class DerivedGraph:
    num_vertices: int
    links: Tuple[DLink, ...]

    def link_index(self) -> Dict[Tuple[int, Optional[int]], int]:
        return {lk.origin: i for i, lk in enumerate(self.links)}


def derived_embedding(h: Hypergraph) -> EmbeddedGraph:
    """The derived graph as an embedded multigraph (triangles drawn inside
    their promoted faces).  Requires a colex-backed hypergraph."""
    if h.source is None or h.faces is None:
        raise UnclassifiedFace("derived embedding needs a colex source")
    g = h.source.graph
    edges: List[Tuple[int, int]] = []
    rot: Dict[int, List[Tuple[int, int]]] = {
        v: [] for v in range(h.num_vertices)
    }
    # Start from the colex rotations; promoted edges are replaced in place by
    # [outer side, inner side] at each original endpoint.
    eid_of: Dict[Tuple[int, Optional[int]], int] = {}
    for i, e in enumerate(h.edges):
        if e.rank == 2:
            eid_of[(i, None)] = len(edges)
            edges.append((e.vertices[0], e.vertices[1]))
    tri_sides: Dict[int, Dict[str, int]] = {}
    for rec in h.faces or ():
        for t in rec.triangles:
            outer = len(edges)
            edges.append((t.u_first, t.u_second))
            in_first = len(edges)
            edges.append((t.u_first, t.w))
            in_second = len(edges)
            edges.append((t.u_second, t.w))
            tri_sides[t.edge_id] = {
                "outer": outer,
                "in_first": in_first,
                "in_second": in_second,
            }

    def dart_at(eid: int, v: int) -> Tuple[int, int]:
        return (eid, 0 if edges[eid][0] == v else 1)

    promoted_ids = set(tri_sides)
    for v in range(g.num_vertices):
        circ: List[Tuple[int, int]] = []
        for (ce, s) in g.rotation[v]:
            if ce in promoted_ids:
                t = next(
                    t
                    for rec in h.faces
                    for t in rec.triangles
                    if t.edge_id == ce
                )
                sides = tri_sides[ce]
                # The promoted face's walk leaves u_first along this edge, so
                # the triangle sits in the corner before it there and in the
                # corner after it at u_second.
                if v == t.u_first:
                    circ.append(dart_at(sides["in_first"], v))
                    circ.append(dart_at(sides["outer"], v))
                else:
                    circ.append(dart_at(sides["outer"], v))
                    circ.append(dart_at(sides["in_second"], v))
            else:
                circ.append(dart_at(eid_of[(ce, None)], v))
        rot[v] = circ
    for rec in h.faces or ():
        if rec.kind != "promoted":
            continue
        m = len(rec.triangles)
        for i, t in enumerate(rec.triangles):
            sides = tri_sides[t.edge_id]
            fp_next = eid_of[(rec.fprime[i], None)]
            fp_prev = eid_of[(rec.fprime[(i - 1) % m], None)]
            rot[t.w] = [
                dart_at(sides["in_second"], t.w),
                dart_at(sides["in_first"], t.w),
                dart_at(fp_prev, t.w),
                dart_at(fp_next, t.w),
            ]
    return embed_graph.build(h.num_vertices, edges, [rot[v] for v in range(h.num_vertices)])


def contract_rank3(h: Hypergraph) -> EmbeddedGraph:
    """Collapse every rank-3 edge to a single vertex.

    For colex-backed hypergraphs the derived embedding is contracted, so the
    result is a genuine embedded multigraph; otherwise an arbitrary rotation
    is attached (degree checks remain meaningful, face structure does not).
    """
    if not h.rank3_ids():
        if h.source is not None:
            return h.source.graph
        return _arbitrary_embedding(h)
    if h.source is not None and h.faces is not None:
        demb = derived_embedding(h)
        # Triangle side edges were appended after rank-2 edges in order;
        # recompute their positions to contract two sides per triangle.
        n_rank2 = len(h.rank2_ids())
        to_contract = []
        for k in range(len(h.rank3_ids())):
            base = n_rank2 + 3 * k
            to_contract.extend([base, base + 1, base + 2])
        contracted, _, _ = embed_graph.contract_and_drop_loops(
            demb, to_contract
        )
        return contracted
    return _contract_abstract(h)


def _arbitrary_embedding(h: Hypergraph) -> EmbeddedGraph:
    edges = [e.vertices for e in h.edges if e.rank == 2]
    rot: List[List[Tuple[int, int]]] = [[] for _ in range(h.num_vertices)]
    for i, (u, v) in enumerate(edges):
        rot[u].append((i, 0))
        rot[v].append((i, 1))
    return embed_graph.build(h.num_vertices, edges, rot)


def _contract_abstract(h: Hypergraph) -> EmbeddedGraph:
    parent = list(range(h.num_vertices))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in h.rank3_ids():
        vs = h.edges[i].vertices
        for v in vs[1:]:
            parent[find(v)] = find(vs[0])
    reps = sorted({find(v) for v in range(h.num_vertices)})
    newid = {r: k for k, r in enumerate(reps)}
    edges = [
        (newid[find(e.vertices[0])], newid[find(e.vertices[1])])
        for e in h.edges
        if e.rank == 2
    ]
    rot: List[List[Tuple[int, int]]] = [[] for _ in range(len(reps))]
    for i, (u, v) in enumerate(edges):
        rot[u].append((i, 0))
        rot[v].append((i, 1))
    return embed_graph.build(len(reps), edges, rot)


def bombin_hypergraph(colex: TwoColex) -> Hypergraph:
    """The subsystem-code hypergraph of the dual-expansion construction.

    One qubit per (vertex, face) incidence of the colex, one rank-3 edge per
    colex vertex, and one rank-2 edge per (edge, flanking face) pair whose
    color follows the cyclic orientation of the dual's vertex 3-coloring.
    """
    g = colex.graph
    fod = g.face_of_dart()
    corners: Dict[Tuple[int, int], int] = {}
    for v in range(g.num_vertices):
        fs = sorted({fod[d] for d in g.rotation[v]})
        if len(fs) != 3:
            raise UnclassifiedFace(f"vertex {v} does not meet three faces")
        for f in fs:
            corners[(v, f)] = len(corners)
    edges: List[HEdge] = []
    nxt = {"r": "b", "b": "g", "g": "r"}
    for e in range(g.num_edges):
        u, v = g.edges[e]
        f0, f1 = fod[(e, 0)], fod[(e, 1)]
        for f in (f0, f1):
            c0, c1 = colex.face_color[f0], colex.face_color[f1]
            this, other = (
                (c0, c1) if f == f0 else (c1, c0)
            )
            color = "r" if nxt[this] == other else "g"
            edges.append(
                HEdge(
                    tuple(sorted((corners[(u, f)], corners[(v, f)]))),
                    color,
                    ("bombin_rank2", e, f),
                )
            )
    for v in range(g.num_vertices):
        fs = sorted({fod[d] for d in g.rotation[v]})
        edges.append(
            HEdge(
                tuple(sorted(corners[(v, f)] for f in fs)),
                "b",
                ("bombin_rank3", v),
            )
        )
    return Hypergraph(len(corners), tuple(edges), len(corners), None, None)


def to_json_dict(h: Hypergraph) -> dict:
    return {
        "vertices": list(range(h.num_vertices)),
        "rank2": [list(h.edges[i].vertices) for i in h.rank2_ids()],
        "rank3": [list(h.edges[i].vertices) for i in h.rank3_ids()],
        "colors": {
            str(i): h.edges[i].color
            for i in range(h.num_edges)
            if h.edges[i].color is not None
        },
        "provenance": {
            str(i): list(h.edges[i].provenance) for i in range(h.num_edges)
        },
    }


def from_json_dict(data: dict) -> Hypergraph:
    """Rebuild a bare hypergraph (no colex backing) from its JSON form."""
    rank2 = [tuple(e) for e in data["rank2"]]
    rank3 = [tuple(e) for e in data["rank3"]]
    nv = len(data["vertices"])
    colors = data.get("colors", {})
    edges: List[HEdge] = []
    idx = 0
    for group in (rank2, rank3):
        for e in group:
            edges.append(
                HEdge(tuple(sorted(e)), colors.get(str(idx)), ("json", idx))
            )
            idx += 1
    return Hypergraph(nv, tuple(edges), nv, None, None)


def to_json(h: Hypergraph) -> str:
    return json.dumps(to_json_dict(h), indent=2, sort_keys=True)


DOT_COLOR = {"r": "red", "g": "green", "b": "blue", None: "black"}


def to_dot(h: Hypergraph, name: str = "hypergraph") -> str:
    lines = [f"graph {name} {{"]
    for v in range(h.num_vertices):
        lines.append(f"  {v};")
    for i in h.rank2_ids():
        e = h.edges[i]
        u, v = e.vertices
        lines.append(
            f'  {u} -- {v} [color={DOT_COLOR[e.color]} label="e{i}"];'
        )
    for k, i in enumerate(h.rank3_ids()):
        e = h.edges[i]
        a, b, c = e.vertices
        lines.append(f"  subgraph cluster_t{k} {{")
        lines.append(f'    label="rank3 e{i}";')
        for (x, y) in ((a, b), (b, c), (a, c)):
            lines.append(f"    {x} -- {y} [color=blue style=dashed];")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines)
