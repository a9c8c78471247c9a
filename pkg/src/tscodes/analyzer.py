"""Assemble subsystem codes from hypergraphs and verify the parameter theory.

The gauge span comes from the derived-graph link operators; the stabilizer is
the center of the gauge span, computed by GF(2) elimination.  The pipelines
run the two closed-form families (vertex-face promotion of a blown-up seed,
and the same after a medial-dual detour) and check every computed parameter
against its closed form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import colex as colex_mod
from . import embed_graph, gf2, hypergraph, pauli
from .colex import TwoColex
from .embed_graph import EmbeddedGraph
from .errors import (
    Degree2Seed,
    DependencyViolation,
    GaugeMismatch,
    LemmaViolation,
    NotThreeEdgeColorable,
    OddDegreeSeed,
    QuotientTooLarge,
)
from .hypergraph import Hypergraph, HypercycleSpace
from .pauli import Pauli, PauliSpan


@dataclass(frozen=True)
class Generator:
    gid: int
    face: Optional[int]
    kind: str  # sigma1_fprime | sigma1_boundary | sigma2_promoted |
    #            sigma2_necklace | sigma2_bridged | loop2
    cycle: int


@dataclass
class PipelineData:
    kind: str  # "theorem2" | "theorem3"
    seed: EmbeddedGraph
    v: int
    e: int
    f: int
    chi: int
    delta: int
    promoted_faces: Tuple[int, ...]
    vface_plain: Tuple[int, ...]  # faces with one or two generators, unpromoted
    class_of_face: Dict[int, int] = field(default_factory=dict)
    class_of_eface: Dict[int, int] = field(default_factory=dict)
    seed_degrees: Tuple[int, ...] = ()


@dataclass
class SubsystemCode:
    n: int
    k: int
    r: int
    s: int
    hypergraph: Hypergraph
    derived: hypergraph.DerivedGraph
    gauge: PauliSpan
    stabilizer: PauliSpan
    cycles: HypercycleSpace
    generators: Tuple[Generator, ...]
    generators_complete: bool = True
    predicted: Optional[dict] = None
    pipeline: Optional[PipelineData] = None

    def trivial_basis(self) -> gf2.Basis:
        return gf2.Basis(g.cycle for g in self.generators)

    def params(self) -> Tuple[int, int, int, int]:
        return (self.n, self.k, self.r, self.s)


def _generator_kind(h: Hypergraph, fid: int, which: int) -> str:
    rec = h.faces[fid]
    if rec.kind == "promoted":
        return "sigma1_fprime" if which == 1 else "sigma2_promoted"
    if which == 1:
        return "sigma1_boundary"
    tov = h.triangle_of_vertex()
    if all(v in tov for v in rec.boundary_vertices):
        return "sigma2_necklace"
    return "sigma2_bridged"


def _grouped_cycle_ops(h: Hypergraph, mask: int) -> List[Pauli]:
    ops: List[Pauli] = []
    for c in ("r", "g", "b"):
        for i in range(h.num_edges):
            if (mask >> i) & 1 and h.edges[i].color == c:
                ops.append(
                    pauli.link_operator(h.edges[i].vertices, c, h.num_vertices)
                )
    return ops


def _completion_loops(
    h: Hypergraph,
    triv: gf2.Basis,
    cycles: Sequence[int],
    gauge: PauliSpan,
    span_cap: int = 18,
) -> List[int]:
    """Rank-2 loop generators completing the face-cycle span.

    Searches each missing coset for a minimum-weight representative whose
    r -> g -> b grouping satisfies the prefix rule, so the loop can join the
    measurement schedule.  Used for colexes whose stabilizer includes cycles
    of nontrivial homology (no promoted faces)."""
    from .scheduler import validate_prefixes  # deferred: avoids an import cycle

    out: List[int] = []
    work = triv.copy()
    missing = [b for b in cycles if work.add(b)]
    if not missing:
        return out
    r3 = h.rank3_mask()
    for rep in missing:
        if triv.contains(rep):
            continue
        if triv.dim > span_cap:
            raise QuotientTooLarge("face-cycle span too large for loop search")
        span = gf2.span_vectors(triv.rows)
        cands = sorted(
            (rep ^ x for x in span), key=lambda m: (m.bit_count(), m)
        )
        chosen = None
        for cand in cands:
            if cand == 0 or cand & r3:
                continue
            if not gauge.contains(pauli.cycle_operator(h, cand)):
                continue
            if validate_prefixes(_grouped_cycle_ops(h, cand)):
                chosen = cand
                break
        if chosen is None:
            raise GaugeMismatch("no schedulable loop closes the stabilizer span")
        out.append(chosen)
        triv.add(chosen)
    return out


def build_code(h: Hypergraph) -> SubsystemCode:
    """Gauge, stabilizer and (n, k, r, s) for a colored H1-H4 hypergraph.

    Asserts the over-determined parameter identities and that the gauge span
    equals the centralizer of the cycle-operator span.
    """
    rep = hypergraph.validate_H(h)
    if not rep.all_ok:
        raise GaugeMismatch(f"hypergraph violates H1-H4: {rep}")
    if not rep.coloring_proper.ok or not rep.rank3_monochrome.ok:
        raise NotThreeEdgeColorable(
            "hypergraph is not properly colored; run three_edge_color first"
        )
    n = h.num_vertices
    dg = hypergraph.derived_graph(h)
    gauge = PauliSpan(n)
    for lk in dg.links:
        gauge.add(pauli.link_operator(lk.vertices, lk.color, n))
    cycles = hypergraph.cycle_space(h)
    ws = [pauli.cycle_operator(h, sigma) for sigma in cycles.basis]
    lspan = PauliSpan(n, ws)
    if lspan.dim != cycles.dim:
        raise GaugeMismatch("cycle operators are not independent")
    # Gauge group = centralizer of the cycle-operator span.
    for lk in dg.links:
        p = pauli.link_operator(lk.vertices, lk.color, n)
        for w in ws:
            if not pauli.commutes(p, w):
                raise GaugeMismatch(
                    f"link {lk.origin} anticommutes with a cycle operator"
                )
    if gauge.dim != 2 * n - lspan.dim:
        raise GaugeMismatch(
            f"dim gauge = {gauge.dim} != 2n - dim L = {2 * n - lspan.dim}"
        )
    stab = pauli.center(gauge)
    s = stab.dim
    if (gauge.dim - s) % 2 or (lspan.dim - s) % 2:
        raise GaugeMismatch("parameter identities have no integer solution")
    r = (gauge.dim - s) // 2
    k = (lspan.dim - s) // 2  # dim C(gauge) = dim L here
    if n != k + r + s:
        raise GaugeMismatch(f"n = {n} != k+r+s = {k + r + s}")

    generators: List[Generator] = []
    triv = gf2.Basis()
    if h.faces is not None:
        for fid in range(len(h.faces)):
            fc = hypergraph.canonical_face_cycles(h, fid)
            for which, sigma in ((1, fc.sigma1), (2, fc.sigma2)):
                if sigma is None:
                    continue
                generators.append(
                    Generator(
                        len(generators), fid, _generator_kind(h, fid, which), sigma
                    )
                )
                triv.add(sigma)
        if triv.dim < s and not h.rank3_ids():
            # Cycles of nontrivial homology are stabilizers too; look for
            # schedulable loop representatives.
            for mask in _completion_loops(h, triv, cycles.basis, gauge):
                generators.append(
                    Generator(len(generators), None, "loop2", mask)
                )
        for g in generators:
            w = pauli.cycle_operator(h, g.cycle)
            if not stab.contains(w):
                raise GaugeMismatch(f"generator {g.gid} is not a stabilizer")
    cycles = HypercycleSpace(
        cycles.basis, cycles.dim, cycles.incidence_rank, tuple(triv.rows)
    )
    return SubsystemCode(
        n=n,
        k=k,
        r=r,
        s=s,
        hypergraph=h,
        derived=dg,
        gauge=gauge,
        stabilizer=stab,
        cycles=cycles,
        generators=tuple(generators),
        generators_complete=(h.faces is not None and triv.dim == s),
    )


def _check_seed_degrees(seed: EmbeddedGraph) -> None:
    for v in range(seed.num_vertices):
        d = seed.degree(v)
        if d % 2:
            raise OddDegreeSeed(f"vertex {v} has odd degree {d}")
        if d <= 2:
            raise Degree2Seed(f"vertex {v} has degree {d} <= 2")


def _seed_face_classes(seed: EmbeddedGraph) -> Optional[Dict[int, int]]:
    """2-coloring of the seed's faces (bipartition of the dual), or None."""
    bip = embed_graph.is_bipartite(embed_graph.dual(seed))
    if bip is None:
        return None
    out = {f: 0 for f in bip[0]}
    out.update({f: 1 for f in bip[1]})
    return out


def theorem2_pipeline(seed: EmbeddedGraph) -> SubsystemCode:
    """Blow up the seed, promote every vertex-face with the triangles set
    into the 4-gon faces; parameters [[6e, 1+delta-chi, 4e-chi]]."""
    _check_seed_degrees(seed)
    cx = colex_mod.construct_A(seed)
    classes = _seed_face_classes(seed)
    delta = 1 if classes is not None else 0
    vfaces = tuple(
        f for f, (kind, _) in enumerate(cx.parentage) if kind == "v"
    )
    ffaces = tuple(
        f for f, (kind, _) in enumerate(cx.parentage) if kind == "f"
    )
    fprime_class = None
    if classes is not None:
        fod = cx.graph.face_of_dart()

        def fprime_class(kept_edge: int) -> str:
            f0, f1 = fod[(kept_edge, 0)], fod[(kept_edge, 1)]
            ff = f0 if cx.parentage[f0][0] == "f" else f1
            return "g" if classes[cx.parentage[ff][1]] == 0 else "r"

    h = hypergraph.promote(cx, vfaces, "r", fprime_class)
    code = build_code(h)
    v, e, f, chi = seed.num_vertices, seed.num_edges, seed.num_faces, seed.chi
    code.predicted = {
        "n": 6 * e,
        "k": 1 + delta - chi,
        "r": 4 * e - chi,
        "s": 2 * v + 2 * f - 1 - delta,
        "dim_cycle_space": 2 * e + 1 + delta,
        "incidence_rank": 6 * e - 1 - delta,
    }
    face_class = {}
    eface_class = {}
    if classes is not None:
        for fid in ffaces:
            face_class[fid] = classes[cx.parentage[fid][1]]
    code.pipeline = PipelineData(
        kind="theorem2",
        seed=seed,
        v=v,
        e=e,
        f=f,
        chi=chi,
        delta=delta,
        promoted_faces=vfaces,
        vface_plain=ffaces,
        class_of_face=face_class,
        class_of_eface=eface_class,
        seed_degrees=tuple(seed.degree(x) for x in range(v)),
    )
    _assert_predicted(code)
    return code


def theorem3_pipeline(seed: EmbeddedGraph) -> SubsystemCode:
    """Medial, dual, blow up, promote the seed-vertex side of the v-face
    bipartition with triangles away from the 4-gons; [[10e, 1-chi+delta,
    6e-chi]]."""
    _check_seed_degrees(seed)
    med, origins = embed_graph.medial_with_origin(seed)
    dstar = embed_graph.dual(med)
    if embed_graph.is_bipartite(dstar) is None:
        raise GaugeMismatch("medial dual is unexpectedly non-bipartite")
    cx = colex_mod.construct_A(dstar)
    classes = _seed_face_classes(seed)
    delta = 1 if classes is not None else 0
    vfaces = [f for f, (kind, _) in enumerate(cx.parentage) if kind == "v"]
    F_v = tuple(
        f for f in vfaces if origins[cx.parentage[f][1]][0] == "vertex"
    )
    F_f = tuple(
        f for f in vfaces if origins[cx.parentage[f][1]][0] == "face"
    )
    fprime_class = None
    if classes is not None:
        fod = cx.graph.face_of_dart()

        def eface_seed_face(ef: int) -> int:
            # e-face parent is a dual edge; its endpoints are medial faces,
            # exactly one of which is a seed face.
            de = cx.parentage[ef][1]
            for end in dstar.edges[de]:
                tag, ident = origins[end]
                if tag == "face":
                    return ident
            raise GaugeMismatch("4-gon face with no seed-face side")

        def fprime_class(kept_edge: int) -> str:
            f0, f1 = fod[(kept_edge, 0)], fod[(kept_edge, 1)]
            ef = f0 if cx.parentage[f0][0] == "e" else f1
            return "g" if classes[eface_seed_face(ef)] == 0 else "r"

    h = hypergraph.promote(cx, F_v, "g", fprime_class)
    code = build_code(h)
    v, e, f, chi = seed.num_vertices, seed.num_edges, seed.num_faces, seed.chi
    code.predicted = {
        "n": 10 * e,
        "k": 1 - chi + delta,
        "r": 6 * e - chi,
        "s": 2 * (v + f + e) - 1 - delta,
        "dim_cycle_space": 4 * e + 1 + delta,
        "incidence_rank": 10 * e - 1 - delta,
    }
    face_class = {}
    eface_class = {}
    if classes is not None:
        fod = cx.graph.face_of_dart()
        for fid in F_f:
            sf = origins[cx.parentage[fid][1]][1]
            face_class[fid] = classes[sf]
        for fid, (kind, _) in enumerate(cx.parentage):
            if kind == "e":
                eface_class[fid] = classes[eface_seed_face(fid)]
    code.pipeline = PipelineData(
        kind="theorem3",
        seed=seed,
        v=v,
        e=e,
        f=f,
        chi=chi,
        delta=delta,
        promoted_faces=F_v,
        vface_plain=F_f,
        class_of_face=face_class,
        class_of_eface=eface_class,
        seed_degrees=tuple(seed.degree(x) for x in range(v)),
    )
    _assert_predicted(code)
    return code


def _assert_predicted(code: SubsystemCode) -> None:
    if not code.generators_complete:
        raise GaugeMismatch("pipeline generators do not span the stabilizer")
    pred = code.predicted
    got = {
        "n": code.n,
        "k": code.k,
        "r": code.r,
        "s": code.s,
        "dim_cycle_space": code.cycles.dim,
        "incidence_rank": code.cycles.incidence_rank,
    }
    bad = {key: (got[key], pred[key]) for key in pred if got[key] != pred[key]}
    if bad:
        raise GaugeMismatch(f"closed-form mismatch: {bad}")


def bombin_check(cx: TwoColex) -> Tuple[int, int, int, int]:
    """Predicted parameters of the dual-expansion code of a 2-colex:
    [[3V, 2g, 2V + 2g - 2]] with s filling in n = k + r + s."""
    V = cx.graph.num_vertices
    g = embed_graph.genus(cx.graph)
    n = 3 * V
    k = 2 * g
    r = 2 * V + 2 * g - 2
    return (n, k, r, n - k - r)


def bombin_pipeline(cx: TwoColex) -> SubsystemCode:
    h = hypergraph.bombin_hypergraph(cx)
    code = build_code(h)
    n, k, r, s = bombin_check(cx)
    code.predicted = {"n": n, "k": k, "r": r, "s": s}
    got = (code.n, code.k, code.r, code.s)
    if got != (n, k, r, s):
        raise GaugeMismatch(f"dual-expansion code {got} != predicted {(n, k, r, s)}")
    return code


def colex_code(cx: TwoColex) -> SubsystemCode:
    """The rank-2 hypergraph code of a colex (no triangles)."""
    return build_code(hypergraph.from_colex(cx))


@dataclass(frozen=True)
class DistanceBound:
    ell: Optional[int]  # None when no rank-3 edges exist (bound degenerate)
    applicable: bool

    def to_json(self) -> Optional[int]:
        return self.ell if self.applicable else None


def _coset_reps(code: SubsystemCode, cap: int) -> List[int]:
    if not code.generators_complete:
        raise GaugeMismatch(
            "canonical generators do not span the stabilizer; coset "
            "enumeration needs a pipeline-built code"
        )
    triv = code.trivial_basis()
    ext = []
    work = triv.copy()
    for b in code.cycles.basis:
        if work.add(b):
            ext.append(b)
    q = len(ext)
    if q != 2 * code.k:
        raise GaugeMismatch(f"quotient dim {q} != 2k = {2 * code.k}")
    if q > cap:
        raise QuotientTooLarge(f"quotient dimension {q} exceeds cap {cap}")
    reps = []
    for combo in range(1, 1 << q):
        v = 0
        for i in range(q):
            if (combo >> i) & 1:
                v ^= ext[i]
        reps.append(v)
    return reps


def distance_bound(code: SubsystemCode, coset_cap: int = 20) -> DistanceBound:
    """ell: the minimum rank-3 count over nontrivial hypercycles, by coset
    enumeration with exhaustion over the projected trivial span."""
    h = code.hypergraph
    r3 = h.rank3_mask()
    if r3 == 0:
        return DistanceBound(None, False)
    reps = _coset_reps(code, coset_cap)
    proj = gf2.Basis(v & r3 for v in code.trivial_basis().rows)
    if proj.dim > coset_cap:
        raise QuotientTooLarge(
            f"projected trivial span has dim {proj.dim} > cap {coset_cap}"
        )
    span = gf2.span_vectors(proj.rows)
    best = None
    for rep in reps:
        base = rep & r3
        m = min((base ^ x).bit_count() for x in span)
        best = m if best is None else min(best, m)
    return DistanceBound(best, True)


@dataclass(frozen=True)
class NontrivialReport:
    cosets: int
    all_have_rank3: bool
    none_in_gauge: bool
    trivials_in_stabilizer: bool


def nontrivial_cycle_checks(
    code: SubsystemCode, coset_cap: int = 20
) -> NontrivialReport:
    """Every nontrivial coset representative has a rank-3 edge and its cycle
    operator lies outside the gauge span; trivial cycles land in the
    stabilizer."""
    h = code.hypergraph
    r3 = h.rank3_mask()
    reps = _coset_reps(code, coset_cap)
    all_r3 = True
    none_gauge = True
    for rep in reps:
        if rep & r3 == 0:
            all_r3 = False
            raise LemmaViolation(f"nontrivial cycle without rank-3 edges: {rep:#x}")
        if code.gauge.contains(pauli.cycle_operator(h, rep)):
            none_gauge = False
            raise LemmaViolation(f"nontrivial cycle operator in gauge span: {rep:#x}")
    trivs_ok = True
    for sigma in code.trivial_basis().rows:
        w = pauli.cycle_operator(h, sigma)
        if not (code.gauge.contains(w) and code.stabilizer.contains(w)):
            trivs_ok = False
            raise LemmaViolation("trivial cycle operator escapes the stabilizer")
    return NontrivialReport(len(reps), all_r3, none_gauge, trivs_ok)


def _face_sigmas(code: SubsystemCode) -> Dict[Tuple[int, int], int]:
    out: Dict[Tuple[int, int], int] = {}
    for g in code.generators:
        if g.face is None:
            continue
        which = 1 if g.kind.startswith("sigma1") else 2
        out[(g.face, which)] = g.cycle
    return out


@dataclass(frozen=True)
class DependencyReport:
    identities: Tuple[Tuple[str, bool], ...]
    generator_count: int
    rank: int
    expected_rank: int

    @property
    def all_ok(self) -> bool:
        return (
            all(ok for _, ok in self.identities)
            and self.rank == self.expected_rank
        )


def dependency_check(code: SubsystemCode) -> DependencyReport:
    """Verify the product relations among the canonical stabilizer
    generators, both as GF(2) edge-set identities and as Pauli products."""
    if code.pipeline is None:
        raise DependencyViolation("dependency data needs a pipeline-built code")
    pd = code.pipeline
    h = code.hypergraph
    sig = _face_sigmas(code)
    two_gen = {f for (f, w) in sig if (f, 2) in sig}
    one_gen = {f for (f, w) in sig if (f, 1) in sig and (f, 2) not in sig}
    idents: List[Tuple[str, bool]] = []

    def verify(name: str, terms: List[int]) -> None:
        mask = 0
        w = Pauli.identity(h.num_vertices)
        for sigma in terms:
            mask ^= sigma
            w = w.mul(pauli.cycle_operator(h, sigma))
        ok = mask == 0 and w.is_identity
        idents.append((name, ok))
        if not ok:
            raise DependencyViolation(f"{name} fails: residue {mask:#x}")

    if pd.kind == "theorem2":
        terms = [sig[(f, 1)] for f in pd.promoted_faces]
        terms += [sig[(f, 2)] for f in pd.vface_plain]
        verify("vfaces_sigma1 == ffaces_sigma2", terms)
        if pd.delta == 1:
            f1 = [f for f in pd.vface_plain if pd.class_of_face[f] == 0]
            f2 = [f for f in pd.vface_plain if pd.class_of_face[f] == 1]
            terms = [sig[(f, 1)] for f in pd.vface_plain]
            terms += [sig[(f, 2)] for f in f1]
            terms += [sig[(f, 2)] for f in pd.promoted_faces]
            verify("ffaces_sigma1 * class1_sigma2 == vfaces_sigma2", terms)
            terms = [sig[(f, 1)] for f in pd.vface_plain]
            terms += [sig[(f, 2)] for f in f2]
            terms += [sig[(f, 1)] for f in pd.promoted_faces]
            terms += [sig[(f, 2)] for f in pd.promoted_faces]
            verify("ffaces_sigma1 * class2_sigma2 == vfaces_sigma1_sigma2", terms)
    elif pd.kind == "theorem3":
        efaces = sorted(one_gen)
        terms = [sig[(f, 1)] for f in pd.promoted_faces]
        terms += [sig[(f, 1)] for f in efaces]
        terms += [sig[(f, 1)] for f in pd.vface_plain]
        terms += [sig[(f, 2)] for f in pd.vface_plain]
        verify("Fv_sigma1 == efaces_sigma1 * Ff_sigma1_sigma2", terms)
        if pd.delta == 1:
            # The 4-gon faces pair with the opposite class of their
            # unpromoted v-face neighbor.
            e1 = [f for f in efaces if pd.class_of_eface[f] == 1]
            f1 = [f for f in pd.vface_plain if pd.class_of_face[f] == 0]
            f2 = [f for f in pd.vface_plain if pd.class_of_face[f] == 1]
            terms = [sig[(f, 2)] for f in pd.promoted_faces]
            terms += [sig[(f, 1)] for f in e1]
            terms += [sig[(f, 2)] for f in f1]
            terms += [sig[(f, 1)] for f in f2]
            verify("Fv_sigma2 == E1_sigma1 * F1_sigma2 * F2_sigma1", terms)
    else:
        raise DependencyViolation(f"unknown pipeline kind {pd.kind!r}")

    count = len([g for g in code.generators if g.face is not None])
    rank = code.trivial_basis().dim
    expected = 2 * len(two_gen) + len(one_gen) - 1 - pd.delta
    if rank != code.s or code.s != expected:
        raise DependencyViolation(
            f"independent-generator count {rank} (s={code.s}) != {expected}"
        )
    return DependencyReport(tuple(idents), count, rank, expected)


@dataclass(frozen=True)
class DistinctnessVerdict:
    six_valent: bool
    witness_vertex: Optional[int]
    simplified_is_colex: Optional[bool]

    @property
    def distinct(self) -> bool:
        return not self.six_valent or not self.simplified_is_colex


def distinctness_check(code: SubsystemCode) -> DistinctnessVerdict:
    """Shrink the triangles; the code coincides with a dual-expansion code
    only if the result is 6-valent and simplifies to a valid 2-colex."""
    contracted = hypergraph.contract_rank3(code.hypergraph)
    bad = [
        v
        for v in range(contracted.num_vertices)
        if contracted.degree(v) != 6
    ]
    if bad:
        return DistinctnessVerdict(False, bad[0], None)
    simplified = embed_graph.simplify_parallel(contracted)
    is_colex = colex_mod.validate_colex(simplified) is not None
    return DistinctnessVerdict(True, None, is_colex)


def exact_distance(code: SubsystemCode, max_n: int = 16, max_dim: int = 24) -> Optional[int]:
    """Brute-force min weight over C(S) minus the gauge span; None when the
    instance exceeds the enumeration gate."""
    if code.n > max_n:
        return None
    cs = pauli.centralizer(code.stabilizer)
    if cs.dim > max_dim:
        return None
    best = None
    n = code.n
    for v in gf2.span_vectors(cs.basis.rows):
        if v == 0 or code.gauge.basis.contains(v):
            continue
        w = Pauli.from_vec(n, v).weight
        best = w if best is None else min(best, w)
    return best


def code_report(
    code: SubsystemCode,
    ell: Optional[DistanceBound] = None,
    checks: Optional[dict] = None,
) -> dict:
    report = {
        "n": code.n,
        "k": code.k,
        "r": code.r,
        "s": code.s,
        "dim_gauge": code.gauge.dim,
        "dim_cycle_space": code.cycles.dim,
        "incidence_rank": code.cycles.incidence_rank,
        "ell": ell.to_json() if ell is not None else None,
        "predicted": code.predicted,
        "checks": checks or {},
    }
    if code.pipeline is not None:
        report["pipeline"] = code.pipeline.kind
        report["delta_dual_bipartite"] = code.pipeline.delta
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
