import json

import pytest

from tscodes import colex, embed_graph as eg, gf2, hypergraph as hg, lattices
from tscodes.errors import BadFaceSize, MixedColorF
from tscodes.hypergraph import HEdge, Hypergraph


def th2_hypergraph(seed):
    c = colex.construct_A(seed)
    vfaces = [f for f, (k, _) in enumerate(c.parentage) if k == "v"]
    return hg.promote(c, vfaces, "r"), c


def test_promote_counts_2x2(grid22):
    h, _ = th2_hypergraph(grid22)
    assert h.num_vertices == 48
    assert len(h.rank3_ids()) == 16
    assert len(h.rank2_ids()) == 48


def test_promote_empty_is_identity(grid22):
    c = colex.construct_A(grid22)
    h = hg.promote(c, [], "r")
    assert h.num_vertices == c.graph.num_vertices
    assert not h.rank3_ids()
    assert [h.edges[i].vertices for i in h.rank2_ids()] == [
        tuple(sorted(e)) for e in c.graph.edges
    ]


def test_promote_rejects_4_sided_face(grid22):
    c = colex.construct_A(grid22)
    efaces = [f for f, (k, _) in enumerate(c.parentage) if k == "e"]
    with pytest.raises(BadFaceSize):
        hg.promote(c, efaces[:1], "r")


def test_promote_rejects_mixed_colors(grid22):
    c = colex.construct_A(grid22)
    vface = next(f for f, (k, _) in enumerate(c.parentage) if k == "v")
    fface = next(f for f, (k, _) in enumerate(c.parentage) if k == "f")
    with pytest.raises(MixedColorF):
        hg.promote(c, [vface, fface], "r")


def test_promote_output_satisfies_H(grid22):
    h, _ = th2_hypergraph(grid22)
    rep = hg.validate_H(h)
    assert rep.all_ok
    assert rep.coloring_proper.ok
    assert rep.rank3_monochrome.ok
    assert {h.edges[i].color for i in h.rank3_ids()} == {"b"}


def test_validate_H_flags_overlapping_rank3():
    edges = (
        HEdge((0, 1, 2), "b", ("x", 0)),
        HEdge((0, 1, 3), "b", ("x", 1)),
    )
    h = Hypergraph(4, edges, 4)
    rep = hg.validate_H(h)
    assert not rep.h4.ok
    assert rep.h4.witness == (0, 1)
    assert not rep.h3.ok


def test_honeycomb_colex_passes_H(honeycomb33_colex):
    rep = hg.validate_H(hg.from_colex(honeycomb33_colex))
    assert rep.all_ok and rep.coloring_proper.ok


def test_three_edge_color_petersen_absent():
    h = hg.from_graph(lattices.petersen_graph())
    assert hg.three_edge_color(h) is None


def test_three_edge_color_honeycomb(honeycomb33_colex):
    h = hg.from_colex(honeycomb33_colex)
    stripped = h.recolored([None] * h.num_edges)
    coloring = hg.three_edge_color(stripped)
    assert coloring is not None
    rep = hg.validate_H(stripped.recolored(coloring))
    assert rep.coloring_proper.ok


def test_three_edge_color_recolors_promoted(grid22):
    h, _ = th2_hypergraph(grid22)
    stripped = h.recolored([None] * h.num_edges)
    coloring = hg.three_edge_color(stripped)
    assert coloring is not None
    recol = stripped.recolored(coloring)
    rep = hg.validate_H(recol)
    assert rep.coloring_proper.ok and rep.rank3_monochrome.ok
    assert {recol.edges[i].color for i in recol.rank3_ids()} == {"b"}


def test_cycle_space_dims(grid22, grid33):
    for seed, delta in ((grid22, 1), (grid33, 0)):
        h, _ = th2_hypergraph(seed)
        cs = hg.cycle_space(h)
        e = seed.num_edges
        assert cs.dim == 2 * e + 1 + delta
        assert cs.incidence_rank == 6 * e - 1 - delta
        assert cs.dim == h.num_edges - cs.incidence_rank


def test_cycle_space_single_square():
    edges = tuple(
        HEdge(tuple(sorted(e)), None, ("x", i))
        for i, e in enumerate([(0, 1), (1, 2), (2, 3), (3, 0)])
    )
    h = Hypergraph(4, edges, 4)
    assert hg.cycle_space(h).dim == 1


def test_cycle_vectors_have_even_incidence(grid22):
    h, _ = th2_hypergraph(grid22)
    cs = hg.cycle_space(h)
    rows = h.incidence_rows()
    for vec in cs.basis:
        assert all(gf2.dot(row, vec) == 0 for row in rows)


def test_incidence_rank_of_plain_connected_graph(honeycomb33_colex):
    h = hg.from_colex(honeycomb33_colex)
    assert hg.incidence_rank(h) == h.num_vertices - 1


def test_canonical_cycles_are_cycles(grid22):
    h, c = th2_hypergraph(grid22)
    two = one = 0
    for f in range(len(h.faces)):
        fc = hg.canonical_face_cycles(h, f)
        for sigma in (fc.sigma1, fc.sigma2):
            if sigma is not None:
                assert hg.is_cycle(h, sigma)
        if fc.sigma1 is not None and fc.sigma2 is not None:
            two += 1
        elif fc.sigma1 is not None or fc.sigma2 is not None:
            one += 1
    # Every promoted face and every face free of triangles: two generators.
    assert two == grid22.num_vertices + grid22.num_faces
    assert one == 0


def test_promoted_sigma2_contains_all_face_triangles(grid22):
    h, c = th2_hypergraph(grid22)
    for f, rec in enumerate(h.faces):
        if rec.kind != "promoted":
            continue
        fc = hg.canonical_face_cycles(h, f)
        for t in rec.triangles:
            assert (fc.sigma2 >> t.edge_id) & 1


def test_derived_graph_counts(grid22):
    h, _ = th2_hypergraph(grid22)
    dg = hg.derived_graph(h)
    assert len(dg.links) == 48 + 3 * 16
    assert all(
        lk.pauli == "ZZ" for lk in dg.links if lk.origin[1] is not None
    )


def test_derived_graph_single_triangle():
    h = Hypergraph(3, (HEdge((0, 1, 2), "b", ("x", 0)),), 3)
    dg = hg.derived_graph(h)
    assert [lk.vertices for lk in dg.links] == [(0, 1), (1, 2), (0, 2)]
    assert all(lk.pauli == "ZZ" for lk in dg.links)


def test_derived_graph_identity_without_rank3(honeycomb33_colex):
    h = hg.from_colex(honeycomb33_colex)
    dg = hg.derived_graph(h)
    assert len(dg.links) == h.num_edges


def test_contract_rank3_no_triangles_unchanged(honeycomb33_colex):
    h = hg.from_colex(honeycomb33_colex)
    out = hg.contract_rank3(h)
    assert out is honeycomb33_colex.graph


def test_contract_rank3_bombin_is_6_valent(honeycomb33_colex):
    h = hg.bombin_hypergraph(honeycomb33_colex)
    out = hg.contract_rank3(h)
    assert all(out.degree(v) == 6 for v in range(out.num_vertices))
    assert out.num_vertices == honeycomb33_colex.graph.num_vertices


def test_bombin_hypergraph_structure(honeycomb33_colex):
    h = hg.bombin_hypergraph(honeycomb33_colex)
    V = honeycomb33_colex.graph.num_vertices
    assert h.num_vertices == 3 * V
    assert len(h.rank3_ids()) == V
    assert len(h.rank2_ids()) == 3 * V
    rep = hg.validate_H(h)
    assert rep.all_ok and rep.coloring_proper.ok and rep.rank3_monochrome.ok


def test_json_round_trip(grid22):
    h, _ = th2_hypergraph(grid22)
    data = json.loads(hg.to_json(h))
    back = hg.from_json_dict(data)
    assert back.num_vertices == h.num_vertices
    assert len(back.rank3_ids()) == len(h.rank3_ids())
    rep = hg.validate_H(back)
    assert rep.all_ok


def test_dot_renders_triangle_clusters(grid22):
    h, _ = th2_hypergraph(grid22)
    dot = hg.to_dot(h)
    assert dot.count("subgraph cluster_t") == 16


def th3_hypergraph(seed):
    c_all = []
    med, origins = eg.medial_with_origin(seed)
    dstar = eg.dual(med)
    c = colex.construct_A(dstar)
    vfaces = [f for f, (k, _) in enumerate(c.parentage) if k == "v"]
    F_v = [f for f in vfaces if origins[c.parentage[f][1]][0] == "vertex"]
    return hg.promote(c, F_v, "g"), c, F_v


def test_medial_route_face_cycle_classification(grid22):
    h, c, F_v = th3_hypergraph(grid22)
    for f, (kind, _) in enumerate(c.parentage):
        fc = hg.canonical_face_cycles(h, f)
        if f in F_v:
            assert fc.sigma1 is not None and fc.sigma2 is not None
        elif kind == "v":  # unpromoted half of the bipartition
            assert fc.sigma1 is not None and fc.sigma2 is not None
        elif kind == "e":  # intact 4-gons: boundary cycle only
            assert fc.sigma1 is not None and fc.sigma2 is None
        else:  # faces with triangles in their boundary yield nothing
            assert fc.sigma1 is None and fc.sigma2 is None


def test_medial_route_counts(grid22):
    h, _, _ = th3_hypergraph(grid22)
    assert h.num_vertices == 80
    assert len(h.rank3_ids()) == 16
    assert len(h.rank2_ids()) == 96
    cs = hg.cycle_space(h)
    assert cs.dim == 34
    assert cs.incidence_rank == 78


def test_contract_rank3_medial_route_not_6_valent(grid22):
    h, _, _ = th3_hypergraph(grid22)
    out = hg.contract_rank3(h)
    degs = {out.degree(v) for v in range(out.num_vertices)}
    assert degs != {6}


def test_canonical_cycles_need_face_structure(grid22):
    from tscodes.errors import UnclassifiedFace

    h, _ = th2_hypergraph(grid22)
    bare = hg.from_json_dict(json.loads(hg.to_json(h)))
    with pytest.raises(UnclassifiedFace):
        hg.canonical_face_cycles(bare, 0)


def test_incidence_rank_against_numpy_oracle(grid22):
    import numpy as np

    h, _ = th2_hypergraph(grid22)

    def numpy_gf2_rank(mat):
        m = np.array(mat, dtype=np.uint8) % 2
        rank = 0
        rows, cols = m.shape
        r = 0
        for c in range(cols):
            pivot = None
            for i in range(r, rows):
                if m[i, c]:
                    pivot = i
                    break
            if pivot is None:
                continue
            m[[r, pivot]] = m[[pivot, r]]
            for i in range(rows):
                if i != r and m[i, c]:
                    m[i] ^= m[r]
            rank += 1
            r += 1
        return rank

    dense = [
        [1 if v in h.edges[e].vertices else 0 for e in range(h.num_edges)]
        for v in range(h.num_vertices)
    ]
    assert hg.incidence_rank(h) == numpy_gf2_rank(dense) == 46
    assert hg.cycle_space(h).dim == h.num_edges - 46
