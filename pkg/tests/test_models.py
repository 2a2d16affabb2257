"""Interaction models, membership, enumeration, and the graph families."""

from __future__ import annotations

import pytest

from tensorgraphs.graphs import (
    GraphError,
    canonical_certificate,
    connected_components,
    is_isomorphic,
)
from tensorgraphs.homology import euler_characteristic, homology
from tensorgraphs.jackets import gurau_degree
from tensorgraphs.models import (
    build,
    build_cg,
    build_dipole,
    build_kg,
    build_l,
    build_m,
    build_melon,
    build_n,
    build_necklace,
    build_o,
    build_p,
    build_qg,
    build_qgbc,
    build_r0,
    build_r1,
    build_tg,
    build_twopoint,
    builtin_model,
    default_probes,
    enumerate_vacuum,
    find_separators,
    is_member,
    separator_m,
    separator_p,
)
from tensorgraphs.surgery import boundary_graph, crys_sum, separator_check

from conftest import load_fixture


def two_bubble_count(g):
    from tensorgraphs.graphs import bubbles

    return sum(
        len(bubbles(g, (c1, c2)))
        for i, c1 in enumerate(g.colors)
        for c2 in g.colors[i + 1 :]
    )


# ----------------------------------------------------------------- models

def test_builtin_models():
    m2 = builtin_model("phi4-matrix")
    assert m2.rank == 2
    assert m2.vertex_names == ("V",)
    assert len(m2.upsilon) == 1
    m3 = builtin_model("phi4-rank3")
    assert m3.rank == 3
    assert m3.vertex_names == ("V1", "V2", "V3")
    assert len(m3.upsilon) == 3
    mp = builtin_model("matrix-2p:3")
    assert mp.rank == 2
    assert mp.vertex_names == ("V6",)
    assert len(mp.upsilon[0].vertices) == 6


def test_unknown_model_rejected():
    with pytest.raises(GraphError, match="unknown model"):
        builtin_model("nope")
    with pytest.raises(GraphError):
        builtin_model("matrix-2p:0")


def test_rank3_interaction_vertices_are_distinct():
    m3 = builtin_model("phi4-rank3")
    certs = {canonical_certificate(v) for v in m3.upsilon}
    assert len(certs) == 3


# ------------------------------------------------------------- membership

def test_r1_is_a_matrix_member():
    rep = is_member(build_r1(), builtin_model("phi4-matrix"))
    assert rep.ok
    assert rep.components == (("a", "V"), ("c", "V"))
    assert rep.lines() == ["component a: V", "component c: V", "member"]


def test_membership_requires_matching_palette():
    with pytest.raises(GraphError, match="do not match rank-3 model"):
        is_member(build_r1(), builtin_model("phi4-rank3"))


def test_tg_is_a_rank3_member():
    rep = is_member(build_tg(1), builtin_model("phi4-rank3"))
    assert rep.ok
    assert len(rep.components) == 6  # two gadgets per ring position


def test_crys_sum_breaks_membership():
    # vertex-deletion sum of two members: the fused interaction pattern is
    # no longer a disjoint union of allowed vertices
    r1 = build_r1()
    fused = crys_sum(r1, "p", r1, "a")
    rep = is_member(fused, builtin_model("phi4-matrix"))
    assert not rep.ok
    assert rep.lines()[-1] == "not member"
    assert rep.components == (("l.a", None), ("l.c", "V"), ("r.c", "V"))
    assert "component l.a: no match" in rep.lines()


def test_non_member_open_graph():
    # propagator chain: its blocks are 2-vertex melons, not quartic vertices
    rep = is_member(load_fixture("twopoint.cg"), builtin_model("phi4-rank3"))
    assert not rep.ok
    assert all(name is None for _, name in rep.components)


# ------------------------------------------------------------ enumeration

def test_enumerate_matrix_k1():
    model = builtin_model("phi4-matrix")
    assert len(enumerate_vacuum(model, 1)) == 2
    assert len(enumerate_vacuum(model, 1, dedup=True)) == 2


def test_enumerate_rank3_counts():
    model = builtin_model("phi4-rank3")
    assert len(enumerate_vacuum(model, 1)) == 6
    assert len(enumerate_vacuum(model, 1, dedup=True)) == 6
    assert len(enumerate_vacuum(model, 2)) == 144
    assert len(enumerate_vacuum(model, 2, dedup=True)) == 54


def test_enumerated_graphs_are_valid_members():
    model = builtin_model("phi4-rank3")
    for g in enumerate_vacuum(model, 2, dedup=True)[:10]:
        assert g.is_closed
        assert is_member(g, model).ok


def test_enumeration_cap_is_enforced():
    with pytest.raises(GraphError, match="enumeration cap"):
        enumerate_vacuum(builtin_model("phi4-matrix"), 4)


# -------------------------------------------------------------- families

def test_dipole_family():
    d = build_dipole(3)
    assert len(d.vertices) == 2 and len(d.edges) == 3
    assert d.colors == (1, 2, 3)
    assert build_dipole(4, base=0).colors == (0, 1, 2, 3)
    with pytest.raises(GraphError):
        build_dipole(0)


def test_r0_r1_profiles():
    r0, r1 = build_r0(), build_r1()
    for g in (r0, r1):
        assert len(g.vertices) == 8 and len(g.edges) == 12
        assert g.colors == (0, 1, 2)
    assert euler_characteristic(r0) == 2
    assert euler_characteristic(r1) == 0
    assert not is_isomorphic(r0, r1).isomorphic


def test_necklace_profile():
    n = build_necklace()
    assert len(n.vertices) == 4 and len(n.edges) == 8
    assert n.colors == (0, 1, 2, 3)
    assert build_necklace(base=1).colors == (1, 2, 3, 4)
    assert gurau_degree(n).degree == 1


def test_twopoint_profile():
    g = build_twopoint()
    assert g.is_open and len(g.legs) == 2
    assert len(g.vertices) == 6


def test_cg_family():
    for g in range(4):
        c = build_cg(g)
        n = 2 * g + 1
        assert len(c.vertices) == 2 * n
        assert len(c.edges) == 3 * n
        assert c.colors == (1, 2, 3)
        assert len(connected_components(c)) == 1
        assert euler_characteristic(c) == 2 - 2 * g


def test_tg_family():
    for g in (0, 1, 2):
        t = build_tg(g)
        n = 2 * g + 1
        assert t.colors == (0, 1, 2, 3)
        assert len(t.vertices) == 8 * n
        assert len(t.legs) == 2 * n
        assert len(t.edges) == 15 * n
        assert len(connected_components(t)) == 1
        assert is_isomorphic(boundary_graph(t), build_cg(g)).isomorphic


def test_o_and_n_blocks():
    o, n = build_o(), build_n()
    for blk in (o, n):
        assert len(blk.vertices) == 24 and len(blk.edges) == 36
        assert {"mu0", "nu0", "alpha0", "beta0"} <= set(blk.edges)
        assert all(blk.edges[e].color == 0 for e in ("mu0", "nu0", "alpha0", "beta0"))
    assert euler_characteristic(o) == 0
    assert euler_characteristic(n) == 2
    assert homology(o).betti == (1, 2, 1)
    assert homology(n).betti == (1, 0, 1)
    # same underlying vertices, different coloring around one central cycle
    assert sorted(o.vertices) == sorted(n.vertices)
    diff = [e for e in o.edges if o.edges[e].color != n.edges[e].color]
    assert len(diff) == 4


def test_qg_and_kg_families():
    for g in (1, 2, 3):
        q = build_qg(g)
        assert len(q.vertices) == 24 * g
        assert len(q.edges) == 36 * g
        assert two_bubble_count(q) == 10 * g + 2
        assert euler_characteristic(q) == 2 - 2 * g
        k = build_kg(g)
        assert len(k.vertices) == 24 * g
        assert euler_characteristic(k) == 2 - 2 * g
    assert not is_isomorphic(build_qg(2), build_kg(2)).isomorphic


def test_qg_requires_positive_genus():
    with pytest.raises(GraphError):
        build_qg(0)


def test_qgbc_family():
    g = build_qgbc(2, 2, 3)
    assert len(g.vertices) == 72  # three chained blocks
    assert len(g.legs) == 10
    b = boundary_graph(g)
    assert len(connected_components(b)) == 5
    small = build_qgbc(0, 1, 1)
    assert len(small.vertices) == 24
    assert len(small.legs) == 4
    assert len(connected_components(boundary_graph(small))) == 2


def test_qgbc_validation():
    with pytest.raises(GraphError, match="max\\(g, C\\) >= 1"):
        build_qgbc(0, 0, 0)
    with pytest.raises(GraphError, match="B <= C"):
        build_qgbc(1, 2, 1)


def test_l_family():
    assert is_isomorphic(build_l([2]), build_tg(2)).isomorphic
    l23 = build_l([2, 3])
    assert len(connected_components(l23)) == 1
    assert is_member(l23, builtin_model("phi4-rank3")).ok
    parts = connected_components(boundary_graph(l23))
    genera = sorted(
        (len(p.vertices) // 2 - 1) // 2 for p in parts
    )  # Cg has 2(2g+1) vertices
    assert genera == [2, 3]


def test_l_requires_genera():
    with pytest.raises(GraphError):
        build_l([])


# -------------------------------------------------------------- separators

def test_frozen_p_profile():
    p = build_p()
    assert len(p.vertices) == 4
    assert len(p.edges) == 8
    assert p.colors == (0, 1, 2, 3)
    assert p.is_closed
    res = separator_p()
    assert (res.k, res.l) == ("z0", "z1")
    assert p.edges["z0"].color == 0 and p.edges["z1"].color == 0


def test_frozen_m_is_two_copies_of_p():
    m = build_m()
    assert len(m.vertices) == 8
    parts = connected_components(m)
    assert len(parts) == 2
    p = build_p()
    assert all(is_isomorphic(part, p).isomorphic for part in parts)
    res = separator_m()
    assert (res.k, res.l) == ("z0", "z1")


def test_default_probes_shape():
    probes = default_probes()
    assert len(probes) == 3
    sizes = [(len(a.vertices), len(b.vertices)) for a, b in probes]
    assert sizes == [(24, 24), (24, 40), (6, 24)]


def test_frozen_separators_pass_their_own_check():
    probes = default_probes()
    for res in (separator_p(), separator_m()):
        assert separator_check(res.graph, res.k, res.l, probes)


def test_find_separators_bound_too_small():
    with pytest.raises(GraphError, match="raise the bound"):
        find_separators(builtin_model("phi4-rank3"), 1)


def test_find_separators_requires_rank3():
    with pytest.raises(GraphError):
        find_separators(builtin_model("phi4-matrix"), 2)


# ------------------------------------------------------------- dispatcher

def test_build_dispatcher():
    assert is_isomorphic(build("dipole", d=3), build_dipole(3)).isomorphic
    assert is_isomorphic(build("qg", g=1), build_qg(1)).isomorphic
    assert is_isomorphic(build("melon"), build_melon()).isomorphic


def test_build_dispatcher_errors():
    with pytest.raises(GraphError, match="unknown family 'ufo'"):
        build("ufo")
    with pytest.raises(GraphError, match="bad parameters for 'dipole'"):
        build("dipole", zz=1)
