from fractions import Fraction

import pytest

from ringfill import (
    Triangulation,
    Vertex,
    boundary_cycle,
    canonical_triangle,
    cone_over_cycle,
    skeleton_graph,
    validate_disk,
)


def triangle_on_c3():
    vertices = [Vertex(i, 0, i, Fraction(i)) for i in range(3)]
    return Triangulation(3, vertices, [(0, 1, 2)])


def test_canonical_rotation():
    assert canonical_triangle(5, 2, 7) == (2, 7, 5)
    assert canonical_triangle(7, 5, 2) == (2, 7, 5)
    assert canonical_triangle(2, 7, 5) == (2, 7, 5)
    # reflection is a different oriented triangle
    assert canonical_triangle(2, 5, 7) == (2, 5, 7)


def test_single_triangle_is_a_disk():
    t = triangle_on_c3()
    rep = validate_disk(t)
    assert rep.ok, rep.failures
    assert rep.counts["vertices"] - rep.counts["edges"] + rep.counts["triangles"] == 1
    assert (rep.counts["vertices"], rep.counts["edges"], rep.counts["triangles"]) == (3, 3, 1)


def test_cone_over_c4_is_a_disk():
    t = cone_over_cycle(4)
    rep = validate_disk(t)
    assert rep.ok, rep.failures
    assert t.num_edges == 8
    assert rep.counts["boundary_edges"] == 4
    assert rep.counts["interior_edges"] == 4


def test_cone_with_missing_triangle_is_invalid():
    t = cone_over_cycle(4)
    broken = Triangulation(4, t.vertices, t.triangles[:-1])
    rep = validate_disk(broken)
    assert not rep.ok
    # the two spokes of the removed triangle now have incidence 1 off the cycle,
    # and one cycle edge lost its only triangle
    assert any("unexpected boundary edges" in f for f in rep.failures)
    assert any("cycle edges missing" in f for f in rep.failures)


def test_duplicate_and_degenerate_triangles_reported():
    vertices = [Vertex(i, 0, i, Fraction(i)) for i in range(3)]
    rep = validate_disk(Triangulation(3, vertices, [(0, 1, 2), (1, 2, 0)]))
    assert any("repeated triangle" in f for f in rep.failures)
    rep = validate_disk(Triangulation(3, vertices, [(0, 1, 1)]))
    assert any("degenerate" in f for f in rep.failures)


def test_overfull_edge_reported():
    vertices = [Vertex(i, 0, i, Fraction(i)) for i in range(5)]
    tris = [(0, 1, 2), (0, 1, 3), (1, 0, 4)]
    rep = validate_disk(Triangulation(3, vertices, tris))
    assert any("lies in 3 triangles" in f for f in rep.failures)


def test_empty_triangle_list_is_invalid():
    vertices = [Vertex(i, 0, i, Fraction(i)) for i in range(3)]
    rep = validate_disk(Triangulation(3, vertices, []))
    assert rep.failures == ["complex has no triangles"]


def test_contiguous_vertex_ids_enforced():
    with pytest.raises(ValueError, match="contiguous"):
        Triangulation(3, [Vertex(1, 0, 0, None)], [(0, 1, 2)])


def test_boundary_cycle_of_cone():
    assert boundary_cycle(cone_over_cycle(5)) == [0, 1, 2, 3, 4]


def test_boundary_cycle_rejects_disjoint_triangles():
    vertices = [Vertex(i, 0, i, None) for i in range(6)]
    t = Triangulation(3, vertices, [(0, 1, 2), (3, 4, 5)])
    with pytest.raises(ValueError, match="more than one cycle"):
        boundary_cycle(t)


def test_skeleton_graph_of_cone():
    adj = skeleton_graph(cone_over_cycle(4))
    assert len(adj) == 5
    assert sum(len(nbrs) for nbrs in adj) == 2 * 8
    assert adj[4] == [0, 1, 2, 3]  # apex joined to the whole cycle


def test_edge_incidence_totals(small_build):
    # Three edge slots per triangle: boundary edges are counted once,
    # interior edges twice.
    t = small_build.triangulation
    rep = validate_disk(t)
    assert rep.ok, rep.failures
    assert 3 * t.num_triangles == rep.counts["boundary_edges"] + 2 * rep.counts["interior_edges"]


def test_built_filling_boundary_is_identity(small_build):
    t = small_build.triangulation
    assert boundary_cycle(t) == list(range(t.n))
