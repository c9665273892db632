import pytest
from hypothesis import given, settings, strategies as st

from clusterplane.errors import (
    AsymmetricRotation,
    BadOuterFace,
    NotATriangle,
    NotSimple,
    NotSphereEmbedding,
)
from clusterplane.generators import (
    cycle_graph,
    gen_pword,
    gen_stacked_3tree,
    gen_triangulation,
    octahedron,
    tetrahedron,
    triangle_graph,
)
from clusterplane.plane_graph import (
    add_outer_triangle,
    build_plane_graph,
    delete_vertices,
    disk_interior_vertices,
    embedding_from_faces,
    induced_subgraph,
    interior_subgraph,
)


def face_lengths(G):
    return sorted(f.length for f in G.faces)


def test_triangle_two_faces():
    G = build_plane_graph(3, [(1, 2), (2, 0), (0, 1)])
    assert face_lengths(G) == [3, 3]
    assert G.edge_count == 3


def test_k4_tetrahedron():
    G = tetrahedron()
    assert G.n == 4 and G.edge_count == 6
    assert face_lengths(G) == [3, 3, 3, 3]
    assert G.n - G.edge_count + len(G.faces) == 2


def test_not_simple_duplicate_neighbor():
    with pytest.raises(NotSimple):
        build_plane_graph(3, [(1, 1, 2), (0, 2), (0, 1)])


def test_not_simple_loop():
    with pytest.raises(NotSimple):
        build_plane_graph(2, [(0, 1), (0,)])


def test_asymmetric_rotation():
    with pytest.raises(AsymmetricRotation):
        build_plane_graph(3, [(1, 2), (2,), (0, 1)])


def test_nonplanar_k5_rejected():
    # K5 admits no sphere embedding, whatever the rotations
    rot = tuple(tuple(u for u in range(5) if u != v) for v in range(5))
    with pytest.raises(NotSphereEmbedding):
        build_plane_graph(5, rot)


def test_octahedron_faces():
    G = octahedron()
    assert G.n == 6 and G.edge_count == 12
    assert face_lengths(G) == [3] * 8
    assert all(G.degree(v) == 4 for v in range(6))
    # antipodal pairs are non-adjacent
    for a, b in [(0, 5), (1, 3), (2, 4)]:
        assert not G.has_edge(a, b)


def test_four_cycle_faces():
    G = cycle_graph(4)
    assert face_lengths(G) == [4, 4]


def test_single_edge_degenerate_walk():
    G = build_plane_graph(2, [(1,), (0,)])
    assert len(G.faces) == 1
    assert G.faces[0].length == 2


def test_face_length_sum_is_twice_edges():
    for G in [triangle_graph(), tetrahedron(), octahedron(), cycle_graph(7)]:
        assert sum(f.length for f in G.faces) == 2 * G.edge_count


def test_outer_face_hint_resolution():
    G = embedding_from_faces(
        [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)], outer=(0, 1, 2)
    )
    assert G.outer_face is not None
    assert G.faces[G.outer_face].vertices == frozenset({0, 1, 2})
    with pytest.raises(BadOuterFace):
        embedding_from_faces([(0, 1, 2), (0, 2, 1)], outer=(0, 1, 5))


def test_interior_subgraph_facial_triangle_is_empty():
    G = tetrahedron()  # outer face (0,1,2), inner vertex 3
    sub = interior_subgraph(G, (0, 1, 3))
    assert sub.n == 3
    assert sorted(sub.source_ids) == [0, 1, 3]


def test_interior_subgraph_outer_triangle_encloses_all():
    G = tetrahedron()
    sub = interior_subgraph(G, (0, 1, 2))
    assert sub.n == 4
    assert sorted(sub.source_ids) == [0, 1, 2, 3]


def test_interior_subgraph_double_stacked_k4():
    # stack vertex 4 into face (0, 3, 1) of the tetrahedron
    G = embedding_from_faces(
        [(0, 1, 2), (0, 2, 3), (1, 3, 2), (0, 4, 1), (1, 4, 3), (3, 4, 0)],
        outer=(0, 1, 2),
    )
    assert G.n == 5 and G.edge_count == 9
    sub = interior_subgraph(G, (0, 1, 3))
    assert sorted(sub.source_ids) == [0, 1, 3, 4]
    assert sub.edge_count == 6  # a K4


def test_interior_exterior_partition():
    G = gen_triangulation(12, seed=5)
    # designate some outer face
    tri = sorted(G.faces[0].vertices)
    G2 = build_plane_graph(G.n, G.rotations, outer_face_hint=tri)
    for K in G2.triangles():
        inside = disk_interior_vertices(G2, K)
        sub = interior_subgraph(G2, K)
        assert sorted(sub.source_ids) == sorted(set(K) | inside)
        rest = delete_vertices(G2, inside)
        assert sorted(rest.source_ids) == sorted(set(range(G2.n)) - inside)


def test_delete_octahedron_antipodal_pair():
    G = octahedron()
    H = delete_vertices(G, {0, 5})
    assert H.n == 4 and H.edge_count == 4
    assert face_lengths(H) == [4, 4]


def test_delete_nothing_is_identity():
    G = octahedron()
    H = delete_vertices(G, set())
    assert H.n == G.n and H.rotations == G.rotations
    assert H._face_signature() == G._face_signature()


def test_k4_minus_vertex_is_triangle():
    G = tetrahedron()
    H = delete_vertices(G, {3})
    assert H.n == 3 and H.edge_count == 3
    assert face_lengths(H) == [3, 3]


def test_determinism():
    a = gen_triangulation(30, seed=9)
    b = gen_triangulation(30, seed=9)
    assert a.rotations == b.rotations
    assert [f.walks for f in a.faces] == [f.walks for f in b.faces]


def test_disconnected_side_by_side():
    # two triangles: 0,1,2 and 3,4,5
    rot = [(1, 2), (2, 0), (0, 1), (4, 5), (5, 3), (3, 4)]
    G = build_plane_graph(6, rot)
    assert G.component_count() == 2
    # 4 walks, 3 faces: shared ambient face plus one interior face each
    assert len(G.walks) == 4
    assert len(G.faces) == 3
    assert G.outer_face is not None
    ambient = G.faces[G.outer_face]
    assert len(ambient.walks) == 2
    assert not ambient.is_two_cell
    assert ambient.length == 6


def test_isolated_vertex_component():
    rot = [(1, 2), (2, 0), (0, 1), ()]
    G = build_plane_graph(4, rot)
    assert G.component_count() == 2
    host = G.faces_at_vertex(3)[0]
    assert not G.faces[host].is_two_cell


def test_add_outer_triangle():
    G = octahedron()
    W = add_outer_triangle(G)
    assert W.n == 9
    assert W.outer_face is not None
    outer = W.faces[W.outer_face]
    assert outer.length == 3 and outer.vertices == frozenset({6, 7, 8})
    assert outer.is_two_cell
    # the octahedron's old outer walk now shares a face with the triangle
    merged = [f for f in W.faces if len(f.walks) == 2]
    assert len(merged) == 1
    assert merged[0].length == 6
    # no new adjacencies
    for v in range(6):
        assert W.neighbors(v) == G.neighbors(v)
    # interior of the new triangle is everything
    sub = interior_subgraph(W, (6, 7, 8))
    assert sub.n == 9


def test_not_a_triangle():
    G = octahedron()
    with pytest.raises(NotATriangle):
        interior_subgraph(G, (0, 1, 5))  # 0-5 not an edge


def test_facial_triangles_octahedron():
    G = octahedron()
    assert len(G.facial_triangles) == 8
    assert G.is_facial((0, 1, 2))
    assert not G.is_facial((0, 1, 5))


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=4, max_value=40), st.integers(min_value=0, max_value=2**63))
def test_random_triangulation_invariants(n, seed):
    G = gen_triangulation(n, seed)
    assert sum(f.length for f in G.faces) == 2 * G.edge_count
    assert G.n - G.edge_count + len(G.faces) == 2
    assert all(f.length == 3 for f in G.faces)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=3, max_value=40), st.integers(min_value=0, max_value=2**63))
def test_random_3tree_delete_keeps_embedding_valid(n, seed):
    G = gen_stacked_3tree(n, seed)
    # delete a deterministic third of the vertices; structure must revalidate
    drop = set(range(0, G.n, 3))
    H = delete_vertices(G, drop)
    assert sum(f.length for f in H.faces) == 2 * H.edge_count
    # rebuild from scratch must agree on faces
    if H.component_count() <= 1:
        H2 = build_plane_graph(H.n, H.rotations)
        assert len(H2.faces) == len(H.faces)


def test_pword_shape():
    G = gen_pword(2)
    assert G.n == 4 and G.edge_count == 5  # K4 minus one edge
    assert not G.has_edge(2, 3)
    G1 = gen_pword(1)
    assert G1.n == 3 and G1.edge_count == 2
    assert len(G1.faces) == 1
