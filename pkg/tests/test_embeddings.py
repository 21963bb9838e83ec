from __future__ import annotations

import itertools

import pytest

from beyondplanar.embeddings import PlaneEmbedding, add_chords, subdivide_edges
from beyondplanar.errors import MalformedEmbeddingError, NonSimpleDualError
from beyondplanar.graphs import Graph, is_planar_3connected


def dodecahedron_graph_from_coordinates() -> Graph:
    """Independent oracle: the solid's skeleton from its vertex coordinates."""
    phi = (1 + 5 ** 0.5) / 2
    pts = [
        (x, y, z)
        for x in (-1.0, 1.0)
        for y in (-1.0, 1.0)
        for z in (-1.0, 1.0)
    ]
    for a, b in ((0.0, 1 / phi), (1 / phi, phi * 0), (0.0, 0.0)):
        pass
    for s1 in (-1.0, 1.0):
        for s2 in (-1.0, 1.0):
            pts.append((0.0, s1 / phi, s2 * phi))
            pts.append((s1 / phi, s2 * phi, 0.0))
            pts.append((s1 * phi, 0.0, s2 / phi))
    assert len(pts) == 20

    def d2(p, q):
        return sum((a - b) ** 2 for a, b in zip(p, q))

    dists = sorted(d2(p, q) for p, q in itertools.combinations(pts, 2))
    edge_len = dists[0]
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(20), 2)
        if abs(d2(pts[i], pts[j]) - edge_len) < 1e-9
    ]
    return Graph(20, edges)


class TestFaces:
    def test_k4_has_four_triangles(self, k4_embedding):
        fs = k4_embedding.faces()
        assert len(fs) == 4
        assert sorted(fs.sizes) == [3, 3, 3, 3]
        assert k4_embedding.faces().walk(k4_embedding.outer_face_id) in (
            (0, 2, 1),
            (2, 1, 0),
            (1, 0, 2),
        )

    def test_cube_has_six_squares(self, cube_embedding):
        fs = cube_embedding.faces()
        assert len(fs) == 6
        assert sorted(fs.sizes) == [4] * 6

    def test_single_cycle_has_two_pentagon_faces(self, pentagon_embedding):
        fs = pentagon_embedding.faces()
        assert len(fs) == 2
        assert fs.sizes == [5, 5]

    def test_dodecahedron_by_coordinates(self):
        g = dodecahedron_graph_from_coordinates()
        assert (g.n, g.m) == (20, 30)
        report = is_planar_3connected(g)
        assert report.planar and report.three_connected
        fs = report.embedding.faces()
        assert len(fs) == 12
        assert sorted(fs.sizes) == [5] * 12

    def test_inconsistent_rotation_rejected(self):
        with pytest.raises(MalformedEmbeddingError):
            PlaneEmbedding([[1], [0], [0]])  # dart 2->0 has no partner
        with pytest.raises(MalformedEmbeddingError):
            PlaneEmbedding([[1, 1], [0, 0]])

    def test_positive_genus_rejected(self):
        # K5 has no plane rotation system; any rotation order has genus > 0
        rotations = [[u for u in range(5) if u != v] for v in range(5)]
        with pytest.raises(MalformedEmbeddingError):
            PlaneEmbedding(rotations)

    def test_euler_formula(self, cube_embedding, k4_embedding):
        for emb in (cube_embedding, k4_embedding):
            assert emb.n - emb.m + len(emb.faces()) == 2


class TestDual:
    def test_cube_dual_is_octahedron(self, cube_embedding):
        dual = cube_embedding.dual()
        assert (dual.n, dual.m) == (6, 12)
        assert sorted(dual.degree(v) for v in range(6)) == [4] * 6

    def test_dodecahedron_dual_is_icosahedron(self):
        g = dodecahedron_graph_from_coordinates()
        emb = is_planar_3connected(g).embedding
        dual = emb.dual()
        assert (dual.n, dual.m) == (12, 30)
        assert sorted(dual.degree(v) for v in range(12)) == [5] * 12

    def test_dual_of_dual_graph_isomorphic(self, cube_embedding):
        import networkx as nx

        dd = cube_embedding.dual().dual()
        assert nx.is_isomorphic(dd.graph.to_networkx(), cube_embedding.graph.to_networkx())

    def test_triangle_dual_flagged_non_simple(self):
        tri = PlaneEmbedding([[1, 2], [2, 0], [0, 1]])
        with pytest.raises(NonSimpleDualError) as err:
            tri.dual()
        assert err.value.n == 2
        assert err.value.edge_slots == [(0, 1), (0, 1), (0, 1)]

    def test_face_size_multiset_matches_primal_degrees(self, cube_embedding):
        dual = cube_embedding.dual()
        dual_face_sizes = sorted(dual.faces().sizes)
        primal_degrees = sorted(cube_embedding.degree(v) for v in range(cube_embedding.n))
        assert dual_face_sizes == primal_degrees


class TestDerived:
    def test_medial_of_cube_is_cuboctahedron(self, cube_embedding):
        med = cube_embedding.medial()
        assert (med.n, med.m) == (12, 24)
        assert all(med.degree(v) == 4 for v in range(12))
        sizes = sorted(med.faces().sizes)
        assert sizes == [3] * 8 + [4] * 6

    def test_radial_of_cube(self, cube_embedding):
        rad, n0 = cube_embedding.radial()
        assert n0 == 8
        assert (rad.n, rad.m) == (14, 24)
        assert sorted(rad.faces().sizes) == [4] * 12

    def test_add_chords_triangulates_square_face(self, cube_embedding):
        fs = cube_embedding.faces()
        fid = next(f for f in range(6) if f != cube_embedding.outer_face_id)
        new = add_chords(cube_embedding, {fid: [(0, 2)]})
        assert new.m == 13
        assert sorted(new.faces().sizes) == [3, 3, 4, 4, 4, 4, 4]

    def test_subdivide_edges(self, k4_embedding):
        new, mapping = subdivide_edges(k4_embedding, [(0, 1)], points=2)
        assert new.n == 6 and new.m == 8
        assert mapping[(0, 1)] == [4, 5]
        assert new.degree(4) == new.degree(5) == 2
        assert len(new.faces()) == len(k4_embedding.faces())
