from __future__ import annotations

import pytest

from beyondplanar.drawings import BeyondDrawing, TypeTag, overlay_crossings
from beyondplanar.embeddings import PlaneEmbedding
from beyondplanar.errors import SimplicityError, UsageError


def square_embedding() -> PlaneEmbedding:
    return PlaneEmbedding([[1, 3], [2, 0], [3, 1], [0, 2]], outer_dart=(0, 3))


def x_quadrangle() -> BeyondDrawing:
    emb = square_embedding()
    inner = 1 - emb.outer_face_id
    return overlay_crossings(emb, [(inner, [(0, 2), (1, 3)])])


def x_pentagon(chords=None):
    emb = PlaneEmbedding(
        [[1, 4], [2, 0], [3, 1], [4, 2], [0, 3]], outer_dart=(0, 4)
    )
    inner = 1 - emb.outer_face_id
    if chords is None:
        chords = [(i, (i + 2) % 5) for i in range(5)]
    return overlay_crossings(emb, [(inner, chords)])


class TestOverlay:
    def test_x_quadrangle_structure(self):
        d = x_quadrangle()
        assert d.graph.m == 6  # K4
        assert d.planarization.n == 5
        assert d.crossings_per_edge[(0, 2)] == 1
        assert d.crossings_per_edge[(1, 3)] == 1
        assert d.crossings_per_edge[(0, 1)] == 0

    def test_x_pentagon_counts(self):
        d = x_pentagon()
        assert d.graph.m == 10  # K5
        assert len(d.pairing) == 5
        for i in range(5):
            assert d.crossings_per_edge[tuple(sorted((i, (i + 2) % 5)))] == 2
            assert d.crossings_per_edge[tuple(sorted((i, (i + 1) % 5)))] == 0

    def test_four_chord_pentagon_has_three_crossings(self):
        # brute force over the chord set: omitting one pentagram chord kills
        # the two crossings it carried, leaving 5 - 2 = 3
        d = x_pentagon(chords=[(0, 2), (1, 3), (2, 4), (3, 0)])
        assert len(d.pairing) == 3

    def test_duplicate_chord_rejected(self):
        emb = square_embedding()
        inner = 1 - emb.outer_face_id
        with pytest.raises(SimplicityError):
            overlay_crossings(emb, [(inner, [(0, 1), (1, 3)])])

    def test_chord_off_face_rejected(self):
        emb = square_embedding()
        inner = 1 - emb.outer_face_id
        with pytest.raises(UsageError):
            overlay_crossings(emb, [(inner, [(0, 7), (1, 3)])])

    def test_uncrossed_chord_rejected(self):
        d = x_pentagon  # noqa: F841  (only the call below matters)
        with pytest.raises(UsageError):
            x_pentagon(chords=[(0, 2)])

    def test_declared_pattern_checked(self):
        emb = square_embedding()
        inner = 1 - emb.outer_face_id
        chords = [(0, 2), (1, 3)]
        ok = overlay_crossings(
            emb,
            [(inner, chords)],
            declared={inner: [((0, 2), (1, 3))]},
        )
        assert len(ok.pairing) == 1
        with pytest.raises(UsageError):
            overlay_crossings(emb, [(inner, chords)], declared={inner: []})


class TestSkeleton:
    def test_skeleton_of_x_quadrangle_is_the_square(self):
        d = x_quadrangle()
        skel = d.skeleton()
        assert (skel.n, skel.m) == (4, 4)
        assert sorted(skel.faces().sizes) == [4, 4]

    def test_skeleton_roundtrip(self):
        emb = square_embedding()
        inner = 1 - emb.outer_face_id
        d = overlay_crossings(emb, [(inner, [(0, 2), (1, 3)])])
        assert d.skeleton() == emb

    def test_skeleton_of_planar_drawing_is_itself(self):
        emb = square_embedding()
        d = BeyondDrawing(emb, emb.n, {})
        assert d.skeleton() == emb

    def test_outer_face_fill(self):
        # chords inserted into the outer face leave the skeleton intact
        emb = square_embedding()
        d = overlay_crossings(emb, [(emb.outer_face_id, [(0, 2), (1, 3)])])
        assert d.skeleton() == emb
        assert len(d.pairing) == 1

    def test_chords_by_face(self):
        d = x_quadrangle()
        skel = d.skeleton()
        inner_faces = [
            fid
            for fid in range(2)
            if fid != skel.outer_face_id
        ]
        assert d.chords_by_face == {inner_faces[0]: [(0, 2), (1, 3)]}


class TestValidateType:
    def test_x_quadrangle_is_ic(self):
        assert x_quadrangle().validate_type(TypeTag.IC_PLANAR).ok

    def test_x_pentagon_not_one_planar_but_two_planar(self):
        d = x_pentagon()
        rep = d.validate_type(TypeTag.ONE_PLANAR)
        assert not rep.ok
        assert all(rule == "edge-crossed-too-often" for rule, _ in rep.violations)
        assert d.validate_type(TypeTag.TWO_PLANAR).ok

    def test_two_x_quads_sharing_two_vertices_violate_nic(self):
        # two squares glued along the edge (1,2), an X in each: the crossing
        # pairs share both vertices of the glued edge
        emb = PlaneEmbedding(
            [
                [1, 3],
                [4, 0, 2],
                [5, 1, 3],
                [2, 0],
                [1, 5],
                [4, 2],
            ],
            outer_dart=(0, 3),
        )
        fs = emb.faces()
        qa = fs.find_by_vertices({0, 1, 2, 3})
        qb = fs.find_by_vertices({1, 2, 4, 5})
        d = overlay_crossings(
            emb, [(qa, [(0, 2), (1, 3)]), (qb, [(1, 5), (2, 4)])]
        )
        assert d.validate_type(TypeTag.ONE_PLANAR).ok
        rep = d.validate_type(TypeTag.NIC_PLANAR)
        assert not rep.ok
        rule, witness = rep.violations[0]
        assert rule == "crossing-pairs-share-vertices"
        assert witness[2] == (1, 2)

    def test_ic_violation_witness_names_vertex(self):
        # one vertex on two crossed edges
        emb = PlaneEmbedding(
            [
                [1, 3],
                [4, 0, 2],
                [5, 1, 3],
                [2, 0],
                [1, 5],
                [4, 2],
            ],
            outer_dart=(0, 3),
        )
        fs = emb.faces()
        qa = fs.find_by_vertices({0, 1, 2, 3})
        qb = fs.find_by_vertices({1, 2, 4, 5})
        d = overlay_crossings(
            emb, [(qa, [(0, 2), (1, 3)]), (qb, [(1, 5), (2, 4)])]
        )
        rep = d.validate_type(TypeTag.IC_PLANAR)
        assert not rep.ok
        assert rep.violations[0][0] == "vertex-on-two-crossed-edges"

    def test_inclusion_chain_on_x_quadrangle(self):
        d = x_quadrangle()
        assert d.validate_type(TypeTag.IC_PLANAR).ok
        assert d.validate_type(TypeTag.NIC_PLANAR).ok
        assert d.validate_type(TypeTag.ONE_PLANAR).ok
        assert d.validate_type(TypeTag.TWO_PLANAR).ok
