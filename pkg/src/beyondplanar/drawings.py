"""Drawings of beyond-planar graphs as planarizations.

A drawing is stored as a plane embedding whose vertex set is the real
vertices (a prefix 0..n_real-1) followed by degree-4 crossing dummies.
Each dummy records which two original edges cross there; everything else
(edge paths, the planar skeleton, per-face chord assignment) is derived.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .embeddings import FaceSet, PlaneEmbedding, min_rotation
from .errors import (
    MalformedDrawingError,
    SimplicityError,
    UsageError,
)
from .graphs import Graph, normalize_edge

Edge = tuple[int, int]


class TypeTag(str, Enum):
    ONE_PLANAR = "one-planar"
    TWO_PLANAR = "two-planar"
    IC_PLANAR = "ic-planar"
    NIC_PLANAR = "nic-planar"
    ONE_FAN_BUNDLE = "one-fan-bundle"
    RAC = "rac"

    @classmethod
    def parse(cls, text: str) -> "TypeTag":
        t = text.strip().lower().replace("_", "-")
        aliases = {
            "1-planar": cls.ONE_PLANAR,
            "2-planar": cls.TWO_PLANAR,
            "ic": cls.IC_PLANAR,
            "nic": cls.NIC_PLANAR,
            "1-fan-bundle": cls.ONE_FAN_BUNDLE,
        }
        if t in aliases:
            return aliases[t]
        for tag in cls:
            if tag.value == t:
                return tag
        raise UsageError(f"unknown graph type {text!r}")


class ValidationReport(NamedTuple):
    ok: bool
    violations: list[tuple[str, tuple]]

    @classmethod
    def from_violations(cls, violations: list[tuple[str, tuple]]) -> "ValidationReport":
        return cls(not violations, violations)


# vertex classes; anything but "crossing" is an actual vertex of the graph
REAL_CLASSES = ("real", "primal", "dual", "steiner")


class BeyondDrawing:
    """A drawing with crossings, stored as its planarization."""

    def __init__(
        self,
        planarization: PlaneEmbedding,
        n_real: int,
        pairing: dict[int, tuple[Edge, Edge]],
        classes: Sequence[str] | None = None,
    ):
        self.planarization = planarization
        self.n_real = n_real
        self.pairing = {
            x: tuple(sorted((normalize_edge(*e1), normalize_edge(*e2))))
            for x, (e1, e2) in pairing.items()
        }
        if classes is None:
            classes = ["real"] * n_real
        if len(classes) != n_real or any(c not in REAL_CLASSES for c in classes):
            raise UsageError("classes must label exactly the real vertices")
        self.classes = tuple(classes) + ("crossing",) * (planarization.n - n_real)
        self._validate()

    # -- invariants ----------------------------------------------------------

    def _validate(self) -> None:
        emb = self.planarization
        dummies = set(range(self.n_real, emb.n))
        if set(self.pairing) != dummies:
            raise MalformedDrawingError(
                "crossing dummies must be exactly the vertices past n_real"
            )
        for x in dummies:
            if emb.degree(x) != 4:
                raise MalformedDrawingError(f"crossing dummy {x} has degree != 4")
        for x, (e1, e2) in self.pairing.items():
            if set(e1) & set(e2):
                raise MalformedDrawingError(
                    f"adjacent edges {e1} and {e2} cross at {x}"
                )
        paths = self.edge_paths
        seen_pairs: set[tuple[Edge, Edge]] = set()
        for x, pair in self.pairing.items():
            if pair in seen_pairs:
                raise MalformedDrawingError(f"edges {pair} cross more than once")
            seen_pairs.add(pair)
        # every planarization edge must be a segment of exactly one edge
        n_segments = sum(len(p) - 1 for p in paths.values())
        if n_segments != emb.m:
            raise MalformedDrawingError("segments do not partition the drawing")

    # -- derived structure ----------------------------------------------------

    @cached_property
    def edge_paths(self) -> dict[Edge, list[int]]:
        """Original edge -> its planarization path (real, dummies..., real)."""
        emb = self.planarization
        paths: dict[Edge, list[int]] = {}
        claimed: set[tuple[int, int]] = set()  # directed segment starts

        def chase(start: int, first: int) -> list[int]:
            path = [start, first]
            prev, cur = start, first
            while cur >= self.n_real:
                rot = emb.rotation(cur)
                slot = rot.index(prev)
                nxt = rot[(slot + 2) % 4]
                path.append(nxt)
                prev, cur = cur, nxt
            return path

        for v in range(self.n_real):
            for u in emb.rotation(v):
                if (v, u) in claimed:
                    continue
                if u < self.n_real:
                    if v < u:
                        paths[(v, u)] = [v, u]
                    continue
                path = chase(v, u)
                end = path[-1]
                if end < path[0]:
                    path.reverse()
                e = (path[0], path[-1])
                if e[0] == e[1]:
                    raise MalformedDrawingError(f"edge path loops back at {e[0]}")
                if e in paths:
                    raise MalformedDrawingError(f"two paths claim edge {e}")
                paths[e] = path
                claimed.add((path[0], path[1]))
                claimed.add((path[-1], path[-2]))
                # consistency with the declared pairing at every dummy
                for i in range(1, len(path) - 1):
                    x = path[i]
                    if e not in self.pairing[x]:
                        raise MalformedDrawingError(
                            f"edge {e} passes dummy {x} not paired with it"
                        )
        return paths

    @cached_property
    def graph(self) -> Graph:
        return Graph(self.n_real, list(self.edge_paths))

    @cached_property
    def crossings_per_edge(self) -> dict[Edge, int]:
        return {e: len(p) - 2 for e, p in self.edge_paths.items()}

    @cached_property
    def crossing_pairs(self) -> list[tuple[Edge, Edge, int]]:
        """One (edge, edge, dummy) triple per crossing, dummy order."""
        return [
            (e1, e2, x) for x, (e1, e2) in sorted(self.pairing.items())
        ]

    @cached_property
    def crossed_edges(self) -> set[Edge]:
        return {e for e, c in self.crossings_per_edge.items() if c > 0}

    @cached_property
    def segment_origin(self) -> dict[Edge, Edge]:
        """Planarization edge -> the original edge it belongs to."""
        origin: dict[Edge, Edge] = {}
        for e, path in self.edge_paths.items():
            for a, b in zip(path, path[1:]):
                origin[normalize_edge(a, b)] = e
        return origin

    # -- planar skeleton -------------------------------------------------------

    @cached_property
    def _skeleton_data(self) -> tuple[PlaneEmbedding, dict[Edge, int]]:
        emb = self.planarization
        crossed = self.crossed_edges
        origin = self.segment_origin
        removed_dart = [False] * emb.dart_count
        for d in range(emb.dart_count):
            seg = normalize_edge(emb.dart_tail[d], emb.rot_flat[d])
            if origin[seg] in crossed:
                removed_dart[d] = True
        rotations: list[list[int]] = []
        for v in range(self.n_real):
            rot = [
                emb.rot_flat[d]
                for d in range(emb.rot_start[v], emb.rot_start[v + 1])
                if not removed_dart[d]
            ]
            rotations.append(rot)
        # union-find over planarization faces, merged across removed edges
        fs = emb.faces()
        parent = list(range(len(fs)))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        face_of = fs.face_of_dart
        twin = emb.twin
        for d in range(emb.dart_count):
            if removed_dart[d] and d < twin[d]:
                ra, rb = find(face_of[d]), find(face_of[twin[d]])
                if ra != rb:
                    parent[ra] = rb
        # a surviving dart identifying the skeleton face of each region
        region_dart: dict[int, tuple[int, int]] = {}
        for d in range(emb.dart_count):
            if not removed_dart[d]:
                r = find(face_of[d])
                if r not in region_dart:
                    region_dart[r] = (emb.dart_tail[d], emb.rot_flat[d])
        outer_region = find(face_of[emb.outer_dart])
        if outer_region not in region_dart:
            raise MalformedDrawingError("outer region has no uncrossed boundary")
        skel = PlaneEmbedding(rotations, outer_dart=region_dart[outer_region])
        # map each crossed edge to the skeleton face containing it
        chord_face: dict[Edge, int] = {}
        for e in crossed:
            path = self.edge_paths[e]
            d = emb.dart_id(path[0], path[1])
            r = find(face_of[d])
            t, h = region_dart[r]
            chord_face[e] = skel.face_of_dart_pair(t, h)
        return skel, chord_face

    def skeleton(self) -> PlaneEmbedding:
        """Sub-embedding induced by the uncrossed edges."""
        return self._skeleton_data[0]

    @cached_property
    def chords_by_face(self) -> dict[int, list[Edge]]:
        """Skeleton face id -> crossed original edges drawn inside it."""
        _, chord_face = self._skeleton_data
        by_face: dict[int, list[Edge]] = {}
        for e in sorted(chord_face):
            by_face.setdefault(chord_face[e], []).append(e)
        return by_face

    # -- crossing-rule validation ----------------------------------------------

    def validate_type(self, t: TypeTag | str) -> ValidationReport:
        t = TypeTag.parse(t) if isinstance(t, str) else t
        violations: list[tuple[str, tuple]] = []
        counts = self.crossings_per_edge
        if t in (TypeTag.ONE_PLANAR, TypeTag.IC_PLANAR, TypeTag.NIC_PLANAR, TypeTag.RAC):
            limit = 1
        elif t is TypeTag.TWO_PLANAR:
            limit = 2
        else:
            limit = None
        if limit is not None:
            for e in sorted(counts):
                if counts[e] > limit:
                    violations.append(("edge-crossed-too-often", (e, counts[e])))
        if t is TypeTag.IC_PLANAR:
            incident: dict[int, list[Edge]] = {}
            for e in sorted(self.crossed_edges):
                for v in e:
                    incident.setdefault(v, []).append(e)
            for v in sorted(incident):
                if len(incident[v]) > 1:
                    violations.append(
                        ("vertex-on-two-crossed-edges", (v, *incident[v]))
                    )
        if t is TypeTag.NIC_PLANAR:
            pairs = self.crossing_pairs
            for i in range(len(pairs)):
                e1, e2, _ = pairs[i]
                vs1 = set(e1) | set(e2)
                for j in range(i + 1, len(pairs)):
                    f1, f2, _ = pairs[j]
                    shared = vs1 & (set(f1) | set(f2))
                    if len(shared) > 1:
                        violations.append(
                            (
                                "crossing-pairs-share-vertices",
                                ((e1, e2), (f1, f2), tuple(sorted(shared))),
                            )
                        )
        if t is TypeTag.ONE_FAN_BUNDLE:
            violations.extend(self._fan_bundle_surrogate())
        return ValidationReport.from_violations(violations)

    def _fan_bundle_surrogate(self) -> list[tuple[str, tuple]]:
        """Structural stand-in: pentangulation skeleton, at most four chords
        per face, each chord spanning one face."""
        violations: list[tuple[str, tuple]] = []
        try:
            skel = self.skeleton()
        except Exception:
            return [("skeleton-not-an-embedding", ())]
        fs = skel.faces()
        for fid in range(len(fs)):
            if fs.sizes[fid] != 5:
                violations.append(("skeleton-face-not-pentagon", (fs.walk(fid),)))
        for fid, chords in sorted(self.chords_by_face.items()):
            if len(chords) > 4:
                violations.append(
                    ("face-carries-more-than-four-chords", (fs.walk(fid), len(chords)))
                )
            boundary = set(fs.walk(fid))
            for e in chords:
                if not set(e) <= boundary:
                    violations.append(("chord-leaves-its-face", (e, fs.walk(fid))))
        return violations


# -- declared crossing patterns inside one face ----------------------------------


def _interleaves(c1: tuple[int, int], c2: tuple[int, int], size: int) -> bool:
    """Whether two chords of a convex face cross (by walk positions)."""
    a, b = c1
    c, d = c2
    if len({a, b, c, d}) < 4:
        return False
    inside_c = (c - a) % size < (b - a) % size
    inside_d = (d - a) % size < (b - a) % size
    return inside_c != inside_d


def overlay_crossings(
    skeleton: PlaneEmbedding,
    inserts: Sequence[tuple[Sequence[int] | int, Sequence[Edge]]],
    declared: dict[int, list[tuple[Edge, Edge]]] | None = None,
    n_real: int | None = None,
    classes: Sequence[str] | None = None,
) -> BeyondDrawing:
    """Build a drawing by inserting crossing chords into faces of a skeleton.

    Each insert is (face, chords): the face given by id or boundary walk,
    the chords as vertex pairs on that face. Chords are drawn straight in
    convex position, so two chords cross iff their endpoints interleave;
    a declared pattern, when provided, must match exactly. Every chord
    must cross at least one other so that the skeleton is preserved.
    """
    fs = skeleton.faces()
    n0 = skeleton.n
    rotations = skeleton.rotations()
    existing = {normalize_edge(u, v) for u, v in skeleton.graph.edges}
    pairing: dict[int, tuple[Edge, Edge]] = {}
    next_dummy = n0
    used_faces: set[int] = set()
    # corner splices keyed by original skeleton slots; applied at the end so
    # inserts into several faces at one vertex cannot shift each other
    pending: dict[tuple[int, int], list[int]] = {}

    for idx, (face_spec, chords) in enumerate(inserts):
        fid = face_spec if isinstance(face_spec, int) else fs.find(face_spec)
        if fid in used_faces:
            raise UsageError(f"two inserts target face {fid}")
        used_faces.add(fid)
        walk = fs.walk(fid)
        size = len(walk)
        if len(set(walk)) != size:
            raise UsageError("overlay requires a simple face boundary")
        pos = {v: i for i, v in enumerate(walk)}
        pchords: list[tuple[int, int]] = []
        for u, v in chords:
            if u not in pos or v not in pos:
                raise UsageError(f"chord ({u},{v}) not on face {walk}")
            e = normalize_edge(u, v)
            if e in existing:
                raise SimplicityError(f"chord {e} duplicates an edge")
            existing.add(e)
            pchords.append((min(pos[u], pos[v]), max(pos[u], pos[v])))
        crossing_at: dict[tuple[int, int], list[tuple[int, int]]] = {
            c: [] for c in pchords
        }
        pairs: list[tuple[tuple[int, int], tuple[int, int]]] = []
        for i in range(len(pchords)):
            for j in range(i + 1, len(pchords)):
                if _interleaves(pchords[i], pchords[j], size):
                    pairs.append((pchords[i], pchords[j]))
                    crossing_at[pchords[i]].append(pchords[j])
                    crossing_at[pchords[j]].append(pchords[i])
        if declared is not None and fid in declared:
            want = {
                tuple(
                    sorted(
                        (
                            normalize_edge(*p),
                            normalize_edge(*q),
                        )
                    )
                )
                for p, q in declared[fid]
            }
            got = {
                tuple(
                    sorted(
                        (
                            normalize_edge(walk[a], walk[b]),
                            normalize_edge(walk[c], walk[d]),
                        )
                    )
                )
                for (a, b), (c, d) in pairs
            }
            if want != got:
                raise UsageError(
                    f"declared crossing pattern on face {fid} is not realizable"
                )
        for c in pchords:
            if not crossing_at[c]:
                raise UsageError(
                    f"chord {normalize_edge(walk[c[0]], walk[c[1]])} crosses nothing;"
                    " it would change the skeleton"
                )
        # exact positions on the parabola model give the crossing order
        def cross_x(c1: tuple[int, int], c2: tuple[int, int]) -> Fraction:
            a, b = c1
            c, d = c2
            return Fraction(a * b - c * d, (a + b) - (c + d))

        dummy_of: dict[frozenset, int] = {}
        for p, q in pairs:
            dummy_of[frozenset((p, q))] = next_dummy
            rotations.append([])
            next_dummy += 1
        # chord paths: crossings ordered along the chord
        chord_path: dict[tuple[int, int], list[int]] = {}
        for c in pchords:
            hits = sorted(
                ((cross_x(c, o), o) for o in crossing_at[c]),
                key=lambda t: t[0],
            )
            xs = [x for x, _ in hits]
            if len(set(xs)) != len(xs):
                raise UsageError("three chords concurrent; pattern not in the table")
            chord_path[c] = [dummy_of[frozenset((c, o))] for _, o in hits]
        # dummy rotations: ccw order (a, c, b, d) for positions a<c<b<d
        for p, q in pairs:
            (a, b) = sorted(p)
            (c, d) = sorted(q)
            if not a < c < b < d:
                a, b, c, d = c, d, a, b
            x = dummy_of[frozenset((p, q))]

            def along(chord: tuple[int, int], towards: int) -> int:
                """Neighbor of dummy x along the chord, in the direction of
                the given endpoint position."""
                path = chord_path[chord]
                i = path.index(x)
                lo, hi = chord
                if towards == lo:
                    return path[i - 1] if i > 0 else walk[lo]
                return path[i + 1] if i + 1 < len(path) else walk[hi]

            rotations[x] = [
                along((a, b), a),
                along((c, d), c),
                along((a, b), b),
                along((c, d), d),
            ]
        # queue chord first-darts at the face corners, nearest target first
        darts = fs.darts(fid)
        at_corner: dict[int, list[tuple[int, int]]] = {}
        for (lo, hi) in chord_path:
            for src, dst in ((lo, hi), (hi, lo)):
                dist = (dst - src) % size
                at_corner.setdefault(src, []).append((dist, dst))
        for src, items in at_corner.items():
            items.sort()
            v = walk[src]
            d_out = darts[src]
            slot = d_out - skeleton.rot_start[v]
            inserted = []
            for _, dst in items:
                lo, hi = min(src, dst), max(src, dst)
                path = chord_path[(lo, hi)]
                inserted.append(path[0] if src == lo else path[-1])
            pending.setdefault((v, slot), []).extend(inserted)
        for p, q in pairs:
            e1 = normalize_edge(walk[p[0]], walk[p[1]])
            e2 = normalize_edge(walk[q[0]], walk[q[1]])
            pairing[dummy_of[frozenset((p, q))]] = (e1, e2)

    by_vertex: dict[int, list[tuple[int, list[int]]]] = {}
    for (v, slot), inserted in pending.items():
        by_vertex.setdefault(v, []).append((slot, inserted))
    for v, slot_items in by_vertex.items():
        for slot, inserted in sorted(slot_items, reverse=True):
            rotations[v][slot + 1 : slot + 1] = inserted

    outer = None
    if skeleton.outer_dart >= 0:
        outer = (
            skeleton.dart_tail[skeleton.outer_dart],
            skeleton.rot_flat[skeleton.outer_dart],
        )
    emb = PlaneEmbedding(rotations, outer_dart=outer)
    return BeyondDrawing(
        emb,
        n0 if n_real is None else n_real,
        pairing,
        classes=classes,
    )
