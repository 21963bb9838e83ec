"""Plane embeddings as rotation systems.

A rotation system lists, for every vertex, its neighbors in cyclic order.
Faces are orbits of the next-dart permutation; with rotations read as
counterclockwise, every bounded face is traversed counterclockwise and has
the face region on the left of each dart.

Darts are indexed into flat arrays (CSR layout) so face traversal stays
linear-time and memory-lean on hosts with millions of darts.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    MalformedEmbeddingError,
    NonSimpleDualError,
    SimplicityError,
    UsageError,
)
from .graphs import Graph, normalize_edge


class FaceSet:
    """All faces of an embedding, as index arrays plus on-demand walks."""

    def __init__(self, emb: "PlaneEmbedding"):
        self._emb = emb
        nd = emb.dart_count
        nxt = emb.next_dart
        face_of = [-1] * nd
        starts: list[int] = []
        sizes: list[int] = []
        for d0 in range(nd):
            if face_of[d0] >= 0:
                continue
            fid = len(starts)
            starts.append(d0)
            size = 0
            d = d0
            while True:
                face_of[d] = fid
                size += 1
                d = nxt[d]
                if d == d0:
                    break
            sizes.append(size)
        self.face_of_dart = face_of
        self.start_dart = starts
        self.sizes = sizes

    def __len__(self) -> int:
        return len(self.start_dart)

    def darts(self, fid: int) -> list[int]:
        out = []
        d0 = self.start_dart[fid]
        d = d0
        nxt = self._emb.next_dart
        while True:
            out.append(d)
            d = nxt[d]
            if d == d0:
                break
        return out

    def walk(self, fid: int) -> tuple[int, ...]:
        """Boundary walk of the face: tails of its darts, in orbit order."""
        tails = self._emb.dart_tail
        return tuple(tails[d] for d in self.darts(fid))

    def key(self, fid: int) -> tuple[int, ...]:
        """Canonical id: lexicographically minimal rotation of the walk."""
        return min_rotation(self.walk(fid))

    def find(self, walk: Sequence[int]) -> int:
        """Face whose canonical key matches the given walk (first match)."""
        target = min_rotation(tuple(walk))
        for fid in range(len(self)):
            if self.sizes[fid] == len(target) and self.key(fid) == target:
                return fid
        raise UsageError(f"no face with boundary {tuple(walk)}")

    def find_by_vertices(self, vertices: Iterable[int]) -> int:
        """The unique face whose boundary vertex set matches."""
        want = set(vertices)
        hits = [
            fid
            for fid in range(len(self))
            if self.sizes[fid] == len(want) and set(self.walk(fid)) == want
        ]
        if len(hits) != 1:
            raise UsageError(f"{len(hits)} faces on vertices {sorted(want)}")
        return hits[0]

    def ids_of_size(self, k: int) -> list[int]:
        return [fid for fid, s in enumerate(self.sizes) if s == k]


def min_rotation(seq: tuple[int, ...]) -> tuple[int, ...]:
    if not seq:
        return seq
    n = len(seq)
    best = seq
    for i in range(1, n):
        cand = seq[i:] + seq[:i]
        if cand < best:
            best = cand
    return best


class PlaneEmbedding:
    """Immutable plane embedding of a simple connected graph."""

    __slots__ = (
        "n",
        "rot_flat",
        "rot_start",
        "dart_tail",
        "twin",
        "outer_dart",
        "__dict__",
    )

    def __init__(
        self,
        rotations: Sequence[Sequence[int]],
        outer_dart: tuple[int, int] | None = None,
        check_planarity: bool = True,
    ):
        n = len(rotations)
        self.n = n
        rot_flat: list[int] = []
        rot_start = [0] * (n + 1)
        for v, nbrs in enumerate(rotations):
            rot_flat.extend(int(u) for u in nbrs)
            rot_start[v + 1] = len(rot_flat)
        self.rot_flat = rot_flat
        self.rot_start = rot_start
        nd = len(rot_flat)
        tails = [0] * nd
        for v in range(n):
            for d in range(rot_start[v], rot_start[v + 1]):
                tails[d] = v
        self.dart_tail = tails
        self._validate_simple()
        self.twin = self._build_twin()
        if check_planarity:
            self._check_connected_and_genus()
        if outer_dart is None:
            self.outer_dart = 0 if nd else -1
        else:
            self.outer_dart = self.dart_id(*outer_dart)

    # -- construction internals -------------------------------------------

    def _validate_simple(self) -> None:
        n = self.n
        for v in range(n):
            lo, hi = self.rot_start[v], self.rot_start[v + 1]
            nbrs = self.rot_flat[lo:hi]
            if v in nbrs:
                raise MalformedEmbeddingError(f"loop at vertex {v}")
            if len(set(nbrs)) != len(nbrs):
                raise MalformedEmbeddingError(f"repeated neighbor at vertex {v}")
            for u in nbrs:
                if not (0 <= u < n):
                    raise MalformedEmbeddingError(f"neighbor {u} out of range")

    def _build_twin(self) -> list[int]:
        nd = self.dart_count
        if nd == 0:
            return []
        tails = np.asarray(self.dart_tail, dtype=np.int64)
        heads = np.asarray(self.rot_flat, dtype=np.int64)
        lo = np.minimum(tails, heads)
        hi = np.maximum(tails, heads)
        code = lo * (self.n + 1) + hi
        order = np.lexsort((tails, code))
        codes_sorted = code[order]
        if nd % 2 or np.any(codes_sorted[0::2] != codes_sorted[1::2]):
            raise MalformedEmbeddingError("rotation system is not symmetric")
        twin = np.empty(nd, dtype=np.int64)
        a = order[0::2]
        b = order[1::2]
        twin[a] = b
        twin[b] = a
        return twin.tolist()

    def _check_connected_and_genus(self) -> None:
        if self.n <= 1:
            return
        seen = bytearray(self.n)
        seen[0] = 1
        stack = [0]
        count = 1
        rf, rs = self.rot_flat, self.rot_start
        while stack:
            v = stack.pop()
            for d in range(rs[v], rs[v + 1]):
                u = rf[d]
                if not seen[u]:
                    seen[u] = 1
                    count += 1
                    stack.append(u)
        if count != self.n:
            raise MalformedEmbeddingError("embedding must be connected")
        f = len(self.faces())
        if self.n - self.m + f != 2:
            raise MalformedEmbeddingError(
                f"rotation system has positive genus: n={self.n} m={self.m} f={f}"
            )

    # -- basic accessors ----------------------------------------------------

    @property
    def dart_count(self) -> int:
        return len(self.rot_flat)

    @property
    def m(self) -> int:
        return self.dart_count // 2

    def degree(self, v: int) -> int:
        return self.rot_start[v + 1] - self.rot_start[v]

    def rotation(self, v: int) -> tuple[int, ...]:
        return tuple(self.rot_flat[self.rot_start[v] : self.rot_start[v + 1]])

    def rotations(self) -> list[list[int]]:
        return [list(self.rotation(v)) for v in range(self.n)]

    def dart_id(self, tail: int, head: int) -> int:
        for d in range(self.rot_start[tail], self.rot_start[tail + 1]):
            if self.rot_flat[d] == head:
                return d
        raise UsageError(f"no dart {tail}->{head}")

    def dart_head(self, d: int) -> int:
        return self.rot_flat[d]

    @cached_property
    def next_dart(self) -> list[int]:
        """Face successor: rotation predecessor of the twin dart.

        With rotations read counterclockwise this traverses every face with
        its region on the left; bounded faces come out counterclockwise.
        """
        nd = self.dart_count
        nxt = [0] * nd
        rs = self.rot_start
        tails = self.dart_tail
        twin = self.twin
        for d in range(nd):
            t = twin[d]
            v = tails[t]
            lo, hi = rs[v], rs[v + 1]
            nxt[d] = hi - 1 if t == lo else t - 1
        return nxt

    @cached_property
    def graph(self) -> Graph:
        edges = set()
        for d in range(self.dart_count):
            u, v = self.dart_tail[d], self.rot_flat[d]
            if u < v:
                edges.add((u, v))
        return Graph(self.n, edges)

    def faces(self) -> FaceSet:
        if "_faces" not in self.__dict__:
            self.__dict__["_faces"] = FaceSet(self)
        return self.__dict__["_faces"]

    @property
    def outer_face_id(self) -> int:
        if self.outer_dart < 0:
            raise UsageError("embedding has no darts, hence no faces")
        return self.faces().face_of_dart[self.outer_dart]

    def face_of_dart_pair(self, tail: int, head: int) -> int:
        return self.faces().face_of_dart[self.dart_id(tail, head)]

    def __repr__(self) -> str:
        return f"PlaneEmbedding(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneEmbedding):
            return NotImplemented
        return (
            self.n == other.n
            and self.rot_flat == other.rot_flat
            and self.rot_start == other.rot_start
            and self.outer_dart == other.outer_dart
        )

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.rot_flat), tuple(self.rot_start)))

    # -- derived embeddings ---------------------------------------------------

    def dual(self) -> "PlaneEmbedding":
        """Dual embedding: one vertex per face, one edge per primal edge.

        Raises NonSimpleDualError when two faces share more than one edge or
        a face is adjacent to itself (bridges), with the full slot list as
        payload.
        """
        fs = self.faces()
        fcount = len(fs)
        face_of = fs.face_of_dart
        twin = self.twin
        slots: list[tuple[int, int]] = []
        for d in range(self.dart_count):
            if d < twin[d]:
                f, g = face_of[d], face_of[twin[d]]
                slots.append(normalize_edge(f, g))
        slots.sort()
        simple = all(a != b for a, b in slots) and len(set(slots)) == len(slots)
        if not simple:
            raise NonSimpleDualError(fcount, slots)
        rotations: list[list[int]] = []
        for fid in range(fcount):
            rotations.append([face_of[twin[d]] for d in fs.darts(fid)])
        # outer face of the dual: the face dual to primal vertex 0 exists,
        # but any consistent choice works; keep the first dart's face.
        return PlaneEmbedding(rotations)

    def medial(self) -> "PlaneEmbedding":
        """Medial graph: a 4-regular embedding with one vertex per edge.

        Faces of the medial correspond to primal vertices (size = degree)
        and primal faces (size = face size).
        """
        edge_ids: dict[tuple[int, int], int] = {}
        for d in range(self.dart_count):
            u, v = self.dart_tail[d], self.rot_flat[d]
            e = normalize_edge(u, v)
            if e not in edge_ids:
                edge_ids[e] = len(edge_ids)
        edge_ids = {e: i for i, e in enumerate(sorted(edge_ids))}

        def succ(v: int, d: int, step: int) -> int:
            lo, hi = self.rot_start[v], self.rot_start[v + 1]
            return lo + (d - lo + step) % (hi - lo)

        rotations = [[0, 0, 0, 0] for _ in range(len(edge_ids))]
        for d in range(self.dart_count):
            u, v = self.dart_tail[d], self.rot_flat[d]
            if u > v:
                continue
            e = edge_ids[(u, v)]
            du = d
            dv = self.twin[d]

            def mid(vertex: int, dart: int, step: int) -> int:
                s = succ(vertex, dart, step)
                a, b = vertex, self.rot_flat[s]
                return edge_ids[normalize_edge(a, b)]

            rotations[e] = [
                mid(v, dv, 1),
                mid(v, dv, -1),
                mid(u, du, 1),
                mid(u, du, -1),
            ]
        return PlaneEmbedding(rotations)

    def radial(self) -> tuple["PlaneEmbedding", int]:
        """Vertex-face incidence graph (a quadrangulation for 2-connected
        input, 3-connected when the input is).

        Returns (embedding, n) where face vertices are numbered n..n+f-1 in
        face-id order; each primal face fid maps to vertex n + fid.
        """
        fs = self.faces()
        n = self.n
        face_of = fs.face_of_dart
        rotations: list[list[int]] = []
        rs, rf = self.rot_start, self.rot_flat
        for v in range(n):
            rot: list[int] = []
            for d in range(rs[v], rs[v + 1]):
                rot.append(rf[d])
                rot.append(n + face_of[d])
            rotations.append(rot)
        # at this point rotations[v] alternates neighbor, corner-face; the
        # radial keeps only the face entries
        for v in range(n):
            rotations[v] = rotations[v][1::2]
        for fid in range(len(fs)):
            rotations.append(list(fs.walk(fid)))
        emb = PlaneEmbedding(rotations)
        return emb, n


# -- bulk face surgery ---------------------------------------------------------


def add_chords(
    emb: PlaneEmbedding,
    chords_by_face: dict[int, list[tuple[int, int]]],
    outer_dart: tuple[int, int] | None = None,
) -> PlaneEmbedding:
    """Insert non-crossing chords into faces, one global rebuild.

    Chords are given per face as pairs of *positions* on the face walk
    (so walks with repeated vertices stay unambiguous). Within each face
    the chords must be pairwise non-crossing as position pairs (nested or
    disjoint). Raises SimplicityError for loops and duplicate edges.
    """
    new_rot = emb.rotations()
    existing = {
        normalize_edge(emb.dart_tail[d], emb.rot_flat[d])
        for d in range(emb.dart_count)
    }
    fs = emb.faces()
    # queued insertions: per (vertex, slot-of-outgoing-boundary-dart) a list
    # of (walk distance, neighbor) to splice after that slot
    pending: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for fid, chords in chords_by_face.items():
        walk = fs.walk(fid)
        darts = fs.darts(fid)
        L = len(walk)
        seen_here: set[tuple[int, int]] = set()
        for i, j in chords:
            if i == j or not (0 <= i < L and 0 <= j < L):
                raise UsageError(f"bad chord positions ({i},{j}) on face {fid}")
            a, b = walk[i], walk[j]
            if a == b:
                raise SimplicityError(f"chord would be a loop at vertex {a}")
            e = normalize_edge(a, b)
            if e in existing or e in seen_here:
                raise SimplicityError(f"chord {e} duplicates an edge")
            seen_here.add(e)
            for src, dst in ((i, j), (j, i)):
                dist = (dst - src) % L
                d_out = darts[src]
                v = emb.dart_tail[d_out]
                slot = d_out - emb.rot_start[v]
                pending.setdefault((v, slot), []).append((dist, walk[dst]))
        existing |= seen_here
    for (v, slot), items in pending.items():
        items.sort()
    # splice per vertex, descending slot so earlier slots stay valid
    by_vertex: dict[int, list[tuple[int, list[tuple[int, int]]]]] = {}
    for (v, slot), items in pending.items():
        by_vertex.setdefault(v, []).append((slot, items))
    for v, slot_items in by_vertex.items():
        rot = new_rot[v]
        for slot, items in sorted(slot_items, reverse=True):
            # new darts sit after the outgoing boundary dart, nearest first
            rot[slot + 1 : slot + 1] = [u for _, u in items]
    if outer_dart is None and emb.outer_dart >= 0:
        outer_dart = (
            emb.dart_tail[emb.outer_dart],
            emb.rot_flat[emb.outer_dart],
        )
    return PlaneEmbedding(new_rot, outer_dart=outer_dart)


def subdivide_edges(
    emb: PlaneEmbedding,
    edges: Iterable[tuple[int, int]],
    points: int = 1,
    outer_dart: tuple[int, int] | None = None,
) -> tuple[PlaneEmbedding, dict[tuple[int, int], list[int]]]:
    """Replace each listed edge by a path through fresh degree-2 vertices.

    Returns the new embedding and a map edge -> its interior path vertices
    ordered from the smaller endpoint.
    """
    new_rot = emb.rotations()
    mapping: dict[tuple[int, int], list[int]] = {}
    next_id = emb.n
    todo = sorted({normalize_edge(u, v) for u, v in edges})
    for u, v in todo:
        mids = list(range(next_id, next_id + points))
        next_id += points
        mapping[(u, v)] = mids
        new_rot[u][new_rot[u].index(v)] = mids[0]
        new_rot[v][new_rot[v].index(u)] = mids[-1]
        chain = [u] + mids + [v]
        for k, mid in enumerate(mids):
            new_rot.append([chain[k], chain[k + 2]])
    if outer_dart is None and emb.outer_dart >= 0:
        od_t = emb.dart_tail[emb.outer_dart]
        od_h = emb.rot_flat[emb.outer_dart]
        e = normalize_edge(od_t, od_h)
        if e in mapping:
            first = mapping[e][0] if od_t == e[0] else mapping[e][-1]
            outer_dart = (od_t, first)
        else:
            outer_dart = (od_t, od_h)
    return PlaneEmbedding(new_rot, outer_dart=outer_dart), mapping
