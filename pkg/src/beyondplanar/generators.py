"""Constructions of optimal beyond-planar graphs.

Skeleton builders (pseudo double wheels, pentangulation expansions, square
insertions, primal-dual bases), crossing fills, the node-to-circle
3-regularization, and the public generate_optimal dispatch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

import networkx as nx

from .drawings import BeyondDrawing, TypeTag, overlay_crossings
from .embeddings import PlaneEmbedding, add_chords
from .errors import (
    ConstructionError,
    NotAdmissibleError,
    SimplicityError,
    UnsupportedSizeError,
    UsageError,
)
from .graphs import Graph, is_planar_3connected, normalize_edge
from .optimality import admissible, validate_optimal

Edge = tuple[int, int]


@dataclass
class GeneratorRecipe:
    """Replayable construction log for a generated instance."""

    type: str
    n: int
    steps: list[str] = field(default_factory=list)

    def add(self, step: str) -> None:
        self.steps.append(step)

    def to_dict(self) -> dict:
        return {"type": self.type, "n": self.n, "steps": list(self.steps)}


# -- crossing fills ---------------------------------------------------------------


def x_fill(
    emb: PlaneEmbedding, face_ids: Iterable[int] | None = None
) -> BeyondDrawing:
    """Insert the pair of crossing diagonals into each listed quadrangle
    (all size-4 faces by default)."""
    fs = emb.faces()
    if face_ids is None:
        face_ids = fs.ids_of_size(4)
    inserts = []
    for fid in face_ids:
        w = fs.walk(fid)
        if len(w) != 4:
            raise UsageError(f"face {w} is not a quadrangle")
        inserts.append((fid, [(w[0], w[2]), (w[1], w[3])]))
    return overlay_crossings(emb, inserts)


def pentagram_fill(
    emb: PlaneEmbedding, face_ids: Iterable[int] | None = None
) -> BeyondDrawing:
    """Insert the full pentagram of five crossing chords into each listed
    pentagon (all size-5 faces by default)."""
    fs = emb.faces()
    if face_ids is None:
        face_ids = range(len(fs))
    inserts = []
    for fid in face_ids:
        w = fs.walk(fid)
        if len(w) != 5:
            raise UsageError(f"face {w} is not a pentagon")
        inserts.append((fid, [(w[i], w[(i + 2) % 5]) for i in range(5)]))
    return overlay_crossings(emb, inserts)


def four_chord_fill(
    emb: PlaneEmbedding,
    forced: dict[int, set[Edge]] | None = None,
) -> BeyondDrawing:
    """Insert exactly four of the five pentagon chords into every face of a
    pentangulation, omitting one chord per face so that no chord is used
    twice and none duplicates an edge.

    The omission choice backtracks over faces in canonical order; chords
    joining the neighbors of a degree-2 vertex are preferred omissions,
    matching the construction that splits pentagons at Steiner points.
    """
    fs = emb.faces()
    forced = forced or {}
    order = sorted(range(len(fs)), key=fs.key)
    edge_set = {normalize_edge(u, v) for u, v in emb.graph.edges}
    adjacency = emb.rotations()

    candidates: dict[int, list[Edge]] = {}
    for fid in order:
        w = fs.walk(fid)
        if len(w) != 5:
            raise UsageError(f"face {w} is not a pentagon")
        candidates[fid] = [
            normalize_edge(w[i], w[(i + 2) % 5]) for i in range(5)
        ]

    def omission_order(fid: int) -> list[Edge]:
        w = fs.walk(fid)
        deg2_chords = []
        for i in range(5):
            v = w[i]
            if len(adjacency[v]) == 2:
                deg2_chords.append(normalize_edge(w[(i - 1) % 5], w[(i + 1) % 5]))
        rest = sorted(set(candidates[fid]) - set(deg2_chords))
        return deg2_chords + rest

    chosen: dict[int, list[Edge]] = {}
    used: set[Edge] = set()

    def solve(i: int) -> bool:
        if i == len(order):
            return True
        fid = order[i]
        cands = candidates[fid]
        must = {normalize_edge(*e) for e in forced.get(fid, set())}
        usable = [e for e in cands if e not in used and e not in edge_set]
        if not must <= set(usable):
            return False
        if len(usable) < 4:
            return False
        if len(usable) == 5:
            trials: list[Edge | None] = [
                e for e in omission_order(fid) if e in usable and e not in must
            ]
        else:
            trials = [None]
        for omit in trials:
            keep = [e for e in usable if e != omit]
            if len(keep) != 4:
                continue
            for e in keep:
                used.add(e)
            chosen[fid] = keep
            if solve(i + 1):
                return True
            for e in keep:
                used.discard(e)
            del chosen[fid]
        return False

    if not solve(0):
        raise ConstructionError("no conflict-free four-chord fill exists")
    inserts = [(fid, chosen[fid]) for fid in order]
    return overlay_crossings(emb, inserts)


# -- named skeletons -----------------------------------------------------------------


def pseudo_double_wheel(k: int) -> PlaneEmbedding:
    """2k-cycle plus two poles on alternating cycle vertices: the canonical
    3-connected quadrangulation on 2k+2 vertices (the cube for k=3)."""
    if k < 3:
        raise UsageError("pseudo double wheel needs k >= 3")
    n = 2 * k
    p, q = n, n + 1  # p inside adjacent to evens, q outside adjacent to odds
    rotations: list[list[int]] = []
    for i in range(n):
        nxt, prv = (i + 1) % n, (i - 1) % n
        if i % 2 == 0:
            rotations.append([nxt, p, prv])
        else:
            rotations.append([nxt, prv, q])
    rotations.append(list(range(0, n, 2)))
    rotations.append(list(range(n - 1, 0, -2)))
    return PlaneEmbedding(rotations, outer_dart=(q, 1))


@lru_cache(maxsize=1)
def dodecahedron_embedding() -> PlaneEmbedding:
    report = is_planar_3connected(Graph(20, nx.dodecahedral_graph().edges()))
    return report.embedding


@lru_cache(maxsize=1)
def cube_embedding() -> PlaneEmbedding:
    return pseudo_double_wheel(3)


@lru_cache(maxsize=1)
def cuboctahedron_embedding() -> PlaneEmbedding:
    """Medial graph of the cube: 12 vertices, 8 triangles, 6 squares, every
    edge on one triangle and one square."""
    return cube_embedding().medial()


def square_antiprism_embedding() -> PlaneEmbedding:
    """Two concentric squares joined by a band of eight triangles."""
    rotations = []
    for j in range(4):
        nxt, prv = (j + 1) % 4, (j - 1) % 4
        rotations.append([nxt, 4 + j, 4 + prv, prv])
    for j in range(4):
        nxt, prv = (j + 1) % 4, (j - 1) % 4
        rotations.append([j + 1 if j < 3 else 0, 4 + nxt, 4 + prv, j])
    return PlaneEmbedding(rotations, outer_dart=(0, 3))


def triangular_prism_embedding() -> PlaneEmbedding:
    # triangles (0,1,2) inner and (3,4,5) outer, matched spokes
    rotations = [
        [1, 3, 2],
        [2, 4, 0],
        [0, 5, 1],
        [0, 4, 5],
        [1, 5, 3],
        [2, 3, 4],
    ]
    return PlaneEmbedding(rotations, outer_dart=(3, 5))


def octahedron_minus_edge_embedding() -> PlaneEmbedding:
    """The octahedron with one edge removed: 3-connected, 6 vertices,
    11 edges, one quadrangular face."""
    report = is_planar_3connected(
        Graph(
            6,
            [
                (u, v)
                for u in range(6)
                for v in range(u + 1, 6)
                if v != u + 3 and not (u, v) == (0, 3)
            ],
        )
    )
    if not (report.planar and report.three_connected):
        raise ConstructionError("octahedron minus an edge should be 3-connected")
    return report.embedding


# -- expansion operations ---------------------------------------------------------------


def pentagon_split(emb: PlaneEmbedding, fid: int) -> PlaneEmbedding:
    """Partition a pentagon face into three pentagons via a three-vertex
    Steiner path; exactly the two end vertices of the path get degree two."""
    fs = emb.faces()
    if fid == emb.outer_face_id:
        raise UsageError("the outer face is kept intact")
    walk = fs.walk(fid)
    if len(walk) != 5:
        raise UsageError(f"face {walk} is not a pentagon")
    darts = fs.darts(fid)
    key = fs.key(fid)
    shift = next(
        r for r in range(5) if tuple(walk[r:] + walk[:r]) == key
    )
    walk = key
    darts = darts[shift:] + darts[:shift]
    n = emb.n
    s0, s1, s2 = n, n + 1, n + 2
    rotations = emb.rotations()
    # spokes at walk positions 0, 2, 4; each inserted after the outgoing dart
    for pos, steiner in ((0, s0), (2, s1), (4, s2)):
        v = walk[pos]
        slot = darts[pos] - emb.rot_start[v]
        rotations[v].insert(slot + 1, steiner)
    rotations.append([walk[0], s1])
    rotations.append([s0, walk[2], s2])
    rotations.append([s1, walk[4]])
    od = emb.outer_dart
    return PlaneEmbedding(
        rotations, outer_dart=(emb.dart_tail[od], emb.rot_flat[od])
    )


def _spliced_insert(
    walk: Sequence[int],
    darts: Sequence[int],
    emb: PlaneEmbedding,
    base: int,
    spoke_positions: Sequence[int],
) -> tuple[list[list[int]], dict[int, list[int]], list[tuple[int, ...]]]:
    """Shared machinery for inserting a dodecahedron into a face.

    Returns (new rows for the 20 dodecahedron vertices, pending corner
    splices {host vertex -> (slot, spoke target)}, and the list of annulus
    region walks for bookkeeping).
    """
    D = dodecahedron_embedding()
    dfs = D.faces()
    out_fid = D.outer_face_id
    out_darts = dfs.darts(out_fid)
    out_walk = dfs.walk(out_fid)  # (u0..u4), region on the left is outside

    # map u_j -> p_{(2 - j) mod 5} so the annulus traverses p descending
    label: dict[int, int] = {}
    ring = [0] * 5
    for j, u in enumerate(out_walk):
        ring[(2 - j) % 5] = u
    order = [v for v in range(20) if v not in out_walk]
    ids = {v: None for v in range(20)}
    for j in range(5):
        ids[ring[j]] = base + j
    for i, v in enumerate(order):
        ids[v] = base + 5 + i
    rows = [None] * 20
    for v in range(20):
        rows[ids[v] - base] = [ids[u] for u in D.rotation(v)]

    # spokes: host position -> ring index, fixed per face size by the caller
    splices: dict[int, list[int]] = {}
    regions: list[tuple[int, ...]] = []
    for host_pos, ring_idx in spoke_positions:
        u = ring[ring_idx]
        # insert the spoke after the outgoing dart of D's outer walk at u
        j = out_walk.index(u)
        d_out = out_darts[j]
        slot = d_out - D.rot_start[u]
        host_v = walk[host_pos]
        rows[ids[u] - base].insert(slot + 1, host_v)
        host_slot = darts[host_pos] - emb.rot_start[host_v]
        splices.setdefault(host_v, []).append((host_slot, base + ring_idx))
    return rows, splices, regions


def dodeca_insert(emb: PlaneEmbedding, fid: int) -> PlaneEmbedding:
    """Replace a face of size 3, 4 or 5 by dodecahedral pentagons.

    Quadrangles gain 20 vertices and 33 edges; triangles recurse through a
    residual quadrangle (40 vertices); pentagons are first split by a chord
    into a triangle and a quadrangle, growing by 60 vertices in total. The
    result of expanding every listed face stays a pentangulation.
    """
    return dodeca_insert_all(emb, [fid])


def dodeca_insert_all(emb: PlaneEmbedding, face_ids: Sequence[int]) -> PlaneEmbedding:
    fs = emb.faces()
    tri_walks: list[tuple[int, ...]] = []
    quad_walks: list[tuple[int, ...]] = []
    chord_jobs: dict[int, list[tuple[int, int]]] = {}
    pentagon_pieces: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    edge_set = {normalize_edge(u, v) for u, v in emb.graph.edges}
    for fid in face_ids:
        walk = fs.key(fid)
        size = len(walk)
        if size == 3:
            tri_walks.append(walk)
        elif size == 4:
            quad_walks.append(walk)
        elif size == 5:
            # split by the lexicographically smallest fresh chord
            cands = sorted(
                (min(walk[i], walk[(i + 2) % 5]), max(walk[i], walk[(i + 2) % 5]), i)
                for i in range(5)
            )
            for a, b, i in cands:
                if (a, b) not in edge_set:
                    edge_set.add((a, b))
                    break
            else:
                raise SimplicityError(f"no fresh chord splits pentagon {walk}")
            tri = (walk[i], walk[(i + 1) % 5], walk[(i + 2) % 5])
            quad = (
                walk[i],
                walk[(i + 2) % 5],
                walk[(i + 3) % 5],
                walk[(i + 4) % 5],
            )
            # chord positions relative to the *actual* stored walk
            actual = fs.walk(fid)
            off = next(
                r for r in range(5)
                if tuple(actual[r:] + actual[:r]) == walk
            )
            chord_jobs[fid] = [((i + off) % 5, (i + 2 + off) % 5)]
            pentagon_pieces.append((tri, quad))
        else:
            raise UsageError(f"face of size {size} cannot take a dodecahedron")
    if chord_jobs:
        emb = add_chords(emb, chord_jobs)
        fs = emb.faces()
        for tri, quad in pentagon_pieces:
            tri_walks.append(tri)
            quad_walks.append(quad)
    # pass 2: all triangles and quadrangles at once
    emb, residual_quads = _dodeca_round(emb, tri_walks, quad_walks)
    # pass 3: residual quadrangles from the triangle inserts
    if residual_quads:
        emb, leftover = _dodeca_round(emb, [], residual_quads)
        assert not leftover
    return emb


def _dodeca_round(
    emb: PlaneEmbedding,
    tri_walks: Sequence[tuple[int, ...]],
    quad_walks: Sequence[tuple[int, ...]],
) -> tuple[PlaneEmbedding, list[tuple[int, ...]]]:
    if not tri_walks and not quad_walks:
        return emb, []
    from .embeddings import min_rotation

    fs = emb.faces()
    keymap: dict[tuple[int, ...], int] = {}
    wanted: set[tuple[int, ...]] = set()
    for w in list(tri_walks) + list(quad_walks):
        wanted.add(min_rotation(w))
        wanted.add(min_rotation(tuple(reversed(w))))
    sizes = {len(w) for w in wanted}
    for fid in range(len(fs)):
        if fs.sizes[fid] in sizes:
            k = fs.key(fid)
            if k in wanted:
                keymap[k] = fid
    rotations = emb.rotations()
    pending: dict[int, list[tuple[int, int]]] = {}
    residual: list[tuple[int, ...]] = []
    base = emb.n
    for walk in sorted(quad_walks) + sorted(tri_walks):
        key = min_rotation(walk)
        if key in keymap:
            fid = keymap[key]
        else:
            fid = keymap[min_rotation(tuple(reversed(walk)))]
        walk = fs.key(fid)
        darts = fs.darts(fid)
        actual = fs.walk(fid)
        off = next(
            r
            for r in range(len(actual))
            if tuple(actual[r:] + actual[:r]) == walk
        )
        darts = darts[off:] + darts[:off]
        if len(walk) == 4:
            spoke_positions = [(0, 0), (1, 2), (3, 3)]
        else:
            spoke_positions = [(0, 0), (1, 2), (2, 4)]
            residual.append((walk[2], walk[0], base + 0, base + 4))
        rows, splices, _ = _spliced_insert(walk, darts, emb, base, spoke_positions)
        rotations.extend(rows)
        for host_v, items in splices.items():
            pending.setdefault(host_v, []).extend(items)
        base += 20
    for v, items in pending.items():
        for slot, target in sorted(items, reverse=True):
            rotations[v].insert(slot + 1, target)
    od = emb.outer_dart
    new_emb = PlaneEmbedding(
        rotations, outer_dart=(emb.dart_tail[od], emb.rot_flat[od])
    )
    return new_emb, residual


# -- primal-dual construction ----------------------------------------------------------


def primal_dual_rac_base(k: int, add_diagonal: bool = True) -> PlaneEmbedding:
    """The 3-connected planar base whose primal-dual graph is an optimal
    right-angle-crossing graph: an outer triangle around a path of k inner
    vertices, with alternating spokes making all inner faces triangles or
    quadrangles. With the extra quadrangle diagonal the primal-dual graph
    has an even number of vertices, without it an odd number."""
    if k < 2:
        raise UsageError("need k >= 2 interior vertices")
    a, b, c = 0, 1, 2
    v = [3 + i for i in range(k)]  # v[0] = v_1 (bottom) .. v[k-1] (top)
    rot: dict[int, list[int]] = {}
    rot[a] = [b] + [v[i] for i in range(0, k, 2)] + [c]
    rot[b] = [c] + [v[i] for i in range(k - 1 if (k - 1) % 2 else k - 2, 0, -2)] + [v[0], a]
    rot[c] = [a, v[k - 1], b]
    for i in range(k):
        vi = v[i]
        up = v[i + 1] if i + 1 < k else c
        down = v[i - 1] if i > 0 else None
        if i == 0:
            rot[vi] = [up, a, b]
        elif i % 2 == 0:  # v_{i+1} with odd label index: spoke to a
            rot[vi] = [up, a, down]
        else:
            rot[vi] = [up, down, b]
    rotations = [rot[x] for x in range(k + 3)]
    emb = PlaneEmbedding(rotations, outer_dart=(b, a))
    if add_diagonal:
        fs = emb.faces()
        quads = sorted(fs.ids_of_size(4), key=fs.key)
        if not quads:
            raise ConstructionError("base has no quadrangle to augment")
        fid = quads[0]
        w = fs.walk(fid)
        edges = {normalize_edge(u, t) for u, t in emb.graph.edges}
        for i, j in ((0, 2), (1, 3)):
            if normalize_edge(w[i], w[j]) not in edges:
                emb = add_chords(emb, {fid: [(i, j)]})
                break
        else:
            raise SimplicityError("both diagonals of the quadrangle exist")
    return emb


def primal_dual_drawing(base: PlaneEmbedding) -> BeyondDrawing:
    """Simultaneous drawing of a 3-connected plane graph and its dual with
    the outer-face vertex removed: every interior primal edge is crossed by
    its dual edge, every bounded face vertex joins its boundary vertices."""
    fs = base.faces()
    outer = base.outer_face_id
    n = base.n
    dual_id: dict[int, int] = {}
    for fid in range(len(fs)):
        if fid != outer:
            dual_id[fid] = n + len(dual_id)
    n_real = n + len(dual_id)
    face_of = fs.face_of_dart
    twin = base.twin

    # crossing dummy per interior edge
    dummy: dict[Edge, int] = {}
    next_id = n_real
    for d in range(base.dart_count):
        if d < twin[d]:
            f, g = face_of[d], face_of[twin[d]]
            if f != outer and g != outer:
                e = normalize_edge(base.dart_tail[d], base.rot_flat[d])
                dummy[e] = next_id
                next_id += 1

    rotations: list[list[int]] = []
    for v in range(n):
        row: list[int] = []
        for d in range(base.rot_start[v], base.rot_start[v + 1]):
            u = base.rot_flat[d]
            e = normalize_edge(v, u)
            row.append(dummy.get(e, u))
            f = face_of[d]
            if f != outer:
                row.append(dual_id[f])
        rotations.append(row)
    for fid in sorted(dual_id, key=dual_id.get):
        row = []
        walk = fs.walk(fid)
        darts = fs.darts(fid)
        for i, d in enumerate(darts):
            row.append(walk[i])
            e = normalize_edge(base.dart_tail[d], base.rot_flat[d])
            if e in dummy:
                row.append(dummy[e])
        rotations.append(row)
    pairing: dict[int, tuple[Edge, Edge]] = {}
    for e, x in dummy.items():
        rotations.append([])
    for d in range(base.dart_count):
        if d >= twin[d]:
            continue
        u, v = base.dart_tail[d], base.rot_flat[d]
        e = normalize_edge(u, v)
        if e not in dummy:
            continue
        f, g = face_of[d], face_of[twin[d]]  # f left of u->v
        x = dummy[e]
        rotations[x] = [v, dual_id[f], u, dual_id[g]]
        pairing[x] = (e, normalize_edge(dual_id[f], dual_id[g]))
    od = base.outer_dart
    emb = PlaneEmbedding(
        rotations, outer_dart=(base.dart_tail[od], base.rot_flat[od])
    )
    classes = ["primal"] * n + ["dual"] * len(dual_id)
    return BeyondDrawing(emb, n_real, pairing, classes=classes)


# -- 3-regularization ------------------------------------------------------------------


class Regularization(NamedTuple):
    graph: Graph
    circles: dict[int, list[int]]


def node_to_circle(g: Graph) -> Regularization:
    """Expand every vertex of degree d >= 3 into a d-cycle of degree-3
    vertices, each inheriting one incident edge; vertices of degree <= 2
    are copied unchanged (smaller circles would create multi-edges).
    Contracting each circle recovers the input graph."""
    adj = g.adjacency()
    circles: dict[int, list[int]] = {}
    next_id = 0
    for v in range(g.n):
        d = len(adj[v])
        size = d if d >= 3 else 1
        circles[v] = list(range(next_id, next_id + size))
        next_id += size
    edges: list[Edge] = []
    for v in range(g.n):
        ring = circles[v]
        if len(ring) >= 3:
            edges.extend(
                (ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))
            )
    for u, v in g.edges:
        iu = adj[u].index(v) if len(adj[u]) >= 3 else 0
        iv = adj[v].index(u) if len(adj[v]) >= 3 else 0
        edges.append((circles[u][iu], circles[v][iv]))
    return Regularization(Graph(next_id, edges), circles)


def contract_circles(reg: Regularization) -> Graph:
    """Left inverse of node_to_circle: quotient by the circles."""
    owner: dict[int, int] = {}
    for v, ring in reg.circles.items():
        for x in ring:
            owner[x] = v
    edges = set()
    for x, y in reg.graph.edges:
        u, v = owner[x], owner[y]
        if u != v:
            edges.add(normalize_edge(u, v))
    return Graph(len(reg.circles), sorted(edges))


# -- stored odd-size one-planar skeletons -----------------------------------------------


def odd_one_planar_skeleton(n: int) -> PlaneEmbedding:
    """Load a stored 3-connected quadrangulation on an odd vertex count.

    The instances are vertex-face incidence graphs of small 3-connected
    planar graphs (triangular prism for n=11, octahedron minus an edge for
    n=13), stored as embedding files and re-validated on load.
    """
    from . import io as bpio
    from .optimality import embedded_three_connected

    if n not in (11, 13):
        raise UnsupportedSizeError(f"no stored odd quadrangulation for n={n}")
    emb = bpio.load_embedding_resource(f"q{n}.bpg")
    fs = emb.faces()
    ok3, _ = embedded_three_connected(emb)
    if (
        emb.n != n
        or emb.m != 2 * n - 4
        or sorted(fs.sizes) != [4] * (n - 2)
        or not ok3
    ):
        raise ConstructionError(f"stored quadrangulation for n={n} failed validation")
    return emb


def _radial_quadrangulation(base: PlaneEmbedding) -> PlaneEmbedding:
    emb, _ = base.radial()
    return emb


# -- the generator dispatch ---------------------------------------------------------------


def generate_optimal(
    t: TypeTag | str,
    n: int,
    skeleton: PlaneEmbedding | None = None,
    recipe: GeneratorRecipe | None = None,
) -> BeyondDrawing:
    """Construct an optimal drawing of the given type and size.

    Raises NotAdmissibleError when no optimal graph exists for (t, n) and
    UnsupportedSizeError for admissible sizes outside the supported set.
    Every returned drawing passes validate_optimal.
    """
    t = TypeTag.parse(t) if isinstance(t, str) else t
    if not admissible(t, n):
        raise NotAdmissibleError(f"no optimal {t.value} graph on {n} vertices")
    rec = recipe if recipe is not None else GeneratorRecipe(t.value, n)

    if skeleton is not None:
        drawing = _fill_supplied_skeleton(t, n, skeleton, rec)
    elif t is TypeTag.ONE_PLANAR:
        drawing = _generate_one_planar(n, rec)
    elif t is TypeTag.IC_PLANAR:
        drawing = _generate_ic(n, rec)
    elif t is TypeTag.NIC_PLANAR:
        drawing = _generate_nic(n, rec)
    elif t is TypeTag.TWO_PLANAR:
        drawing = _generate_two_planar(n, rec)
    elif t is TypeTag.ONE_FAN_BUNDLE:
        drawing = _generate_fan_bundle(n, rec)
    elif t is TypeTag.RAC:
        drawing = _generate_rac(n, rec)
    else:
        raise UsageError(f"unknown type {t}")

    report = validate_optimal(drawing, t)
    if not report.ok:
        raise ConstructionError(
            f"generated {t.value} drawing on {n} vertices failed validation: "
            f"{report.violations[:3]}"
        )
    return drawing


def _fill_supplied_skeleton(
    t: TypeTag, n: int, skeleton: PlaneEmbedding, rec: GeneratorRecipe
) -> BeyondDrawing:
    if skeleton.n != n:
        raise UsageError(f"skeleton has {skeleton.n} vertices, expected {n}")
    rec.add(f"fill supplied skeleton with {skeleton.m} edges")
    if t in (TypeTag.ONE_PLANAR, TypeTag.IC_PLANAR, TypeTag.NIC_PLANAR):
        return x_fill(skeleton)
    if t is TypeTag.TWO_PLANAR:
        return pentagram_fill(skeleton)
    if t is TypeTag.ONE_FAN_BUNDLE:
        return four_chord_fill(skeleton)
    raise UsageError(f"skeleton fills are not defined for {t.value}")


def _generate_one_planar(n: int, rec: GeneratorRecipe) -> BeyondDrawing:
    if n % 2 == 0:
        k = (n - 2) // 2
        rec.add(f"pseudo double wheel k={k}")
        skel = pseudo_double_wheel(k)
    elif n in (11, 13):
        rec.add(f"stored odd quadrangulation n={n}")
        skel = odd_one_planar_skeleton(n)
    else:
        raise UnsupportedSizeError(
            f"odd n={n}: only 11 and 13 are stored; general odd sizes are"
            " not constructed"
        )
    rec.add("insert crossing pair in every quadrangle")
    return x_fill(skel)


def _generate_ic(n: int, rec: GeneratorRecipe) -> BeyondDrawing:
    k = n // 4
    rec.add("square antiprism base")
    emb = square_antiprism_embedding()
    for _ in range(k - 2):
        fs = emb.faces()
        tris = sorted(fs.ids_of_size(3), key=fs.key)
        fid = tris[0]
        rec.add(f"insert square into triangle {fs.key(fid)}")
        emb = _square_in_triangle(emb, fid)
    rec.add("insert crossing pair in every quadrangle")
    return x_fill(emb)


def _square_in_triangle(emb: PlaneEmbedding, fid: int) -> PlaneEmbedding:
    """Replace a triangle face by a quadrangle surrounded by seven
    triangles; the new quadrangle is vertex-disjoint from everything."""
    fs = emb.faces()
    walk = fs.key(fid)
    darts = fs.darts(fid)
    actual = fs.walk(fid)
    off = next(r for r in range(3) if tuple(actual[r:] + actual[:r]) == walk)
    darts = darts[off:] + darts[:off]
    x, y, z = walk
    n = emb.n
    a, b, c, d = n, n + 1, n + 2, n + 3
    rotations = emb.rotations()
    inserts = {0: [b, a, d], 1: [c, b], 2: [d, c]}
    for pos, targets in inserts.items():
        v = walk[pos]
        slot = darts[pos] - emb.rot_start[v]
        rotations[v][slot + 1 : slot + 1] = targets
    rotations.append([d, x, b])  # a
    rotations.append([x, a, y, c])  # b
    rotations.append([d, b, y, z])  # c
    rotations.append([x, a, c, z])  # d
    od = emb.outer_dart
    return PlaneEmbedding(
        rotations, outer_dart=(emb.dart_tail[od], emb.rot_flat[od])
    )


def _generate_nic(n: int, rec: GeneratorRecipe) -> BeyondDrawing:
    if n != 12:
        raise UnsupportedSizeError(
            "built-in optimal NIC generation covers n=12 (cuboctahedron);"
            " other sizes need a supplied skeleton"
        )
    rec.add("cuboctahedron base; crossing pair in every square")
    emb = cuboctahedron_embedding()
    return x_fill(emb)


def _generate_two_planar(n: int, rec: GeneratorRecipe) -> BeyondDrawing:
    if (n - 20) % 60 != 0:
        raise UnsupportedSizeError(
            f"built-in optimal 2-planar generation covers n = 20 + 60k;"
            f" n={n} needs a supplied skeleton"
        )
    rec.add("dodecahedron base")
    emb = dodecahedron_embedding()
    for _ in range((n - 20) // 60):
        fs = emb.faces()
        inner = sorted(
            (fid for fid in range(len(fs)) if fid != emb.outer_face_id),
            key=fs.key,
        )
        rec.add(f"dodecahedron insert into pentagon {fs.key(inner[0])}")
        emb = dodeca_insert(emb, inner[0])
    rec.add("pentagram in every pentagon")
    return pentagram_fill(emb)


def _generate_fan_bundle(n: int, rec: GeneratorRecipe) -> BeyondDrawing:
    rec.add("pentagon base")
    emb = PlaneEmbedding(
        [[1, 4], [2, 0], [3, 1], [4, 2], [0, 3]], outer_dart=(0, 4)
    )
    splits = (n - 5) // 3
    for _ in range(splits):
        fs = emb.faces()
        inner = sorted(
            (fid for fid in range(len(fs)) if fid != emb.outer_face_id),
            key=fs.key,
        )
        rec.add(f"steiner split of pentagon {fs.key(inner[0])}")
        emb = pentagon_split(emb, inner[0])
    rec.add("four chords in every pentagon")
    return four_chord_fill(emb)


def _k5_one_crossing_drawing() -> BeyondDrawing:
    """K5 drawn with its single crossing: planar K4 plus a fifth vertex
    inside one triangle, whose edge to the far corner crosses once."""
    a, b, c, d, e, x = 0, 1, 2, 3, 4, 5
    rotations = [
        [x, e, d, c],  # a
        [c, d, e, x],  # b
        [a, d, b, x],  # c
        [c, a, e, b],  # d
        [d, a, x, b],  # e
        [b, e, a, c],  # x
    ]
    emb = PlaneEmbedding(rotations, outer_dart=(c, a))
    return BeyondDrawing(emb, 5, {x: ((a, b), (c, e))})


def _generate_rac(n: int, rec: GeneratorRecipe) -> BeyondDrawing:
    if n == 4:
        rec.add("K4 as an X-quadrangle")
        square = PlaneEmbedding(
            [[1, 3], [2, 0], [3, 1], [0, 2]], outer_dart=(0, 3)
        )
        inner = 1 - square.outer_face_id
        return overlay_crossings(square, [(inner, [(0, 2), (1, 3)])])
    if n == 5:
        rec.add("K5 with one crossing")
        return _k5_one_crossing_drawing()
    if n in (6, 7, 8):
        raise UnsupportedSizeError(
            f"optimal RAC graphs on {n} vertices exist but are outside the"
            " generator's supported set"
        )
    if n % 2 == 1:
        k = (n - 5) // 2
        rec.add(f"primal-dual of the path base k={k}, no extra diagonal")
        base = primal_dual_rac_base(k, add_diagonal=False)
    else:
        k = (n - 6) // 2
        rec.add(f"primal-dual of the path base k={k} with one diagonal")
        base = primal_dual_rac_base(k, add_diagonal=True)
    return primal_dual_drawing(base)
