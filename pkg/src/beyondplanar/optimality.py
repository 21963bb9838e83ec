"""Density and range oracles plus structural optimality validators.

Densities are exact linear forms evaluated in rational arithmetic; a size
for which the form is non-integral admits no optimal graph and raises
NotAdmissibleError. The structural validators implement the published
characterizations: quadrangulation/pentangulation skeletons with full
crossing fills, triangle+X-quadrangle decompositions, and the primal-dual
shape of optimal right-angle-crossing graphs.
"""

from __future__ import annotations

from fractions import Fraction

from .drawings import BeyondDrawing, TypeTag, ValidationReport
from .embeddings import PlaneEmbedding
from .errors import NotAdmissibleError, UsageError
from .graphs import normalize_edge

Edge = tuple[int, int]

# density(n) = slope * n + shift, exact
DENSITY_RULES: dict[TypeTag, tuple[Fraction, Fraction]] = {
    TypeTag.ONE_PLANAR: (Fraction(4), Fraction(-8)),
    TypeTag.IC_PLANAR: (Fraction(13, 4), Fraction(-6)),
    TypeTag.NIC_PLANAR: (Fraction(18, 5), Fraction(-36, 5)),
    TypeTag.TWO_PLANAR: (Fraction(5), Fraction(-10)),
    TypeTag.ONE_FAN_BUNDLE: (Fraction(13, 3), Fraction(-26, 3)),
    TypeTag.RAC: (Fraction(4), Fraction(-10)),
}


def density(t: TypeTag | str, n: int) -> int:
    """Maximum edge count of an optimal n-vertex graph of the given type."""
    t = TypeTag.parse(t) if isinstance(t, str) else t
    if n < 3:
        raise UsageError("density is defined for n >= 3")
    slope, shift = DENSITY_RULES[t]
    value = slope * n + shift
    if value.denominator != 1:
        raise NotAdmissibleError(
            f"{t.value} density {slope}*{n}{shift:+} is not an integer"
        )
    return int(value)


def admissible(t: TypeTag | str, n: int) -> bool:
    """Whether an optimal graph of the given type exists on n vertices."""
    t = TypeTag.parse(t) if isinstance(t, str) else t
    if n < 1:
        raise UsageError("n must be positive")
    if t is TypeTag.ONE_PLANAR:
        return n == 8 or n >= 10
    if t is TypeTag.IC_PLANAR:
        return n % 4 == 0 and n >= 8
    if t is TypeTag.NIC_PLANAR:
        return n % 5 == 2 and n >= 12
    if t is TypeTag.TWO_PLANAR:
        return n == 20 or (n >= 26 and n % 3 == 2)
    if t is TypeTag.ONE_FAN_BUNDLE:
        return n >= 8 and n % 3 == 2
    if t is TypeTag.RAC:
        return n >= 4
    raise UsageError(f"unknown type {t}")


# -- connectivity of embedded skeletons ------------------------------------------


def embedded_three_connected(emb: PlaneEmbedding) -> tuple[bool, tuple | None]:
    """Exact 3-connectivity of a simple 2-connected plane graph.

    Uses the face-sharing criterion: a separation pair is a vertex pair on
    at least two common faces (at least three when adjacent). Linear in the
    total squared face size, so it scales to large hosts.
    """
    if emb.n < 4:
        return False, ("too-few-vertices", emb.n)
    degs = [emb.degree(v) for v in range(emb.n)]
    if min(degs) < 3:
        return False, ("degree-two-vertex", degs.index(min(degs)))
    fs = emb.faces()
    shared: dict[Edge, int] = {}
    for fid in range(len(fs)):
        walk = fs.walk(fid)
        if len(set(walk)) != len(walk):
            return False, ("face-boundary-not-a-cycle", walk)
        k = len(walk)
        for i in range(k):
            for j in range(i + 1, k):
                e = normalize_edge(walk[i], walk[j])
                shared[e] = shared.get(e, 0) + 1
    edges = {normalize_edge(u, v) for u, v in emb.graph.edges}
    for pair in sorted(shared):
        count = shared[pair]
        limit = 2 if pair in edges else 1
        if count > limit:
            return False, ("separation-pair", pair)
    return True, None


# -- structural validators ---------------------------------------------------------


def _x_quad_violations(
    d: BeyondDrawing, skel: PlaneEmbedding, fid: int, chords: list[Edge]
) -> list[tuple[str, tuple]]:
    """The face must be a quadrangle filled with its two crossing diagonals."""
    walk = skel.faces().walk(fid)
    bad: list[tuple[str, tuple]] = []
    want = {
        normalize_edge(walk[0], walk[2]),
        normalize_edge(walk[1], walk[3]),
    }
    if set(chords) != want:
        bad.append(("face-not-x-quadrangle", (walk, tuple(sorted(chords)))))
        return bad
    e1, e2 = sorted(want)
    path = d.edge_paths[e1]
    if len(path) != 3 or d.pairing[path[1]] != (e1, e2):
        bad.append(("diagonals-do-not-cross-each-other", (walk,)))
    return bad


def _pentagram_violations(
    d: BeyondDrawing, skel: PlaneEmbedding, fid: int, chords: list[Edge]
) -> list[tuple[str, tuple]]:
    walk = skel.faces().walk(fid)
    want = {normalize_edge(walk[i], walk[(i + 2) % 5]) for i in range(5)}
    if set(chords) != want:
        return [("face-not-x-pentagon", (walk, tuple(sorted(chords))))]
    return []


def validate_optimal(d: BeyondDrawing, t: TypeTag | str) -> ValidationReport:
    """Edge count plus the full structural characterization for the type."""
    t = TypeTag.parse(t) if isinstance(t, str) else t
    violations = list(d.validate_type(t).violations)
    n = d.n_real
    m = d.graph.m
    try:
        want_m = density(t, n)
        if m != want_m:
            violations.append(("edge-count", (m, want_m)))
    except NotAdmissibleError:
        violations.append(("size-not-admissible", (t.value, n)))
        return ValidationReport.from_violations(violations)

    try:
        skel = d.skeleton()
    except Exception as exc:
        violations.append(("skeleton-not-an-embedding", (str(exc),)))
        return ValidationReport.from_violations(violations)
    fs = skel.faces()
    sizes = fs.sizes
    chords_by_face = d.chords_by_face
    m_skel = skel.m
    f_skel = len(fs)

    if t in (TypeTag.ONE_PLANAR, TypeTag.TWO_PLANAR):
        face_size = 4 if t is TypeTag.ONE_PLANAR else 5
        for fid, s in enumerate(sizes):
            if s != face_size:
                violations.append(("skeleton-face-size", (fs.walk(fid), s)))
        ok3, witness = embedded_three_connected(skel)
        if not ok3:
            violations.append(("skeleton-not-3-connected", witness))
        for fid in range(len(fs)):
            chords = chords_by_face.get(fid, [])
            if t is TypeTag.ONE_PLANAR:
                violations.extend(_x_quad_violations(d, skel, fid, chords))
            else:
                violations.extend(_pentagram_violations(d, skel, fid, chords))
        if t is TypeTag.ONE_PLANAR:
            if m_skel != 2 * n - 4:
                violations.append(("skeleton-edge-count", (m_skel, 2 * n - 4)))
            if f_skel != n - 2:
                violations.append(("skeleton-face-count", (f_skel, n - 2)))
        else:
            if 3 * m_skel != 5 * (n - 2):
                violations.append(
                    ("skeleton-edge-count", (m_skel, Fraction(5 * (n - 2), 3)))
                )
            if 3 * f_skel != 2 * (n - 2):
                violations.append(
                    ("skeleton-face-count", (f_skel, Fraction(2 * (n - 2), 3)))
                )

    elif t in (TypeTag.IC_PLANAR, TypeTag.NIC_PLANAR):
        quads = [fid for fid, s in enumerate(sizes) if s == 4]
        tris = [fid for fid, s in enumerate(sizes) if s == 3]
        for fid, s in enumerate(sizes):
            if s not in (3, 4):
                violations.append(("skeleton-face-size", (fs.walk(fid), s)))
        for fid in quads:
            violations.extend(
                _x_quad_violations(d, skel, fid, chords_by_face.get(fid, []))
            )
        for fid in tris:
            if chords_by_face.get(fid):
                violations.append(
                    ("triangle-carries-chords", (fs.walk(fid),))
                )
        if t is TypeTag.IC_PLANAR:
            if 4 * len(quads) != n:
                violations.append(("x-quadrangle-count", (len(quads), Fraction(n, 4))))
            covered: set[int] = set()
            for fid in quads:
                walk = fs.walk(fid)
                if covered & set(walk):
                    violations.append(
                        ("x-quadrangles-not-vertex-disjoint", (walk,))
                    )
                covered |= set(walk)
            if covered != set(range(n)) and 4 * len(quads) == n:
                violations.append(
                    ("x-quadrangles-do-not-cover", (tuple(sorted(set(range(n)) - covered)),))
                )
            n_crossed = len(d.crossed_edges)
            if 2 * n_crossed != n:
                violations.append(("crossed-edge-count", (n_crossed, Fraction(n, 2))))
        else:
            if 5 * len(quads) != 3 * (n - 2):
                violations.append(
                    ("x-quadrangle-count", (len(quads), Fraction(3 * (n - 2), 5)))
                )
            if 5 * len(tris) != 4 * (n - 2):
                violations.append(
                    ("triangle-count", (len(tris), Fraction(4 * (n - 2), 5)))
                )
            if 5 * m_skel != 12 * (n - 2):
                violations.append(
                    ("skeleton-edge-count", (m_skel, Fraction(12 * (n - 2), 5)))
                )
            # every uncrossed edge lies on one triangle and one X-quadrangle
            face_of = fs.face_of_dart
            for dart in range(skel.dart_count):
                if dart >= skel.twin[dart]:
                    continue
                s1 = sizes[face_of[dart]]
                s2 = sizes[face_of[skel.twin[dart]]]
                if {s1, s2} != {3, 4}:
                    e = normalize_edge(
                        skel.dart_tail[dart], skel.rot_flat[dart]
                    )
                    violations.append(("edge-sides-not-triangle-and-quad", (e, s1, s2)))

    elif t is TypeTag.ONE_FAN_BUNDLE:
        # the surrogate from validate_type already checked the pentangulation;
        # optimality additionally pins exactly four chords per face
        for fid in range(len(fs)):
            got = len(chords_by_face.get(fid, []))
            if got != 4:
                violations.append(("face-chord-count", (fs.walk(fid), got)))
        if 3 * m_skel != 5 * (n - 2):
            violations.append(
                ("skeleton-edge-count", (m_skel, Fraction(5 * (n - 2), 3)))
            )

    elif t is TypeTag.RAC:
        # geometric right angles are checked on realized drawings only
        if n >= 6:
            emb = d.planarization
            outer_size = emb.faces().sizes[emb.outer_face_id]
            if outer_size != 3:
                violations.append(("outer-face-not-a-triangle", (outer_size,)))
    else:
        raise UsageError(f"unknown type {t}")

    return ValidationReport.from_violations(violations)
