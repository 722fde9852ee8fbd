"""
Three-Page Presentations - construction from an alternating diagram with a
bipartite Tait graph, validation, rotation check and reconstruction
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..models.link_diagram import LinkDiagram
from ..models.presentation import (
    Arc,
    BindingPoint,
    ComponentRotation,
    Direction,
    Page,
    PointKind,
    RotationCertificate,
    ThreePagePresentation,
    Violation,
    ViolationKind,
)
from ..models.tait import Bipartition, Color, ShadingIndex
from ..utils.errors import (
    InvalidBipartitionError,
    InvalidPresentationError,
    NonAlternatingError,
    TrivialComponentError,
)
from ..utils.union_find import UnionFind
from .checkerboard import checkerboard_color, corner_faces, is_alternating, tait_graph
from .diagram_core import connected_pieces, make_diagram

logger = logging.getLogger(__name__)

Token = Tuple


def build_presentation(
    diagram: LinkDiagram,
    shading: ShadingIndex,
    split: Bipartition,
    mirrored: bool = False,
) -> ThreePagePresentation:
    """
    Every red face contributes a boundary walk. At each of its corners
    (c, k) the walk passes the two transversal points of crossing c
    (blue-side slots k+3 then k+2) and then the tangency point of the edge
    at slot k+1. Walks are merged along a spanning tree of bands that run
    through blue faces between consecutive crossings. Split pieces, each
    with its own shading index when `shading` is a tuple, are concatenated.
    """
    if diagram.free_loops:
        raise TrivialComponentError(
            f"diagram has {diagram.free_loops} crossingless component(s); "
            f"they have no three-page arcs"
        )
    if diagram.n == 0:
        raise TrivialComponentError("a diagram without crossings has no presentation")
    alternation = is_alternating(diagram)
    if not alternation:
        raise NonAlternatingError(
            "three-page construction needs an alternating diagram",
            certificates=[alternation.to_dict()["certificate"]],
        )

    coloring = checkerboard_color(diagram, shading)
    graph = tait_graph(diagram, coloring)
    if not split.valid or len(split.colors) != graph.vertex_count:
        raise InvalidBipartitionError(
            f"bipartition does not fit shading {shading}",
            certificates=[split.to_dict()],
        )
    for edge in graph.edges:
        if split.colors[edge.u] == split.colors[edge.v]:
            raise InvalidBipartitionError(
                f"Tait edge of crossing {edge.crossing} joins two {split.colors[edge.u].value} vertices"
            )

    face_of = corner_faces(diagram)
    vertex_of = {face: v for v, face in enumerate(graph.faces)}
    red_corner: Dict[int, int] = {}
    for ci in range(diagram.n):
        k = 0 if coloring.shaded[face_of[(ci, 0)]] else 1
        if split.colors[vertex_of[face_of[(ci, k)]]] is not Color.RED:
            k += 2
        red_corner[ci] = k

    sequence: List[Token] = []
    for piece in connected_pieces(diagram):
        sequence.extend(_piece_walk(diagram, piece, red_corner, face_of))

    index_of = {token: i for i, token in enumerate(sequence)}
    points = []
    for token in sequence:
        if token[0] == "tan":
            points.append(BindingPoint(kind=PointKind.TANGENCY, edge=token[1]))
        else:
            points.append(
                BindingPoint(kind=PointKind.TRANSVERSAL, crossing=token[1], slot=token[2])
            )

    arcs: List[Arc] = []
    for ci in range(diagram.n):
        k = red_corner[ci]
        for red_slot in ((k + 1) % 4, k):
            blue_slot = (red_slot + 2) % 4
            page = Page.OVER if red_slot % 2 else Page.UNDER
            tangency = index_of[("tan", diagram.label_at((ci, red_slot)))]
            transversal = index_of[("T", ci, blue_slot)]
            arcs.append(Arc(a=tangency, b=transversal, page=int(page), crossing=ci))

    for label in diagram.labels:
        (c1, s1), (c2, s2) = diagram.occurrences(label)
        if _is_blue_slot(red_corner[c1], s1):
            arcs.append(
                Arc(
                    a=index_of[("T", c1, s1)],
                    b=index_of[("T", c2, s2)],
                    page=int(Page.OUTSIDE),
                    edge=label,
                )
            )

    logger.info(f"Built three-page presentation: {len(sequence)} binding points, {len(arcs)} arcs")
    return ThreePagePresentation(
        m=len(sequence), arcs=tuple(arcs), points=tuple(points), mirrored=mirrored
    )


def _is_blue_slot(k: int, slot: int) -> bool:
    return slot in ((k + 2) % 4, (k + 3) % 4)


def _piece_walk(diagram, piece, red_corner, face_of) -> List[Token]:
    members = set(piece)
    red_faces = sorted({face_of[(ci, red_corner[ci])] for ci in piece})
    blue_faces = sorted({face_of[(ci, (red_corner[ci] + 2) % 4)] for ci in piece})
    red_face_at = {ci: face_of[(ci, red_corner[ci])] for ci in members}

    # bands through blue faces between consecutive corners, kept only when
    # they join two red disks not yet connected
    next_band: Dict[int, int] = {}
    prev_band: Dict[int, int] = {}
    band_faces: List[Tuple[int, int]] = []
    forest = UnionFind(red_faces)
    for face_index in blue_faces:
        corners = diagram.faces[face_index].corners
        for i, (ci, _) in enumerate(corners):
            cj = corners[(i + 1) % len(corners)][0]
            if forest.union(red_face_at[ci], red_face_at[cj]):
                band = len(band_faces)
                next_band[ci] = band
                prev_band[cj] = band
                band_faces.append((red_face_at[ci], red_face_at[cj]))

    tokens: Dict[int, List[Token]] = {}
    for face_index in red_faces:
        row: List[Token] = []
        for ci, k in diagram.faces[face_index].corners:
            row.append(("T", ci, (k + 3) % 4))
            if ci in next_band:
                row.append(("band", next_band[ci], "next"))
            if ci in prev_band:
                row.append(("band", prev_band[ci], "prev"))
            row.append(("T", ci, (k + 2) % 4))
            row.append(("tan", diagram.label_at((ci, (k + 1) % 4))))
        tokens[face_index] = row

    band_home: Dict[Tuple[int, str], Tuple[int, int]] = {}
    for face_index, row in tokens.items():
        for position, token in enumerate(row):
            if token[0] == "band":
                band_home[(token[1], token[2])] = (face_index, position)

    output: List[Token] = []

    def emit(face_index: int, start: int, count: int) -> None:
        row = tokens[face_index]
        for step in range(count):
            token = row[(start + step) % len(row)]
            if token[0] != "band":
                output.append(token)
                continue
            band, end = token[1], token[2]
            other_face, other_position = band_home[(band, "prev" if end == "next" else "next")]
            emit(other_face, other_position + 1, len(tokens[other_face]) - 1)

    root = red_face_at[piece[0]]
    emit(root, 0, len(tokens[root]))
    return output


def validate_presentation(p: ThreePagePresentation) -> List[Violation]:
    violations: List[Violation] = []
    incident: Dict[int, List[int]] = {i: [] for i in range(p.m)}
    for index, arc in enumerate(p.arcs):
        if not (0 <= arc.a < p.m and 0 <= arc.b < p.m):
            violations.append(
                Violation(ViolationKind.ENDPOINT_RANGE, f"arc {index} leaves 0..{p.m - 1}", (arc.a, arc.b))
            )
            continue
        if arc.a == arc.b:
            violations.append(
                Violation(ViolationKind.DEGENERATE_ARC, f"arc {index} has equal endpoints", (arc.a,))
            )
            continue
        if arc.page not in (1, 2, 3):
            violations.append(Violation(ViolationKind.BAD_PAGE, f"arc {index} is on page {arc.page}"))
        incident[arc.a].append(index)
        incident[arc.b].append(index)

    for point, arcs_here in incident.items():
        if len(arcs_here) != 2:
            violations.append(
                Violation(ViolationKind.DEGREE, f"point {point} meets {len(arcs_here)} arcs", (point,))
            )
        elif p.arcs[arcs_here[0]].page == p.arcs[arcs_here[1]].page:
            violations.append(
                Violation(
                    ViolationKind.SAME_PAGE_ADJACENT,
                    f"two page-{p.arcs[arcs_here[0]].page} arcs meet at point {point}",
                    (point,),
                )
            )

    by_page: Dict[int, List[Tuple[int, int]]] = {}
    for arc in p.arcs:
        if arc.a != arc.b:
            by_page.setdefault(arc.page, []).append(arc.endpoints)
    for page, chords in sorted(by_page.items()):
        for i in range(len(chords)):
            for j in range(i + 1, len(chords)):
                if interleaved(chords[i], chords[j]):
                    violations.append(
                        Violation(
                            ViolationKind.INTERLEAVING,
                            f"page-{page} arcs {chords[i]} and {chords[j]} interleave",
                            chords[i] + chords[j],
                        )
                    )

    if not any(v.kind in (ViolationKind.DEGREE, ViolationKind.ENDPOINT_RANGE) for v in violations):
        covered = sum(len(points) for points, _, _ in presentation_cycles(p))
        if covered != p.m:
            violations.append(Violation(ViolationKind.OPEN_CYCLE, "arcs do not close into cycles"))
    return violations


def interleaved(first: Tuple[int, int], second: Tuple[int, int]) -> bool:
    """Chords with four distinct endpoints where exactly one end of `second` lies inside `first`"""
    a, b = sorted(first)
    c, d = sorted(second)
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def presentation_cycles(p: ThreePagePresentation) -> List[Tuple[List[int], List[int], List[Tuple[int, int]]]]:
    """
    Closed components as (points, arc indices, directed steps). Each starts
    at its smallest point and leaves along the lower-page arc.
    """
    incident: Dict[int, List[int]] = {i: [] for i in range(p.m)}
    for index, arc in enumerate(p.arcs):
        incident[arc.a].append(index)
        incident[arc.b].append(index)

    used = set()
    cycles = []
    for start in range(p.m):
        if any(i in used for i in incident[start]) or not incident[start]:
            continue
        first = min(incident[start], key=lambda i: (p.arcs[i].page, i))
        points, arcs, steps = [], [], []
        point, arc_index = start, first
        while arc_index not in used:
            used.add(arc_index)
            nxt = p.arcs[arc_index].other(point)
            points.append(point)
            arcs.append(arc_index)
            steps.append((point, nxt))
            candidates = [i for i in incident[nxt] if i != arc_index]
            if not candidates:
                break
            point, arc_index = nxt, candidates[0]
        cycles.append((points, arcs, steps))
    return cycles


def is_rotated(p: ThreePagePresentation) -> RotationCertificate:
    violations = validate_presentation(p)
    if violations:
        raise InvalidPresentationError(
            f"presentation has {len(violations)} violation(s)", violations=violations
        )
    components = []
    for points, arcs, _ in presentation_cycles(p):
        pages = [p.arcs[i].page for i in arcs]
        steps = {(pages[(i + 1) % len(pages)] - pages[i]) % 3 for i in range(len(pages))}
        direction: Optional[Direction] = None
        if steps == {1}:
            direction = Direction.FORWARD
        elif steps == {2}:
            direction = Direction.BACKWARD
        components.append(
            ComponentRotation(
                points=tuple(points),
                pages=tuple(pages),
                rotated=direction is not None,
                direction=direction,
            )
        )
    return RotationCertificate(components=tuple(components))


def _cross(ux, uy, vx, vy):
    return ux * vy - uy * vx


def _position(k: int) -> Tuple[int, int]:
    return k, k * k


def reconstruct_diagram(p: ThreePagePresentation) -> LinkDiagram:
    """
    Place point k at (k, k^2), draw pages 1 and 2 as straight chords and
    read off a PD code: each crossing is an interleaving page-1/page-2
    pair with the page-1 strand underneath.
    """
    violations = validate_presentation(p)
    if violations:
        raise InvalidPresentationError(
            f"presentation has {len(violations)} violation(s)", violations=violations
        )

    cycles = presentation_cycles(p)
    direction: Dict[int, Tuple[int, int]] = {}
    for _, arcs, steps in cycles:
        for arc_index, step in zip(arcs, steps):
            direction[arc_index] = step

    under_arcs = [i for i, a in enumerate(p.arcs) if a.page == Page.UNDER]
    over_arcs = [i for i, a in enumerate(p.arcs) if a.page == Page.OVER]
    crossing_pairs: List[Tuple[int, int]] = []
    for i in under_arcs:
        for j in over_arcs:
            if interleaved(p.arcs[i].endpoints, p.arcs[j].endpoints):
                crossing_pairs.append((i, j))

    events: Dict[int, List[Tuple[Fraction, int]]] = {}
    for crossing, (i, j) in enumerate(crossing_pairs):
        for this, that in ((i, j), (j, i)):
            events.setdefault(this, []).append((_parameter(direction[this], direction[that]), crossing))

    # passages per crossing: role -> (incoming label, outgoing label)
    under_ends: Dict[int, Tuple[int, int]] = {}
    over_ends: Dict[int, Tuple[int, int]] = {}
    base = 0
    for points, arcs, _ in cycles:
        passages = []
        for arc_index in arcs:
            page = p.arcs[arc_index].page
            for _, crossing in sorted(events.get(arc_index, [])):
                passages.append((crossing, page))
        if not passages:
            raise TrivialComponentError(
                f"component through binding points {points} has no crossings (trivial component)"
            )
        k = len(passages)
        for j, (crossing, page) in enumerate(passages):
            ends = (base + (j - 1) % k + 1, base + j + 1)
            (under_ends if page == Page.UNDER else over_ends)[crossing] = ends
        base += k

    crossings = []
    for crossing, (i, j) in enumerate(crossing_pairs):
        u_in, u_out = under_ends[crossing]
        o_in, o_out = over_ends[crossing]
        (ua, ub), (oa, ob) = direction[i], direction[j]
        (uax, uay), (ubx, uby) = _position(ua), _position(ub)
        (oax, oay), (obx, oby) = _position(oa), _position(ob)
        if _cross(uax - ubx, uay - uby, obx - oax, oby - oay) > 0:
            crossings.append([u_in, o_out, u_out, o_in])
        else:
            crossings.append([u_in, o_in, u_out, o_out])

    logger.debug(f"Reconstructed {len(crossings)} crossings from {p.m} binding points")
    return make_diagram(crossings)


def _parameter(along: Tuple[int, int], other: Tuple[int, int]) -> Fraction:
    """Where chord `other` meets chord `along`, as a fraction of `along` from its start"""
    (px, py), (qx, qy) = _position(along[0]), _position(along[1])
    (rx, ry), (sx, sy) = _position(other[0]), _position(other[1])
    numerator = _cross(rx - px, ry - py, sx - rx, sy - ry)
    denominator = _cross(qx - px, qy - py, sx - rx, sy - ry)
    return Fraction(numerator, denominator)
