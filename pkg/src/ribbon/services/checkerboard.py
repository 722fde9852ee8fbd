"""
Checkerboard - face two-coloring, signed Tait graphs and alternation
"""

import logging
from collections import deque
from typing import Dict, Optional, Sequence, Tuple, Union

from ..models.link_diagram import Corner, LinkDiagram
from ..models.tait import AlternationResult, Coloring, ShadingIndex, TaitEdge, TaitGraph
from ..utils.errors import InternalConsistencyError
from .diagram_core import connected_pieces

logger = logging.getLogger(__name__)


def corner_faces(diagram: LinkDiagram) -> Dict[Corner, int]:
    return {corner: face.index for face in diagram.faces for corner in face.corners}


def piece_shadings(diagram: LinkDiagram, which_shading: Union[int, Sequence[int]]) -> Tuple[int, ...]:
    """Expand a shading to one index per connected piece"""
    count = len(connected_pieces(diagram))
    if isinstance(which_shading, int):
        indices = (which_shading,) * count
    else:
        indices = tuple(which_shading)
        if len(indices) != count:
            raise ValueError(f"expected {count} per-piece shading indices, got {len(indices)}")
    for which in indices:
        if which not in (0, 1):
            raise ValueError(f"which_shading must be 0 or 1, got {which}")
    return indices


def compact_shading(indices: Sequence[int]) -> ShadingIndex:
    """A single index when every piece agrees"""
    if indices and len(set(indices)) == 1:
        return indices[0]
    return tuple(indices)


def checkerboard_color(diagram: LinkDiagram, which_shading: Union[int, Sequence[int]]) -> Coloring:
    """
    Corners 0 and 2 of a crossing share a color, as do corners 1 and 3.
    In connected piece i, corner 0 of the piece's first crossing is shaded
    iff its shading index is 0. An int applies to every piece.
    """
    if isinstance(which_shading, int) and which_shading not in (0, 1):
        raise ValueError(f"which_shading must be 0 or 1, got {which_shading}")
    indices = piece_shadings(diagram, which_shading)

    face_of = corner_faces(diagram)
    # base[c] = color of corner (c, 0); corner k has color base[c] ^ (k % 2)
    base: Dict[int, bool] = {}
    for piece, which in zip(connected_pieces(diagram), indices):
        seed = piece[0]
        base[seed] = which == 0
        queue = deque([seed])
        while queue:
            ci = queue.popleft()
            for k in range(4):
                color = base[ci] ^ bool(k % 2)
                for other_ci, other_k in diagram.faces[face_of[(ci, k)]].corners:
                    required = color ^ bool(other_k % 2)
                    if other_ci not in base:
                        base[other_ci] = required
                        queue.append(other_ci)
                    elif base[other_ci] != required:
                        raise InternalConsistencyError(
                            f"inconsistent face parity at crossing {other_ci}"
                        )

    shaded = []
    for face in diagram.faces:
        ci, k = face.corners[0]
        shaded.append(base[ci] ^ bool(k % 2))
    stored = which_shading if isinstance(which_shading, int) else compact_shading(indices)
    return Coloring(which_shading=stored, shaded=tuple(shaded))


def tait_graph(diagram: LinkDiagram, coloring: Coloring) -> TaitGraph:
    """
    One edge per crossing between the shaded faces at its opposite
    corners; sign + when corners {0, 2} are shaded, - when {1, 3} are.
    """
    face_of = corner_faces(diagram)
    shaded_faces = coloring.shaded_faces()
    vertex_of = {face: v for v, face in enumerate(shaded_faces)}
    edges = []
    for ci in range(diagram.n):
        if coloring.shaded[face_of[(ci, 0)]]:
            u, v, sign = face_of[(ci, 0)], face_of[(ci, 2)], 1
        else:
            u, v, sign = face_of[(ci, 1)], face_of[(ci, 3)], -1
        edges.append(TaitEdge(crossing=ci, u=vertex_of[u], v=vertex_of[v], sign=sign))
    return TaitGraph(
        which_shading=coloring.which_shading,
        faces=tuple(shaded_faces),
        edges=tuple(edges),
    )


def shading_graph(diagram: LinkDiagram, which_shading: Union[int, Sequence[int]]) -> TaitGraph:
    return tait_graph(diagram, checkerboard_color(diagram, which_shading))


def is_alternating(diagram: LinkDiagram) -> AlternationResult:
    """
    Walk every component and compare consecutive passages. The verdict is
    cross-checked against sign uniformity of both Tait graphs per piece.
    """
    result: Optional[AlternationResult] = None
    for component in diagram.components:
        passages = component.passages
        over = [slot % 2 == 1 for _, slot in passages]
        for i in range(len(passages)):
            j = (i + 1) % len(passages)
            if over[i] == over[j]:
                result = AlternationResult(
                    alternating=False,
                    component=component.index,
                    position=i,
                    crossings=(passages[i][0], passages[j][0]),
                )
                break
        if result is not None:
            break
    if result is None:
        result = AlternationResult(alternating=True)

    uniform = _uniform_sign_per_piece(diagram)
    if uniform != result.alternating:
        raise InternalConsistencyError(
            f"strand walk says alternating={result.alternating} but Tait signs say {uniform}"
        )
    return result


def _uniform_sign_per_piece(diagram: LinkDiagram) -> bool:
    for which in (0, 1):
        graph = shading_graph(diagram, which)
        for piece in connected_pieces(diagram):
            if len({graph.edges[ci].sign for ci in piece}) > 1:
                return False
    return True

