"""
Diagram Core - parse, validate and navigate planar diagram (PD) codes
"""

import json
import logging
import re
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..models.link_diagram import (
    Component,
    CrossingRecord,
    Face,
    Handedness,
    LinkDiagram,
    Position,
)
from ..utils.errors import (
    EmptyInputError,
    LabelMultiplicityError,
    NonPlanarError,
    PDSyntaxError,
    UnknownEdgeError,
)
from ..utils.union_find import UnionFind

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")
_SKIP = re.compile(r"(?:\s+|#[^\n]*)+")


def parse_pd(text: str) -> LinkDiagram:
    """
    Parse a PD code: whitespace separated `X[a,b,c,d]` tokens with `#`
    comments, or the JSON form `{"pd": [[a,b,c,d], ...]}`.
    """
    stripped = _SKIP.sub(" ", text).strip() if text else ""
    if not stripped:
        raise EmptyInputError("empty PD input")

    if text.lstrip().startswith("{"):
        crossings = _parse_json(text)
    else:
        crossings = _parse_tokens(text)

    diagram = make_diagram(crossings)
    logger.debug(f"Parsed diagram with {diagram.n} crossings and {len(diagram.faces)} faces")
    return diagram


def _parse_tokens(text: str) -> List[Tuple[int, int, int, int]]:
    crossings = []
    position = 0
    while position < len(text):
        skip = _SKIP.match(text, position)
        if skip:
            position = skip.end()
            continue
        match = _TOKEN.match(text, position)
        if not match:
            snippet = text[position:position + 12]
            raise PDSyntaxError(f"expected X[a,b,c,d], found {snippet!r}", position)
        crossings.append(tuple(int(g) for g in match.groups()))
        position = match.end()
    return crossings


def _parse_json(text: str) -> List[Tuple[int, int, int, int]]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise PDSyntaxError(f"invalid JSON: {e.msg}", e.pos) from e
    pd = payload.get("pd") if isinstance(payload, dict) else None
    if not isinstance(pd, list):
        raise PDSyntaxError("JSON input needs a \"pd\" list", 0)
    if not pd:
        raise EmptyInputError("empty PD input")
    crossings = []
    for index, entry in enumerate(pd):
        if (
            not isinstance(entry, list)
            or len(entry) != 4
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in entry)
        ):
            raise PDSyntaxError(f"crossing {index} is not four integers", index)
        crossings.append(tuple(entry))
    return crossings


def make_diagram(
    crossings: Sequence[Sequence[int]], free_loops: int = 0
) -> LinkDiagram:
    """
    Validate label multiplicity, trace faces, certify the Euler count of
    every connected piece and derive oriented components.
    """
    records = tuple(CrossingRecord(tuple(int(v) for v in c)) for c in crossings)
    n = len(records)
    occurrences: Dict[int, List[Position]] = {}
    for ci, record in enumerate(records):
        for slot, label in enumerate(record.slots):
            occurrences.setdefault(label, []).append((ci, slot))

    expected = set(range(1, 2 * n + 1))
    if set(occurrences) != expected:
        stray = sorted(set(occurrences) - expected)
        missing = sorted(expected - set(occurrences))
        raise LabelMultiplicityError(
            f"labels must be exactly 1..{2 * n}; unexpected {stray}, missing {missing}"
        )
    for label, places in occurrences.items():
        if len(places) != 2:
            raise LabelMultiplicityError(
                f"edge label {label} occurs {len(places)} times, expected 2"
            )

    draft = LinkDiagram(
        crossings=records,
        faces=(),
        components=(),
        free_loops=free_loops,
        _occurrences={k: (v[0], v[1]) for k, v in occurrences.items()},
    )
    faces = trace_faces(draft)
    _check_euler(draft, faces)
    components = _trace_components(draft)
    return LinkDiagram(
        crossings=records,
        faces=tuple(faces),
        components=tuple(components),
        free_loops=free_loops,
        _occurrences=draft._occurrences,
    )


def trace_faces(diagram: LinkDiagram) -> List[Face]:
    """
    Corner (c, k) is followed by the far end of the edge at slot k + 1.
    Faces come out ordered by, and starting at, their smallest corner.
    """
    if diagram.faces:
        return list(diagram.faces)
    seen = set()
    faces: List[Face] = []
    for ci in range(diagram.n):
        for k in range(4):
            if (ci, k) in seen:
                continue
            corners = []
            corner = (ci, k)
            while corner not in seen:
                seen.add(corner)
                corners.append(corner)
                corner = diagram.partner((corner[0], (corner[1] + 1) % 4))
            if corner != (ci, k):
                raise NonPlanarError(f"face tracing from corner {(ci, k)} did not close")
            faces.append(Face(index=len(faces), corners=tuple(corners)))
    return faces


def connected_pieces(diagram: LinkDiagram) -> List[List[int]]:
    """Crossing indices of each connected piece, ordered by smallest crossing"""
    forest = UnionFind(range(diagram.n))
    for label in diagram.labels:
        (c1, _), (c2, _) = diagram.occurrences(label)
        forest.union(c1, c2)
    pieces: Dict[int, List[int]] = {}
    for ci in range(diagram.n):
        pieces.setdefault(forest.find(ci), []).append(ci)
    return sorted(pieces.values(), key=lambda piece: piece[0])


def _check_euler(diagram: LinkDiagram, faces: List[Face]) -> None:
    piece_of = {}
    pieces = connected_pieces(diagram)
    for index, piece in enumerate(pieces):
        for ci in piece:
            piece_of[ci] = index
    face_counts = [0] * len(pieces)
    for face in faces:
        face_counts[piece_of[face.corners[0][0]]] += 1
    for index, piece in enumerate(pieces):
        v = len(piece)
        edges = 2 * v
        if face_counts[index] != edges - v + 2:
            raise NonPlanarError(
                f"piece starting at crossing {piece[0]} has {face_counts[index]} faces, "
                f"expected {edges - v + 2}; the code is not planar"
            )


def _trace_components(diagram: LinkDiagram) -> List[Component]:
    visited = set()
    components: List[Component] = []
    for label in diagram.labels:
        if label in visited:
            continue
        start = diagram.occurrences(label)[0]
        edges = [label]
        passages: List[Position] = []
        entry = start
        while True:
            visited.add(diagram.label_at(entry))
            passages.append(entry)
            exit_slot = (entry[0], (entry[1] + 2) % 4)
            entry = diagram.partner(exit_slot)
            if entry == start:
                break
            edges.append(diagram.label_at(exit_slot))
        components.append(
            Component(index=len(components), edges=tuple(edges), passages=tuple(passages))
        )
    return components


def crossing_signs(diagram: LinkDiagram) -> List[int]:
    """
    Sign per crossing under the deterministic component orientations:
    with entry slots o (over) and u (under), +1 iff o - u = 3 mod 4.
    """
    under: Dict[int, int] = {}
    over: Dict[int, int] = {}
    for component in diagram.components:
        for ci, slot in component.passages:
            (under if slot % 2 == 0 else over)[ci] = slot
    return [1 if (over[ci] - under[ci]) % 4 == 3 else -1 for ci in range(diagram.n)]


def crossing_components(diagram: LinkDiagram) -> List[Tuple[int, int]]:
    """(under component, over component) per crossing"""
    under: Dict[int, int] = {}
    over: Dict[int, int] = {}
    for component in diagram.components:
        for ci, slot in component.passages:
            (under if slot % 2 == 0 else over)[ci] = component.index
    return [(under[ci], over[ci]) for ci in range(diagram.n)]


def components_and_writhe(diagram: LinkDiagram) -> Tuple[List[Component], int]:
    return list(diagram.components), sum(crossing_signs(diagram))


def self_writhe(diagram: LinkDiagram) -> int:
    """Sum of signs over crossings whose two strands share a component"""
    signs = crossing_signs(diagram)
    return sum(
        sign
        for sign, (u, o) in zip(signs, crossing_components(diagram))
        if u == o
    )


def mirror_diagram(diagram: LinkDiagram) -> LinkDiagram:
    """[a,b,c,d] -> [b,c,d,a] swaps the over and under strands"""
    rotated = [c.slots[1:] + c.slots[:1] for c in diagram.crossings]
    return make_diagram(rotated, diagram.free_loops)


def mirror_pieces(diagram: LinkDiagram, crossings: Iterable[int]) -> LinkDiagram:
    """Mirror only the given crossings, normally whole connected pieces"""
    chosen = set(crossings)
    rows = [
        c.slots[1:] + c.slots[:1] if ci in chosen else c.slots
        for ci, c in enumerate(diagram.crossings)
    ]
    return make_diagram(rows, diagram.free_loops)


def add_reidemeister1(
    diagram: LinkDiagram, edge: int, handedness: Handedness = Handedness.POSITIVE
) -> LinkDiagram:
    """
    Insert a kink on `edge`. The external ends are wired so an alternating
    diagram stays alternating. New labels are 2n+1 (the kink loop) and
    2n+2 (the far half of the split edge).
    """
    if edge not in diagram.labels:
        raise UnknownEdgeError(f"edge {edge} does not exist (labels are 1..{diagram.edge_count})")

    near, far = diagram.occurrences(edge)
    loop = diagram.edge_count + 1
    split = diagram.edge_count + 2

    crossings = [list(c.slots) for c in diagram.crossings]
    crossings[far[0]][far[1]] = split

    kink = [0, 0, 0, 0]
    if handedness is Handedness.POSITIVE:
        kink[0] = kink[1] = loop
        under_slot, over_slot = 2, 3
    else:
        kink[0] = kink[3] = loop
        under_slot, over_slot = 2, 1
    # the near end is passed over at its crossing iff its slot is odd
    if near[1] % 2 == 1:
        kink[under_slot], kink[over_slot] = edge, split
    else:
        kink[under_slot], kink[over_slot] = split, edge
    crossings.append(kink)

    logger.debug(f"Added {handedness.name.lower()} kink on edge {edge}")
    return make_diagram(crossings, diagram.free_loops)


def format_pd(diagram: LinkDiagram) -> str:
    text = " ".join(
        "X[" + ",".join(str(v) for v in c.slots) + "]" for c in diagram.crossings
    )
    if diagram.free_loops:
        suffix = f"# plus {diagram.free_loops} crossingless unknot component(s)"
        text = f"{text}  {suffix}" if text else suffix
    return text


def rename_labels(
    crossings: Sequence[Sequence[int]], mapping: Optional[Dict[int, int]] = None
) -> List[List[int]]:
    """Apply `mapping`, then compress labels to 1..2n preserving their order"""
    mapped = [[(mapping or {}).get(v, v) for v in c] for c in crossings]
    ranks = {label: i + 1 for i, label in enumerate(sorted({v for c in mapped for v in c}))}
    return [[ranks[v] for v in c] for c in mapped]
