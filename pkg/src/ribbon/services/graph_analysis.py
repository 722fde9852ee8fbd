"""
Graph Analysis - bipartitions with odd-cycle certificates, nugatory
crossings, reduction, shading selection and connected sums
"""

import logging
from collections import deque
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from ..models.link_diagram import LinkDiagram, ReductionTrace
from ..models.tait import (
    Bipartition,
    Color,
    OddCycleCertificate,
    ShadingSelection,
    TaitGraph,
)
from ..utils.errors import (
    InternalConsistencyError,
    NonAlternatingError,
    NonPlanarError,
    SignIncompatibleError,
    UnknownEdgeError,
)
from ..utils.union_find import UnionFind
from .checkerboard import compact_shading, is_alternating, shading_graph
from .diagram_core import connected_pieces, make_diagram, rename_labels

logger = logging.getLogger(__name__)


def bipartition(graph: TaitGraph) -> Bipartition:
    """
    Breadth-first two-coloring, red seeds at the smallest vertex of each
    piece. A loop, or else the first odd cycle met, is the certificate.
    """
    k = graph.vertex_count
    for edge in graph.edges:
        if edge.is_loop:
            return Bipartition(
                colors=tuple(Color.RED for _ in range(k)),
                valid=False,
                certificate=OddCycleCertificate(vertices=(edge.u,), crossings=(edge.crossing,)),
            )

    adjacency: Dict[int, List[Tuple[int, int]]] = {v: [] for v in range(k)}
    for edge in graph.edges:
        adjacency[edge.u].append((edge.v, edge.crossing))
        adjacency[edge.v].append((edge.u, edge.crossing))

    side: Dict[int, int] = {}
    parent: Dict[int, Optional[Tuple[int, int]]] = {}
    depth: Dict[int, int] = {}
    for seed in range(k):
        if seed in side:
            continue
        side[seed], parent[seed], depth[seed] = 0, None, 0
        queue = deque([seed])
        while queue:
            u = queue.popleft()
            for v, crossing in adjacency[u]:
                if v not in side:
                    side[v] = 1 - side[u]
                    parent[v] = (u, crossing)
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif side[v] == side[u]:
                    certificate = _odd_cycle(u, v, crossing, parent, depth)
                    return Bipartition(
                        colors=tuple(Color.RED if side.get(x, 0) == 0 else Color.BLUE for x in range(k)),
                        valid=False,
                        certificate=certificate,
                    )

    colors = tuple(Color.RED if side[v] == 0 else Color.BLUE for v in range(k))
    return Bipartition(colors=colors, valid=True)


def _odd_cycle(u, v, crossing, parent, depth) -> OddCycleCertificate:
    """Tree paths from u and v up to their common ancestor, closed by the edge (u, v)"""
    up_u: List[Tuple[int, int]] = []
    up_v: List[Tuple[int, int]] = []
    a, b = u, v
    while depth[a] > depth[b]:
        up_u.append((a, parent[a][1]))
        a = parent[a][0]
    while depth[b] > depth[a]:
        up_v.append((b, parent[b][1]))
        b = parent[b][0]
    while a != b:
        up_u.append((a, parent[a][1]))
        a = parent[a][0]
        up_v.append((b, parent[b][1]))
        b = parent[b][0]
    apex = a
    # walk: apex -> ... -> u -> v -> ... -> apex
    vertices = [apex] + [x for x, _ in reversed(up_u)]
    crossings = [c for _, c in reversed(up_u)]
    crossings.append(crossing)
    for x, c in up_v:
        vertices.append(x)
        crossings.append(c)
    return OddCycleCertificate(vertices=tuple(vertices), crossings=tuple(crossings))


def verify_closed_walk(graph: TaitGraph, certificate: OddCycleCertificate) -> bool:
    """Re-walk a certificate: consecutive vertices joined by the named edges, odd length"""
    vertices, crossings = certificate.vertices, certificate.crossings
    if len(vertices) != len(crossings) or len(crossings) % 2 == 0:
        return False
    for i, crossing in enumerate(crossings):
        edge = graph.edges[crossing]
        a, b = vertices[i], vertices[(i + 1) % len(vertices)]
        if {edge.u, edge.v} != {a, b}:
            return False
    return True


def nugatory_edges(graph: TaitGraph) -> FrozenSet[int]:
    """Loops and bridges, by crossing id. Parallel edges are never bridges."""
    loops = {e.crossing for e in graph.edges if e.is_loop}
    return frozenset(loops | _bridges(graph))


def _bridges(graph: TaitGraph) -> Set[int]:
    adjacency: Dict[int, List[Tuple[int, int]]] = {v: [] for v in range(graph.vertex_count)}
    for edge in graph.edges:
        if not edge.is_loop:
            adjacency[edge.u].append((edge.v, edge.crossing))
            adjacency[edge.v].append((edge.u, edge.crossing))

    order: Dict[int, int] = {}
    low: Dict[int, int] = {}
    bridges: Set[int] = set()
    counter = 0
    for root in range(graph.vertex_count):
        if root in order:
            continue
        order[root] = low[root] = counter
        counter += 1
        # frames: (vertex, id of the edge used to reach it, neighbour iterator)
        stack = [(root, None, iter(adjacency[root]))]
        while stack:
            vertex, via, neighbours = stack[-1]
            advanced = False
            for nxt, edge_id in neighbours:
                if edge_id == via:
                    continue
                if nxt in order:
                    low[vertex] = min(low[vertex], order[nxt])
                else:
                    order[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append((nxt, edge_id, iter(adjacency[nxt])))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            if stack:
                parent_vertex = stack[-1][0]
                low[parent_vertex] = min(low[parent_vertex], low[vertex])
                if low[vertex] > order[parent_vertex]:
                    bridges.add(via)
    return bridges


def reduce_nugatory(diagram: LinkDiagram) -> LinkDiagram:
    return reduce_nugatory_with_trace(diagram).diagram


def reduce_nugatory_with_trace(diagram: LinkDiagram) -> ReductionTrace:
    """
    Remove nugatory crossings one at a time. Each removal flips one side
    of the crossing over and splices the strands, which untwists it while
    keeping the diagram alternating.
    """
    alternation = is_alternating(diagram)
    if not alternation:
        raise NonAlternatingError(
            "nugatory reduction needs an alternating diagram",
            certificates=[alternation.to_dict()["certificate"]],
        )

    removed: List[int] = []
    current = diagram
    while current.n:
        nugatory = nugatory_edges(shading_graph(current, 0))
        if not nugatory:
            break
        crossing = min(nugatory)
        current = _untwist(current, crossing)
        removed.append(crossing)
        logger.debug(f"Removed nugatory crossing {crossing}; {current.n} crossings remain")

    if not is_alternating(current):
        raise InternalConsistencyError("nugatory reduction produced a non-alternating diagram")
    logger.info(f"Nugatory reduction: {diagram.n} -> {current.n} crossings in {len(removed)} steps")
    return ReductionTrace(diagram=current, steps=len(removed), removed_crossings=tuple(removed))


def _untwist(diagram: LinkDiagram, crossing: int) -> LinkDiagram:
    reached_slots = {0}
    side: Set[int] = set()
    stack = [diagram.partner((crossing, 0))]
    while stack:
        ci, slot = stack.pop()
        if ci == crossing:
            reached_slots.add(slot)
            continue
        if ci in side:
            continue
        side.add(ci)
        for s in range(4):
            stack.append(diagram.partner((ci, s)))

    if reached_slots == {0, 1}:
        i = 0
    elif reached_slots == {0, 3}:
        i = 3
    else:
        raise InternalConsistencyError(
            f"crossing {crossing} is not nugatory: slot 0 reaches slots {sorted(reached_slots)}"
        )

    piece = next(p for p in connected_pieces(diagram) if crossing in p)
    other_side = set(piece) - side - {crossing}
    flipped = side if len(side) <= len(other_side) else other_side

    slots = diagram.crossings[crossing].slots
    labels = UnionFind(diagram.labels)
    labels.union(slots[i], slots[(i + 2) % 4])
    labels.union(slots[(i + 1) % 4], slots[(i + 3) % 4])

    remaining: List[List[int]] = []
    for ci, record in enumerate(diagram.crossings):
        if ci == crossing:
            continue
        row = [labels.find(v) for v in record.slots]
        if ci in flipped:
            row = [row[3], row[2], row[1], row[0]]
        remaining.append(row)

    free_loops = diagram.free_loops
    if not side and not other_side:
        free_loops += 1

    return make_diagram(rename_labels(remaining), free_loops)


def select_bipartite_shading(diagram: LinkDiagram) -> ShadingSelection:
    """
    Each connected piece tries shading 0 first, then shading 1; the first
    index whose part of the Tait graph is bipartite wins for that piece.
    """
    alternation = is_alternating(diagram)
    if not alternation:
        raise NonAlternatingError(
            "shading selection needs an alternating diagram",
            certificates=[alternation.to_dict()["certificate"]],
        )
    graphs = [shading_graph(diagram, which) for which in (0, 1)]
    chosen: List[int] = []
    for index, piece in enumerate(connected_pieces(diagram)):
        rejections = []
        for which in (0, 1):
            split = bipartition(_restrict(graphs[which], piece))
            if split.valid:
                chosen.append(which)
                break
            rejections.append(split.certificate)
        else:
            logger.info(f"Piece {index} has no bipartite shading")
            return ShadingSelection(found=False, rejections=tuple(rejections))

    which = compact_shading(chosen) if chosen else 0
    graph = graphs[which] if isinstance(which, int) else shading_graph(diagram, which)
    split = bipartition(graph)
    if not split.valid:
        raise InternalConsistencyError("per-piece bipartitions do not combine")
    return ShadingSelection(found=True, which_shading=which, graph=graph, bipartition=split)


def _restrict(graph: TaitGraph, crossings: List[int]) -> TaitGraph:
    """Same vertices, only the edges of the given crossings"""
    members = set(crossings)
    return TaitGraph(
        which_shading=graph.which_shading,
        faces=graph.faces,
        edges=tuple(e for e in graph.edges if e.crossing in members),
    )


def bipartite_shadings(diagram: LinkDiagram) -> Tuple[bool, bool]:
    return tuple(bipartition(shading_graph(diagram, which)).valid for which in (0, 1))


def connected_sum(d1: LinkDiagram, e1: int, d2: LinkDiagram, e2: int) -> LinkDiagram:
    """
    Cut edge e1 of d1 and edge e2 of d2 and reconnect the four ends. Of the
    two reconnections the first that keeps the result alternating is used.
    """
    if e1 not in d1.labels:
        raise UnknownEdgeError(f"edge {e1} does not exist in the first diagram")
    if e2 not in d2.labels:
        raise UnknownEdgeError(f"edge {e2} does not exist in the second diagram")
    for name, d in (("first", d1), ("second", d2)):
        alternation = is_alternating(d)
        if not alternation:
            raise NonAlternatingError(
                f"the {name} diagram is not alternating",
                certificates=[alternation.to_dict()["certificate"]],
            )

    plus1, minus1 = bipartite_shadings(d1)
    plus2, minus2 = bipartite_shadings(d2)
    if (plus1 or minus1) and (plus2 or minus2) and not ((plus1 and plus2) or (minus1 and minus2)):
        raise SignIncompatibleError(
            "the bipartite shadings of the two diagrams carry opposite signs; mirror one input first",
            certificates=[
                {"first": {"shading_0": plus1, "shading_1": minus1}},
                {"second": {"shading_0": plus2, "shading_1": minus2}},
            ],
        )

    shift = d1.edge_count
    base = [list(c.slots) for c in d1.crossings]
    base += [[v + shift for v in c.slots] for c in d2.crossings]
    x, y = e1, e2 + shift
    first_a, first_b = d1.occurrences(e1)
    second_a, second_b = d2.occurrences(e2)
    second_a = (second_a[0] + d1.n, second_a[1])
    second_b = (second_b[0] + d1.n, second_b[1])

    for partner_a, partner_b in ((second_a, second_b), (second_b, second_a)):
        crossings = [row[:] for row in base]
        for (ci, slot), label in (
            (first_a, x), (partner_a, x), (first_b, y), (partner_b, y)
        ):
            crossings[ci][slot] = label
        try:
            candidate = make_diagram(rename_labels(crossings), d1.free_loops + d2.free_loops)
        except NonPlanarError:
            continue
        if is_alternating(candidate):
            logger.info(f"Connected sum: {d1.n} + {d2.n} crossings")
            return candidate
    raise InternalConsistencyError("neither reconnection of the connected sum is alternating")
