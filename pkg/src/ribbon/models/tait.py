"""
Tait Graph Models - checkerboard colorings, signed dual multigraphs and
their bipartitions
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple, Union

import networkx as nx

# a single shading index, or one per connected piece of a split diagram
ShadingIndex = Union[int, Tuple[int, ...]]


class Color(Enum):
    """Bipartition class"""
    RED = "red"
    BLUE = "blue"


@dataclass(frozen=True)
class Coloring:
    """Shaded flag per face index"""
    which_shading: ShadingIndex
    shaded: Tuple[bool, ...]

    def shaded_faces(self) -> List[int]:
        return [i for i, flag in enumerate(self.shaded) if flag]

    def to_dict(self) -> Dict[str, Any]:
        return {"which_shading": _jsonable(self.which_shading), "shaded": self.shaded_faces()}


@dataclass(frozen=True)
class TaitEdge:
    """Edge of a Tait graph; identified by its crossing"""
    crossing: int
    u: int
    v: int
    sign: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, vertex: int) -> int:
        return self.v if vertex == self.u else self.u


@dataclass(frozen=True)
class TaitGraph:
    """
    Signed dual multigraph. Vertex i stands for face `faces[i]` of the
    diagram; edge order follows crossing order.
    """
    which_shading: ShadingIndex
    faces: Tuple[int, ...]
    edges: Tuple[TaitEdge, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.faces)

    def degree(self, vertex: int) -> int:
        return sum((e.u == vertex) + (e.v == vertex) for e in self.edges)

    def is_uniform_sign(self) -> bool:
        return len({e.sign for e in self.edges}) <= 1

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        for edge in self.edges:
            graph.add_edge(edge.u, edge.v, key=edge.crossing, sign=edge.sign)
        return graph

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertices": self.vertex_count,
            "edges": [[e.u, e.v, e.sign] for e in self.edges],
        }


@dataclass(frozen=True)
class OddCycleCertificate:
    """
    Closed walk of odd length: vertices[i] and vertices[i+1] (cyclically)
    are joined by the Tait edge of crossings[i].
    """
    vertices: Tuple[int, ...]
    crossings: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.crossings)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "length": self.length,
            "vertices": list(self.vertices),
            "edges": list(self.crossings),
        }


@dataclass(frozen=True)
class Bipartition:
    colors: Tuple[Color, ...]
    valid: bool
    certificate: Optional[OddCycleCertificate] = None

    def red(self) -> List[int]:
        return [v for v, c in enumerate(self.colors) if c is Color.RED]

    def blue(self) -> List[int]:
        return [v for v, c in enumerate(self.colors) if c is Color.BLUE]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "valid": self.valid,
            "red": self.red(),
            "blue": self.blue(),
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }


@dataclass(frozen=True)
class ShadingSelection:
    """
    Outcome of trying both shadings. When `found` is False, `rejections`
    holds one odd-cycle certificate per shading.
    """
    found: bool
    which_shading: Optional[ShadingIndex] = None
    graph: Optional[TaitGraph] = None
    bipartition: Optional[Bipartition] = None
    rejections: Tuple[OddCycleCertificate, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "found": self.found,
            "which_shading": _jsonable(self.which_shading),
            "tait_graph": self.graph.to_dict() if self.graph else None,
            "bipartition": self.bipartition.to_dict() if self.bipartition else None,
            "rejections": [r.to_dict() for r in self.rejections],
        }


@dataclass(frozen=True)
class AlternationResult:
    """
    `crossings` is the pair of consecutive crossings passed the same way
    (both over or both under) at strand position `position` of `component`.
    """
    alternating: bool
    component: Optional[int] = None
    position: Optional[int] = None
    crossings: Tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.alternating

    def to_dict(self) -> Dict[str, Any]:
        if self.alternating:
            return {"alternating": True, "certificate": None}
        return {
            "alternating": False,
            "certificate": {
                "component": self.component,
                "position": self.position,
                "crossings": list(self.crossings),
            },
        }


def _jsonable(which: Optional[ShadingIndex]) -> Any:
    return list(which) if isinstance(which, tuple) else which
