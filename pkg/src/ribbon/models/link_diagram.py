"""
Link Diagram Models - Data structures for planar link diagrams
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Tuple

# (crossing index, slot index) and (crossing index, corner index)
Position = Tuple[int, int]
Corner = Tuple[int, int]


class Handedness(Enum):
    """Sign of a Reidemeister-I kink"""
    POSITIVE = 1
    NEGATIVE = -1


@dataclass(frozen=True)
class CrossingRecord:
    """Four edge labels, counterclockwise, slot 0 = incoming under-strand"""
    slots: Tuple[int, int, int, int]

    def label(self, slot: int) -> int:
        return self.slots[slot % 4]

    def to_list(self) -> List[int]:
        return list(self.slots)


@dataclass(frozen=True)
class Face:
    """
    A face of the diagram as the cyclic sequence of corners met while
    tracing its boundary. Corner k lies between slots k and k + 1.
    """
    index: int
    corners: Tuple[Corner, ...]

    @property
    def size(self) -> int:
        return len(self.corners)

    def to_dict(self) -> Dict[str, Any]:
        return {"index": self.index, "corners": [list(c) for c in self.corners]}


@dataclass(frozen=True)
class Component:
    """
    A closed strand. `edges` lists edge labels in traversal order starting
    with the smallest label; `passages` lists (crossing, entry slot).
    """
    index: int
    edges: Tuple[int, ...]
    passages: Tuple[Position, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "edges": list(self.edges),
            "passages": [list(p) for p in self.passages],
        }


@dataclass(frozen=True)
class LinkDiagram:
    """
    Validated planar link diagram. Build through
    `services.diagram_core.make_diagram`, which derives faces and components
    and certifies planarity.
    """
    crossings: Tuple[CrossingRecord, ...]
    faces: Tuple[Face, ...]
    components: Tuple[Component, ...]
    free_loops: int = 0
    _occurrences: Dict[int, Tuple[Position, Position]] = field(
        default_factory=dict, compare=False, repr=False
    )

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * self.n

    @property
    def component_count(self) -> int:
        return len(self.components) + self.free_loops

    @property
    def labels(self) -> List[int]:
        return sorted(self._occurrences)

    def occurrences(self, label: int) -> Tuple[Position, Position]:
        return self._occurrences[label]

    def label_at(self, position: Position) -> int:
        crossing, slot = position
        return self.crossings[crossing].label(slot)

    def partner(self, position: Position) -> Position:
        """The other end of the edge leaving `position`"""
        crossing, slot = position
        first, second = self._occurrences[self.crossings[crossing].label(slot)]
        return second if first == (crossing, slot % 4) else first

    def to_pd(self) -> List[List[int]]:
        return [c.to_list() for c in self.crossings]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "crossings": self.n,
            "pd": self.to_pd(),
            "faces": len(self.faces),
            "components": self.component_count,
            "free_loops": self.free_loops,
        }


@dataclass(frozen=True)
class ReductionTrace:
    """Result of iterated nugatory-crossing removal"""
    diagram: LinkDiagram
    steps: int
    removed_crossings: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "steps": self.steps,
            "removed_crossings": list(self.removed_crossings),
            "crossings": self.diagram.n,
            "free_loops": self.diagram.free_loops,
        }
