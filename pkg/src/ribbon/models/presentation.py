"""
Three-Page Presentation Models - binding points, paged arcs and rotation data
"""

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Any, Dict, Optional, Tuple


class Page(IntEnum):
    """Pages 1 and 2 are chords of the inner disk, page 3 of the outer one"""
    UNDER = 1
    OVER = 2
    OUTSIDE = 3


class PointKind(Enum):
    TANGENCY = "tangency"
    TRANSVERSAL = "transversal"


class ViolationKind(Enum):
    ENDPOINT_RANGE = "endpoint_range"
    DEGENERATE_ARC = "degenerate_arc"
    BAD_PAGE = "bad_page"
    DEGREE = "degree"
    SAME_PAGE_ADJACENT = "same_page_adjacent"
    INTERLEAVING = "interleaving"
    OPEN_CYCLE = "open_cycle"


class Direction(Enum):
    FORWARD = "1->2->3"
    BACKWARD = "3->2->1"


@dataclass(frozen=True)
class Arc:
    """
    Arc between binding points a and b on `page`. Inside arcs record the
    crossing whose strand they carry; outside arcs record the diagram edge.
    """
    a: int
    b: int
    page: int
    crossing: Optional[int] = None
    edge: Optional[int] = None

    @property
    def endpoints(self) -> Tuple[int, int]:
        return (self.a, self.b) if self.a < self.b else (self.b, self.a)

    def other(self, point: int) -> int:
        return self.b if point == self.a else self.a

    def to_dict(self) -> Dict[str, Any]:
        return {"a": self.a, "b": self.b, "page": int(self.page)}


@dataclass(frozen=True)
class BindingPoint:
    """Provenance of a binding point: a tangency on an edge or a transversal end at a crossing"""
    kind: PointKind
    edge: Optional[int] = None
    crossing: Optional[int] = None
    slot: Optional[int] = None


@dataclass(frozen=True)
class ThreePagePresentation:
    m: int
    arcs: Tuple[Arc, ...]
    points: Tuple[BindingPoint, ...] = ()
    mirrored: bool = False

    def page_histogram(self) -> Tuple[int, int, int]:
        counts = [0, 0, 0]
        for arc in self.arcs:
            if 1 <= arc.page <= 3:
                counts[arc.page - 1] += 1
        return counts[0], counts[1], counts[2]

    def count_points(self, kind: PointKind) -> int:
        return sum(1 for p in self.points if p.kind is kind)

    def to_dict(self, rotated: Optional[bool] = None) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "binding_points": self.m,
            "arcs": [a.to_dict() for a in self.arcs],
            "mirrored": self.mirrored,
        }
        if rotated is not None:
            data["rotated"] = rotated
        return data


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    message: str
    points: Tuple[int, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "message": self.message, "points": list(self.points)}


@dataclass(frozen=True)
class ComponentRotation:
    points: Tuple[int, ...]
    pages: Tuple[int, ...]
    rotated: bool
    direction: Optional[Direction] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "points": list(self.points),
            "pages": list(self.pages),
            "rotated": self.rotated,
            "direction": self.direction.value if self.direction else None,
        }


@dataclass(frozen=True)
class RotationCertificate:
    components: Tuple[ComponentRotation, ...]

    @property
    def rotated(self) -> bool:
        return all(c.rotated for c in self.components)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "rotated": self.rotated,
            "components": [c.to_dict() for c in self.components],
        }
