"""
Ribbon Models - folded ribbon realizations and ribbonlength bound reports
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

SQRT3 = math.sqrt(3.0)


class Sidedness(Enum):
    ONE_SIDED = "one-sided"
    TWO_SIDED = "two-sided"


class HypothesisStatus(Enum):
    SATISFIED = "satisfied"
    DEGENERATE = "degenerate"
    NON_ALTERNATING = "non_alternating"
    NOT_REDUCED = "not_reduced"
    NOT_BIPARTITE = "not_bipartite"


@dataclass(frozen=True)
class Triangle:
    """
    One equilateral triangle of the stack. `binding_point` doubles as the
    stack layer; `position` is the index along its component's strip.
    """
    binding_point: int
    component: int
    position: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "binding_point": self.binding_point,
            "component": self.component,
            "position": self.position,
        }


@dataclass(frozen=True)
class Fold:
    """Fold across footprint side `page` joining the triangles of points a and b"""
    arc: int
    a: int
    b: int
    page: int
    component: int
    nesting_depth: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "arc": self.arc,
            "a": self.a,
            "b": self.b,
            "page": self.page,
            "component": self.component,
            "nesting_depth": self.nesting_depth,
        }


@dataclass(frozen=True)
class RibbonRealization:
    width: float
    triangles: Tuple[Triangle, ...]
    folds: Tuple[Fold, ...]
    component_sizes: Tuple[int, ...]
    mirrored: bool = False

    @property
    def m(self) -> int:
        return len(self.triangles)

    @property
    def triangle_side(self) -> float:
        return 2.0 * self.width / SQRT3

    @property
    def segment_length(self) -> float:
        return self.width / SQRT3

    @property
    def total_length(self) -> float:
        return self.m * self.segment_length

    @property
    def length_over_width(self) -> float:
        return self.m / SQRT3

    @property
    def sqrt3_multiple(self) -> Fraction:
        """length/width = m/sqrt(3) = (m/3) * sqrt(3)"""
        return Fraction(self.m, 3)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "width": self.width,
            "binding_points": self.m,
            "triangles": [t.to_dict() for t in self.triangles],
            "folds": [f.to_dict() for f in self.folds],
            "component_sizes": list(self.component_sizes),
            "mirrored": self.mirrored,
            "length": {
                "triangles": self.m,
                "sqrt3_multiple": str(self.sqrt3_multiple),
                "length_over_width": round(self.length_over_width, 9),
                "total_length": round(self.total_length, 9),
            },
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RibbonRealization":
        return cls(
            width=float(data["width"]),
            triangles=tuple(Triangle(**t) for t in data["triangles"]),
            folds=tuple(Fold(**f) for f in data["folds"]),
            component_sizes=tuple(int(s) for s in data["component_sizes"]),
            mirrored=bool(data.get("mirrored", False)),
        )


@dataclass(frozen=True)
class BoundReport:
    n: Optional[int]
    status: HypothesisStatus
    mirrored: bool = False
    certificates: Tuple[Dict[str, Any], ...] = field(default_factory=tuple)

    @property
    def sqrt3_multiple(self) -> Optional[int]:
        return self.n

    @property
    def bound_float(self) -> Optional[float]:
        return None if self.n is None else self.n * SQRT3

    @property
    def kusner_bound(self) -> Optional[float]:
        return None if self.n is None else 2.5 * self.n + 1

    @property
    def improves_on_kusner(self) -> Optional[bool]:
        if self.n is None:
            return None
        return self.bound_float < self.kusner_bound

    def to_dict(self) -> Dict[str, Any]:
        certificates: List[Dict[str, Any]] = list(self.certificates)
        return {
            "status": self.status.value,
            "n": self.n,
            "bound_exact": None if self.n is None else f"{self.n}*sqrt(3)",
            "sqrt3_multiple": self.sqrt3_multiple,
            "bound_float": None if self.n is None else round(self.bound_float, 9),
            "kusner_bound": self.kusner_bound,
            "improves_on_kusner": self.improves_on_kusner,
            "mirrored": self.mirrored,
            "certificates": certificates,
        }
