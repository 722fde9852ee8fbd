"""
Census - built-in diagrams with their expected pipeline outcomes
"""

from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional

from ..models.link_diagram import LinkDiagram
from ..services.diagram_core import format_pd, parse_pd
from ..services.graph_analysis import connected_sum
from ..utils.errors import UnknownCensusEntryError

TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"


@dataclass(frozen=True)
class CensusExpectation:
    crossings: int
    reduced_crossings: int
    components: int
    alternating: bool
    bipartite_shading: bool
    bound_multiple: Optional[int]


@dataclass(frozen=True)
class CensusEntry:
    name: str
    description: str
    expected: CensusExpectation
    pd: Optional[str] = None

    def diagram(self) -> LinkDiagram:
        if self.pd is not None:
            return parse_pd(self.pd)
        if self.name == "granny":
            trefoil = parse_pd(TREFOIL_PD)
            return connected_sum(trefoil, 1, trefoil, 1)
        raise UnknownCensusEntryError(self.name, census_names())

    def pd_text(self) -> str:
        return self.pd if self.pd is not None else format_pd(self.diagram())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "description": self.description,
            "pd": self.pd_text(),
            "expected": asdict(self.expected),
        }


_CENSUS: Dict[str, CensusEntry] = {
    entry.name: entry
    for entry in (
        CensusEntry(
            name="unknot-kink",
            description="one-kink unknot; reduces to the 0-crossing degenerate case",
            pd="X[1,1,2,2]",
            expected=CensusExpectation(1, 0, 1, True, True, 0),
        ),
        CensusEntry(
            name="hopf",
            description="Hopf link, 2-crossing alternating diagram",
            pd="X[1,3,2,4] X[3,1,4,2]",
            expected=CensusExpectation(2, 2, 2, True, True, 2),
        ),
        CensusEntry(
            name="trefoil",
            description="trefoil knot, 3-crossing alternating diagram",
            pd=TREFOIL_PD,
            expected=CensusExpectation(3, 3, 1, True, True, 3),
        ),
        CensusEntry(
            name="figure8",
            description="figure-eight knot; both Tait graphs contain odd cycles",
            pd="X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]",
            expected=CensusExpectation(4, 4, 1, True, False, None),
        ),
        CensusEntry(
            name="twist1",
            description="twist knot with 1 half twist plus a 2-crossing clasp",
            pd=TREFOIL_PD,
            expected=CensusExpectation(3, 3, 1, True, True, 3),
        ),
        CensusEntry(
            name="twist3",
            description="twist knot with 3 half twists plus a 2-crossing clasp",
            pd="X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]",
            expected=CensusExpectation(5, 5, 1, True, True, 5),
        ),
        CensusEntry(
            name="twist5",
            description="twist knot with 5 half twists plus a 2-crossing clasp",
            pd=(
                "X[1,4,2,5] X[3,10,4,11] X[5,14,6,1] X[7,12,8,13] "
                "X[11,8,12,9] X[13,6,14,7] X[9,2,10,3]"
            ),
            expected=CensusExpectation(7, 7, 1, True, True, 7),
        ),
        CensusEntry(
            name="pretzel222",
            description="(2,2,2) pretzel diagram; a 3-component link",
            pd="X[1,2,3,11] X[12,4,2,1] X[5,6,7,3] X[4,8,6,5] X[9,10,11,7] X[8,12,10,9]",
            expected=CensusExpectation(6, 6, 3, True, True, 6),
        ),
        CensusEntry(
            name="granny",
            description="granny knot, trefoil # trefoil",
            expected=CensusExpectation(6, 6, 1, True, True, 6),
        ),
    )
}


def census_names() -> List[str]:
    return list(_CENSUS)


def census_lookup(name: str) -> CensusEntry:
    try:
        return _CENSUS[name]
    except KeyError:
        raise UnknownCensusEntryError(name, census_names()) from None
