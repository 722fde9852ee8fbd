"""
Shared diagrams and generators for the test suite
"""

import random

from src.ribbon.core.census import census_lookup
from src.ribbon.models.link_diagram import Handedness, LinkDiagram
from src.ribbon.services.diagram_core import (
    add_reidemeister1,
    make_diagram,
    mirror_diagram,
    parse_pd,
)
from src.ribbon.services.graph_analysis import (
    bipartite_shadings,
    connected_sum,
    reduce_nugatory,
)

HOPF = "X[1,3,2,4] X[3,1,4,2]"
TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
KINK = "X[1,1,2,2]"
FIGURE8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
PRETZEL = "X[1,2,3,11] X[12,4,2,1] X[5,6,7,3] X[4,8,6,5] X[9,10,11,7] X[8,12,10,9]"

# entries that satisfy the bound hypothesis once reduced
HYPOTHESIS_ENTRIES = ["hopf", "trefoil", "twist1", "twist3", "twist5", "pretzel222", "granny"]
SUMMAND_ENTRIES = ["hopf", "trefoil", "twist3", "pretzel222"]


def flip_crossing(text: str, index: int) -> LinkDiagram:
    """Swap over and under at one crossing"""
    rows = [list(c.slots) for c in parse_pd(text).crossings]
    rows[index] = rows[index][1:] + rows[index][:1]
    return parse_pd(" ".join("X[" + ",".join(map(str, r)) + "]" for r in rows))


def disjoint_union(*diagrams: LinkDiagram) -> LinkDiagram:
    """Split diagram of the given pieces, labels shifted past each other"""
    rows, shift = [], 0
    for diagram in diagrams:
        rows += [[v + shift for v in c.slots] for c in diagram.crossings]
        shift += diagram.edge_count
    return make_diagram(rows)


def shading_zero_bipartite(diagram: LinkDiagram) -> LinkDiagram:
    """Mirror when needed so that shading 0 has the bipartite Tait graph"""
    return diagram if bipartite_shadings(diagram)[0] else mirror_diagram(diagram)


def random_kinks(diagram: LinkDiagram, rng: random.Random, count: int) -> LinkDiagram:
    for _ in range(count):
        edge = rng.choice(diagram.labels)
        handedness = rng.choice([Handedness.POSITIVE, Handedness.NEGATIVE])
        diagram = add_reidemeister1(diagram, edge, handedness)
    return diagram


def random_hypothesis_diagram(rng: random.Random, max_crossings: int = 9) -> LinkDiagram:
    """Census summands, an optional connected sum and up to 3 kinks, then reduced"""
    first = shading_zero_bipartite(census_lookup(rng.choice(SUMMAND_ENTRIES)).diagram())
    if rng.random() < 0.6:
        second = shading_zero_bipartite(census_lookup(rng.choice(SUMMAND_ENTRIES)).diagram())
        if first.n + second.n <= max_crossings:
            first = connected_sum(
                first, rng.choice(first.labels), second, rng.choice(second.labels)
            )
    kinked = random_kinks(first, rng, rng.randint(0, 3))
    return reduce_nugatory(kinked)
