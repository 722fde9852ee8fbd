"""
Invariants - Kauffman bracket state sum used as an independent oracle
"""

import logging
from collections import Counter
from itertools import product
from typing import Dict, Optional

from ..models.laurent import LaurentPolynomial
from ..models.link_diagram import LinkDiagram
from ..utils.config import get_settings
from ..utils.errors import CrossingLimitError
from ..utils.union_find import UnionFind
from .diagram_core import self_writhe

logger = logging.getLogger(__name__)

A = LaurentPolynomial.monomial(1, 1)
DELTA = LaurentPolynomial({2: -1, -2: -1})
NEG_A_CUBED = LaurentPolynomial.monomial(-1, 3)


def kauffman_bracket(diagram: LinkDiagram, limit: Optional[int] = None) -> LaurentPolynomial:
    """
    Sum over all 2^n smoothings of A^(a-b) * delta^(loops-1). The A
    smoothing joins slots (0,1) and (2,3); the B smoothing joins (0,3)
    and (1,2). Free loops contribute one extra delta each.
    """
    limit = limit if limit is not None else get_settings().bracket_crossing_limit
    if diagram.n > limit:
        raise CrossingLimitError(
            f"{diagram.n} crossings exceed the state-sum limit of {limit}; "
            f"raise RIBBON_BRACKET_LIMIT or skip the oracle"
        )
    if diagram.n == 0:
        return DELTA ** max(diagram.free_loops - 1, 0)

    slots = [c.slots for c in diagram.crossings]
    labels = diagram.labels
    states: Counter = Counter()
    for choice in product((True, False), repeat=diagram.n):
        forest = UnionFind(labels)
        a_count = 0
        for use_a, (s0, s1, s2, s3) in zip(choice, slots):
            if use_a:
                a_count += 1
                forest.union(s0, s1)
                forest.union(s2, s3)
            else:
                forest.union(s0, s3)
                forest.union(s1, s2)
        states[(2 * a_count - diagram.n, forest.count + diagram.free_loops)] += 1

    delta_powers: Dict[int, LaurentPolynomial] = {}
    total = LaurentPolynomial()
    for (exponent, loops), multiplicity in sorted(states.items()):
        if loops - 1 not in delta_powers:
            delta_powers[loops - 1] = DELTA ** (loops - 1)
        total = total + LaurentPolynomial.monomial(multiplicity, exponent) * delta_powers[loops - 1]
    logger.debug(f"Bracket over {2 ** diagram.n} states: {total}")
    return total


def normalized_invariant(diagram: LinkDiagram, limit: Optional[int] = None) -> LaurentPolynomial:
    """
    (-A^3)^(-w) <D> with w the self-writhe: crossings between different
    components are left out, so for links this differs from normalizing
    by the full writhe and does not depend on the component orientations.
    """
    return NEG_A_CUBED ** (-self_writhe(diagram)) * kauffman_bracket(diagram, limit)


def equivalent_up_to_mirror(f1: LaurentPolynomial, f2: LaurentPolynomial) -> bool:
    return f1 == f2 or f1 == f2.mirror()
