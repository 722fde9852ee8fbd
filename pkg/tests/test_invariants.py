import pytest

from src.ribbon.core.census import census_lookup
from src.ribbon.models.laurent import LaurentPolynomial
from src.ribbon.services.diagram_core import make_diagram, mirror_diagram, parse_pd
from src.ribbon.services.invariants import (
    A,
    DELTA,
    NEG_A_CUBED,
    equivalent_up_to_mirror,
    kauffman_bracket,
    normalized_invariant,
)
from src.ribbon.utils.errors import CrossingLimitError

from helpers import HYPOTHESIS_ENTRIES


def test_positive_kink(kink):
    assert kauffman_bracket(kink) == LaurentPolynomial.monomial(-1, 3)


def test_negative_kink():
    assert kauffman_bracket(parse_pd("X[1,2,2,1]")) == LaurentPolynomial.monomial(-1, -3)


def test_hopf(hopf):
    assert kauffman_bracket(hopf) == LaurentPolynomial({4: -1, -4: -1})


def test_trefoil(trefoil):
    bracket = kauffman_bracket(trefoil)
    assert bracket.span() == 12
    assert len(bracket.terms) == 3
    assert kauffman_bracket(mirror_diagram(trefoil)) == bracket.mirror()


@pytest.mark.parametrize("name", HYPOTHESIS_ENTRIES + ["figure8"])
def test_span_of_reduced_alternating_census(name):
    diagram = census_lookup(name).diagram()
    assert kauffman_bracket(diagram).span() == 4 * diagram.n


def test_mirror_negates_exponents(figure8, pretzel):
    for diagram in (figure8, pretzel):
        assert kauffman_bracket(mirror_diagram(diagram)) == kauffman_bracket(diagram).mirror()


def test_free_loop_factor(hopf):
    looped = make_diagram(hopf.to_pd(), free_loops=1)
    assert kauffman_bracket(looped) == kauffman_bracket(hopf) * DELTA


def test_split_diagram_factor(hopf):
    split = parse_pd("X[1,3,2,4] X[3,1,4,2] X[5,5,6,6]")
    assert kauffman_bracket(split) == kauffman_bracket(hopf) * DELTA * NEG_A_CUBED


def test_crossingless_unknots():
    assert kauffman_bracket(make_diagram([], free_loops=1)) == 1
    assert kauffman_bracket(make_diagram([], free_loops=2)) == DELTA


def test_normalized_kinks(kink):
    assert normalized_invariant(kink) == 1
    assert normalized_invariant(parse_pd("X[1,2,2,1]")) == 1


def test_normalized_ignores_linking_crossings(hopf):
    assert normalized_invariant(hopf) == kauffman_bracket(hopf)


def test_trefoil_is_chiral(trefoil):
    ours = normalized_invariant(trefoil)
    theirs = normalized_invariant(mirror_diagram(trefoil))
    assert ours != theirs
    assert equivalent_up_to_mirror(ours, theirs)


def test_figure8_differs_from_trefoil(figure8, trefoil):
    assert not equivalent_up_to_mirror(normalized_invariant(figure8), normalized_invariant(trefoil))
    assert normalized_invariant(figure8) == normalized_invariant(figure8).mirror()


def test_crossing_limit(pretzel):
    with pytest.raises(CrossingLimitError):
        kauffman_bracket(pretzel, limit=5)


def test_crossing_limit_from_environment(monkeypatch, trefoil):
    monkeypatch.setenv("RIBBON_BRACKET_LIMIT", "2")
    with pytest.raises(CrossingLimitError):
        kauffman_bracket(trefoil)


def test_laurent_arithmetic():
    p = LaurentPolynomial({1: 2, -1: -1})
    assert p + (-p) == 0
    assert (p - p).is_zero()
    assert (p * p).terms == {2: 4, 0: -4, -2: 1}
    assert p - 1 == LaurentPolynomial({1: 2, 0: -1, -1: -1})
    assert 3 * A == LaurentPolynomial.monomial(3, 1)
    assert A ** -2 == LaurentPolynomial.monomial(1, -2)
    assert DELTA ** 0 == 1
    assert LaurentPolynomial.from_list(p.to_list()) == p
    assert hash(LaurentPolynomial({0: 1})) == hash(LaurentPolynomial.one())


def test_laurent_inverse_needs_unit_monomial():
    with pytest.raises(ValueError):
        DELTA ** -1
    with pytest.raises(ValueError):
        LaurentPolynomial.monomial(2, 1) ** -1


def test_laurent_str():
    assert str(LaurentPolynomial({4: -1, -4: -1})) == "-A^4 - A^-4"
    assert str(LaurentPolynomial({1: 1, 0: 2})) == "A + 2"
    assert str(LaurentPolynomial()) == "0"
