import json
import math
import xml.etree.ElementTree as ET
from fractions import Fraction

import numpy as np
import pytest

from src.ribbon.models.presentation import Arc, ThreePagePresentation
from src.ribbon.models.ribbon import HypothesisStatus, RibbonRealization, Sidedness
from src.ribbon.services.diagram_core import add_reidemeister1
from src.ribbon.services.graph_analysis import select_bipartite_shading
from src.ribbon.services.ribbon_export import export_realization
from src.ribbon.services.ribbon_geometry import (
    bound_report,
    core_length,
    core_polyline,
    fold_layers,
    fold_lines,
    realize_ribbon,
    sidedness,
    unfolded_strip,
)
from src.ribbon.services.three_page import build_presentation
from src.ribbon.utils.errors import EmptyRealizationError, NotRotatedError

from helpers import TREFOIL, flip_crossing


def realize(diagram, width=1.0):
    selection = select_bipartite_shading(diagram)
    p = build_presentation(diagram, selection.which_shading, selection.bipartition)
    return realize_ribbon(p, width)


def tags(root, name, cls):
    return [e for e in root.iter() if e.tag.endswith(name) and e.get("class") == cls]


def test_hopf_length(hopf):
    r = realize(hopf)
    assert r.m == 6
    assert r.sqrt3_multiple == Fraction(2)
    assert r.length_over_width == pytest.approx(2 * math.sqrt(3))


def test_trefoil_length(trefoil):
    r = realize(trefoil)
    assert r.m == 9
    assert r.length_over_width == pytest.approx(3 * math.sqrt(3))


def test_width_scales_length_not_ratio(hopf):
    narrow, wide = realize(hopf, 1.0), realize(hopf, 2.0)
    assert wide.total_length == pytest.approx(2 * narrow.total_length)
    assert wide.length_over_width == pytest.approx(narrow.length_over_width)
    assert wide.triangle_side == pytest.approx(4 / math.sqrt(3))


def test_rejects_bad_width(hopf):
    selection = select_bipartite_shading(hopf)
    p = build_presentation(hopf, selection.which_shading, selection.bipartition)
    with pytest.raises(ValueError):
        realize_ribbon(p, 0.0)


def test_hopf_components_are_one_sided(hopf):
    r = realize(hopf)
    assert r.component_sizes == (3, 3)
    assert sidedness(r) == [Sidedness.ONE_SIDED, Sidedness.ONE_SIDED]


def test_even_components_are_two_sided():
    r = RibbonRealization(width=1.0, triangles=(), folds=(), component_sizes=(6, 6))
    assert sidedness(r) == [Sidedness.TWO_SIDED, Sidedness.TWO_SIDED]


def test_trefoil_single_band(trefoil):
    r = realize(trefoil)
    assert r.component_sizes == (9,)
    assert sidedness(r) == [Sidedness.ONE_SIDED]


def test_triangles_follow_binding_points(pretzel):
    r = realize(pretzel)
    assert [t.binding_point for t in r.triangles] == list(range(18))
    assert sum(r.component_sizes) == 18
    assert len(r.folds) == 18
    assert sorted(len(arcs) for arcs in fold_layers(r).values()) == [6, 6, 6]


def test_nesting_depth(hopf):
    r = realize(hopf)
    depths = {(min(f.a, f.b), max(f.a, f.b)): f.nesting_depth for f in r.folds}
    assert depths == {(0, 2): 0, (2, 4): 1, (0, 4): 0, (1, 5): 0, (3, 5): 0, (1, 3): 1}
    outer = next(f for f in r.folds if f.page == 3 and min(f.a, f.b) == 0)
    assert fold_layers(r)[3][-1] == outer.arc


def test_not_rotated_is_refused():
    pages = [1, 2, 1, 3, 2, 3]
    p = ThreePagePresentation(
        m=6, arcs=tuple(Arc(a=i, b=(i + 1) % 6, page=page) for i, page in enumerate(pages))
    )
    with pytest.raises(NotRotatedError):
        realize_ribbon(p)


def test_empty_presentation_is_refused():
    with pytest.raises(EmptyRealizationError):
        realize_ribbon(ThreePagePresentation(m=0, arcs=()))


def test_core_length_matches_total(pretzel):
    r = realize(pretzel, width=1.5)
    assert core_length(r) == pytest.approx(r.total_length)
    assert core_length(r, 0) == pytest.approx(r.component_sizes[0] * r.segment_length)

    line = core_polyline(r, 0)
    np.testing.assert_allclose(line[:, 1], r.width / 2)
    np.testing.assert_allclose(np.linalg.norm(np.diff(line, axis=0), axis=1), r.triangle_side / 2)


def test_strip_geometry(hopf):
    r = realize(hopf)
    strip = unfolded_strip(r, 0)
    assert strip.shape == (3, 3, 2)
    np.testing.assert_allclose(strip[:, 2, 1], [1.0, 0.0, 1.0])
    sides = np.linalg.norm(strip[:, 0] - strip[:, 1], axis=1)
    np.testing.assert_allclose(sides, r.triangle_side)
    legs = np.linalg.norm(strip[:, 0] - strip[:, 2], axis=1)
    np.testing.assert_allclose(legs, r.triangle_side)
    assert fold_lines(r, 0).shape == (3, 2, 2)
    assert core_polyline(r, 0).shape == (4, 2)


def test_svg_export(hopf):
    root = ET.fromstring(export_realization(realize(hopf), "svg"))
    assert root.tag.endswith("svg")
    assert len(tags(root, "polygon", "triangle")) == 6
    assert len(tags(root, "line", "fold")) == 6
    assert len(tags(root, "polygon", "footprint")) == 1
    assert len(tags(root, "text", "side-label")) == 3
    assert len(tags(root, "text", "layer-order")) == 3


def test_svg_is_deterministic(trefoil):
    r = realize(trefoil)
    assert export_realization(r, "svg") == export_realization(r, "svg")


def test_json_export_round_trip(trefoil):
    r = realize(trefoil)
    data = json.loads(export_realization(r, "json"))
    assert data["binding_points"] == 9
    assert data["length"]["sqrt3_multiple"] == "3"
    assert RibbonRealization.from_dict(data) == r


def test_export_refuses_empty_and_unknown_format(hopf):
    with pytest.raises(EmptyRealizationError):
        export_realization(RibbonRealization(width=1.0, triangles=(), folds=(), component_sizes=()))
    with pytest.raises(ValueError):
        export_realization(realize(hopf), "png")


def test_bound_report_satisfied(trefoil, pretzel):
    report = bound_report(trefoil)
    assert report.status is HypothesisStatus.SATISFIED
    assert report.sqrt3_multiple == 3
    assert report.bound_float == pytest.approx(3 * math.sqrt(3))
    assert report.improves_on_kusner
    assert bound_report(pretzel).sqrt3_multiple == 6


def test_bound_report_failures(hopf, figure8):
    kinked = bound_report(add_reidemeister1(hopf, 1))
    assert kinked.status is HypothesisStatus.NOT_REDUCED
    assert kinked.certificates[0]["nugatory_crossings"] == [2]

    odd = bound_report(figure8)
    assert odd.status is HypothesisStatus.NOT_BIPARTITE
    assert len(odd.certificates) == 2

    flipped = bound_report(flip_crossing(TREFOIL, 0))
    assert flipped.status is HypothesisStatus.NON_ALTERNATING
    assert flipped.to_dict()["bound_exact"] is None


def test_bound_report_json(hopf):
    data = bound_report(hopf).to_dict()
    assert data["bound_exact"] == "2*sqrt(3)"
    assert data["kusner_bound"] == 6.0
