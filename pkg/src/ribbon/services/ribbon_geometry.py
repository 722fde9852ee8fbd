"""
Ribbon Geometry - folded ribbon realizations of rotated presentations,
sidedness and the ribbonlength bound
"""

import logging
from typing import Dict, List, Optional

import numpy as np

from ..models.link_diagram import LinkDiagram
from ..models.presentation import ThreePagePresentation
from ..models.ribbon import (
    SQRT3,
    BoundReport,
    Fold,
    HypothesisStatus,
    RibbonRealization,
    Sidedness,
    Triangle,
)
from ..utils.errors import EmptyRealizationError, NotRotatedError
from .checkerboard import is_alternating, shading_graph
from .graph_analysis import nugatory_edges, select_bipartite_shading
from .three_page import is_rotated, presentation_cycles

logger = logging.getLogger(__name__)


def realize_ribbon(p: ThreePagePresentation, width: float = 1.0) -> RibbonRealization:
    """
    One triangle per binding point (layer = binding index) and one fold
    per arc across the footprint side named by its page.
    """
    if width <= 0:
        raise ValueError(f"width must be positive, got {width}")
    if p.m == 0:
        raise EmptyRealizationError("no binding points: nothing to realize")
    certificate = is_rotated(p)
    if not certificate.rotated:
        raise NotRotatedError(
            "folded realization needs a rotated presentation",
            certificates=[certificate.to_dict()],
        )

    triangles: Dict[int, Triangle] = {}
    component_of_arc: Dict[int, int] = {}
    sizes: List[int] = []
    for component, (points, arcs, _) in enumerate(presentation_cycles(p)):
        sizes.append(len(points))
        for position, point in enumerate(points):
            triangles[point] = Triangle(binding_point=point, component=component, position=position)
        for arc_index in arcs:
            component_of_arc[arc_index] = component

    folds = []
    for index, arc in enumerate(p.arcs):
        depth = sum(
            1
            for other in p.arcs
            if other is not arc and other.page == arc.page and _encloses(other.endpoints, arc.endpoints)
        )
        folds.append(
            Fold(
                arc=index,
                a=arc.a,
                b=arc.b,
                page=arc.page,
                component=component_of_arc[index],
                nesting_depth=depth,
            )
        )

    realization = RibbonRealization(
        width=float(width),
        triangles=tuple(triangles[i] for i in range(p.m)),
        folds=tuple(folds),
        component_sizes=tuple(sizes),
        mirrored=p.mirrored,
    )
    logger.info(
        f"Realized ribbon: {realization.m} triangles, length/width = {realization.length_over_width:.9f}"
    )
    return realization


def _encloses(outer, inner) -> bool:
    return outer[0] < inner[0] and inner[1] < outer[1]


def fold_layers(r: RibbonRealization) -> Dict[int, List[int]]:
    """Fold indices per page, innermost (closest to the stack) first"""
    layers: Dict[int, List[int]] = {1: [], 2: [], 3: []}
    for fold in sorted(r.folds, key=lambda f: (-f.nesting_depth, min(f.a, f.b), f.arc)):
        layers.setdefault(fold.page, []).append(fold.arc)
    return layers


def sidedness(r: RibbonRealization) -> List[Sidedness]:
    return [Sidedness.ONE_SIDED if size % 2 else Sidedness.TWO_SIDED for size in r.component_sizes]


def unfolded_strip(r: RibbonRealization, component: int) -> np.ndarray:
    """
    Triangle vertices of one component laid flat, shape (k, 3, 2).
    Triangle j spans [j*h, j*h + 2h] with h = w/sqrt(3); even j point up.
    """
    k = r.component_sizes[component]
    h = r.segment_length
    w = r.width
    j = np.arange(k, dtype=float)
    left = j * h
    up = (np.arange(k) % 2 == 0)
    base_y = np.where(up, 0.0, w)
    apex_y = np.where(up, w, 0.0)
    strip = np.empty((k, 3, 2))
    strip[:, 0, 0], strip[:, 0, 1] = left, base_y
    strip[:, 1, 0], strip[:, 1, 1] = left + 2 * h, base_y
    strip[:, 2, 0], strip[:, 2, 1] = left + h, apex_y
    return strip


def fold_lines(r: RibbonRealization, component: int) -> np.ndarray:
    """
    Segment j (shape (k, 2, 2)) is the left side of triangle j; segment 0
    is also the seam that closes the strip.
    """
    strip = unfolded_strip(r, component)
    return np.stack([strip[:, 0, :], strip[:, 2, :]], axis=1)


def core_polyline(r: RibbonRealization, component: int) -> np.ndarray:
    """Centerline through the fold-line midpoints, k + 1 points"""
    strip = unfolded_strip(r, component)
    midpoints = fold_lines(r, component).mean(axis=1)
    # right side of the last triangle is glued back onto fold line 0
    closing = strip[-1, 1:].mean(axis=0)
    return np.vstack([midpoints, closing])


def core_length(r: RibbonRealization, component: Optional[int] = None) -> float:
    components = range(len(r.component_sizes)) if component is None else [component]
    total = 0.0
    for index in components:
        line = core_polyline(r, index)
        total += float(np.sum(np.linalg.norm(np.diff(line, axis=0), axis=1)))
    return total


def bound_report(diagram: LinkDiagram, mirrored: bool = False) -> BoundReport:
    """
    sqrt(3) * n for a reduced alternating diagram with a bipartite Tait
    graph; otherwise the report carries the failing certificates.
    """
    if diagram.n == 0:
        return BoundReport(n=0, status=HypothesisStatus.DEGENERATE, mirrored=mirrored)

    alternation = is_alternating(diagram)
    if not alternation:
        return BoundReport(
            n=None,
            status=HypothesisStatus.NON_ALTERNATING,
            mirrored=mirrored,
            certificates=(alternation.to_dict(),),
        )
    nugatory = nugatory_edges(shading_graph(diagram, 0))
    if nugatory:
        return BoundReport(
            n=None,
            status=HypothesisStatus.NOT_REDUCED,
            mirrored=mirrored,
            certificates=({"nugatory_crossings": sorted(nugatory)},),
        )
    selection = select_bipartite_shading(diagram)
    if not selection.found:
        return BoundReport(
            n=None,
            status=HypothesisStatus.NOT_BIPARTITE,
            mirrored=mirrored,
            certificates=tuple(c.to_dict() for c in selection.rejections),
        )
    report = BoundReport(n=diagram.n, status=HypothesisStatus.SATISFIED, mirrored=mirrored)
    logger.info(f"Ribbonlength bound: {diagram.n}*sqrt(3) = {diagram.n * SQRT3:.9f}")
    return report
