"""
Ribbon Export - SVG drawings and JSON documents for ribbon realizations
"""

import json
import logging
import xml.etree.ElementTree as ET

from ..models.ribbon import SQRT3, RibbonRealization
from ..utils.config import get_settings
from ..utils.errors import EmptyRealizationError
from .ribbon_geometry import fold_layers, fold_lines, sidedness, unfolded_strip

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"
PAGE_COLORS = {1: "#1f77b4", 2: "#d62728", 3: "#2ca02c"}
MARGIN = 20.0
SCALE = 40.0
ROW_GAP = 30.0


def export_realization(r: RibbonRealization, fmt: str = "svg") -> bytes:
    if r.m == 0:
        raise EmptyRealizationError("refusing to export an empty realization")
    if fmt == "json":
        return json.dumps(r.to_dict(), indent=2, sort_keys=True).encode("utf-8")
    if fmt == "svg":
        return _to_svg(r)
    raise ValueError(f"unsupported export format {fmt!r}; use 'svg' or 'json'")


def _fmt(value: float) -> str:
    return f"{value:.{get_settings().coordinate_digits}f}"


def _to_svg(r: RibbonRealization) -> bytes:
    h = r.segment_length
    strip_width = max(size + 1 for size in r.component_sizes) * h * SCALE
    row_height = r.width * SCALE + ROW_GAP
    strip_panel_height = len(r.component_sizes) * row_height
    side = r.triangle_side * SCALE
    footprint_height = r.width * SCALE
    total_width = 2 * MARGIN + max(strip_width, side + 260.0)
    total_height = 3 * MARGIN + strip_panel_height + footprint_height + ROW_GAP + 20.0 * (r.m + 3)

    svg = ET.Element(
        "svg",
        xmlns=SVG_NS,
        version="1.1",
        width=_fmt(total_width),
        height=_fmt(total_height),
        viewBox=f"0 0 {_fmt(total_width)} {_fmt(total_height)}",
    )
    panel_strip = ET.SubElement(svg, "g", id="unfolded-strip")
    sides = sidedness(r)
    for component, size in enumerate(r.component_sizes):
        top = MARGIN + component * row_height
        # svg y grows downward
        def px(x, y, top=top):
            return MARGIN + x * SCALE, top + (r.width - y) * SCALE

        strip = unfolded_strip(r, component)
        folds = [f for f in r.folds if f.component == component]
        points = [t for t in r.triangles if t.component == component]
        points.sort(key=lambda t: t.position)
        for j in range(size):
            coords = " ".join(f"{_fmt(a)},{_fmt(b)}" for a, b in (px(*v) for v in strip[j]))
            ET.SubElement(
                panel_strip,
                "polygon",
                {
                    "class": "triangle",
                    "points": coords,
                    "fill": "#f4e4bc",
                    "stroke": "#888888",
                    "stroke-width": "0.5",
                    "data-binding-point": str(points[j].binding_point),
                },
            )
        lines = fold_lines(r, component)
        by_entry = {}
        for fold in folds:
            by_entry[(fold.a, fold.b)] = fold
            by_entry[(fold.b, fold.a)] = fold
        for j in range(size):
            previous = points[j - 1].binding_point
            current = points[j].binding_point
            fold = by_entry[(previous, current)]
            (x1, y1), (x2, y2) = px(*lines[j][0]), px(*lines[j][1])
            ET.SubElement(
                panel_strip,
                "line",
                {
                    "class": "fold",
                    "x1": _fmt(x1),
                    "y1": _fmt(y1),
                    "x2": _fmt(x2),
                    "y2": _fmt(y2),
                    "stroke": PAGE_COLORS.get(fold.page, "#000000"),
                    "stroke-width": "1.5",
                },
            )
            label_x, label_y = px(lines[j][1][0], r.width / 2)
            text = ET.SubElement(
                panel_strip,
                "text",
                {"class": "page-label", "x": _fmt(label_x), "y": _fmt(label_y), "font-size": "9"},
            )
            text.text = f"p{fold.page}"
        caption = ET.SubElement(
            panel_strip,
            "text",
            {"x": _fmt(MARGIN), "y": _fmt(top + r.width * SCALE + 12.0), "font-size": "10"},
        )
        caption.text = f"component {component}: {size} triangles, {sides[component].value}"

    panel_top = ET.SubElement(svg, "g", id="footprint")
    base_y = 2 * MARGIN + strip_panel_height + footprint_height
    corners = [
        (MARGIN, base_y),
        (MARGIN + side, base_y),
        (MARGIN + side / 2, base_y - footprint_height),
    ]
    ET.SubElement(
        panel_top,
        "polygon",
        {
            "class": "footprint",
            "points": " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in corners),
            "fill": "none",
            "stroke": "#333333",
        },
    )
    # side i of the footprint carries page i + 1
    for page, (start, end) in enumerate(((0, 1), (1, 2), (2, 0)), start=1):
        (x1, y1), (x2, y2) = corners[start], corners[end]
        mark = ET.SubElement(
            panel_top,
            "text",
            {
                "class": "side-label",
                "x": _fmt((x1 + x2) / 2),
                "y": _fmt((y1 + y2) / 2),
                "font-size": "10",
                "fill": PAGE_COLORS[page],
            },
        )
        mark.text = f"page {page}"

    layers = fold_layers(r)
    line_y = base_y + ROW_GAP
    for page in (1, 2, 3):
        entry = ET.SubElement(
            panel_top,
            "text",
            {"class": "layer-order", "x": _fmt(MARGIN), "y": _fmt(line_y), "font-size": "10"},
        )
        described = ", ".join(
            f"{r.folds[i].a}-{r.folds[i].b}(depth {r.folds[i].nesting_depth})" for i in layers[page]
        )
        entry.text = f"page {page} folds, innermost first: {described}"
        line_y += 20.0

    summary = ET.SubElement(
        svg, "text", {"x": _fmt(MARGIN), "y": _fmt(line_y), "font-size": "10"}
    )
    summary.text = (
        f"{r.m} triangles, length/width = {r.m}/sqrt(3) = {r.m / SQRT3:.9f}"
    )
    logger.debug(f"Rendered SVG with {r.m} triangles")
    return ET.tostring(svg, encoding="utf-8", xml_declaration=True)
