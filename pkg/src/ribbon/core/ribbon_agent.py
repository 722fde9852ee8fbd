"""
Ribbon Agent - end-to-end pipeline from a PD code to a folded ribbon bound
"""

import asyncio
import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from ..models.link_diagram import LinkDiagram
from ..models.presentation import PointKind
from ..models.ribbon import RibbonRealization
from ..models.tait import ShadingSelection
from ..services.checkerboard import (
    compact_shading,
    is_alternating,
    piece_shadings,
    shading_graph,
)
from ..services.diagram_core import (
    components_and_writhe,
    connected_pieces,
    format_pd,
    make_diagram,
    mirror_pieces,
    parse_pd,
)
from ..services.graph_analysis import (
    bipartition,
    connected_sum,
    reduce_nugatory_with_trace,
    select_bipartite_shading,
)
from ..services.invariants import equivalent_up_to_mirror, normalized_invariant
from ..services.ribbon_geometry import bound_report, realize_ribbon, sidedness
from ..services.three_page import (
    build_presentation,
    is_rotated,
    reconstruct_diagram,
    validate_presentation,
)
from ..utils.config import PipelineOptions, get_settings
from ..utils.errors import (
    CrossingLimitError,
    DiagramInputError,
    HypothesisError,
    InternalConsistencyError,
    InvalidBipartitionError,
    InvalidPresentationError,
    NonAlternatingError,
    RibbonError,
)
from .census import census_lookup

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_HYPOTHESIS_FAILED = 2


@dataclass
class PipelineReport:
    """JSON-ready report plus the realization for optional exports"""
    data: Dict[str, Any]
    realization: Optional[RibbonRealization] = None

    @property
    def exit_code(self) -> int:
        return int(self.data.get("exit_code", EXIT_INPUT_ERROR))

    @property
    def status(self) -> str:
        return self.data.get("status", "unknown")

    def to_json(self) -> str:
        return json.dumps(self.data, indent=2, sort_keys=True)


class RibbonAgent:
    """
    Runs the analysis pipeline on PD files or census entries
    """

    def __init__(self, options: Optional[PipelineOptions] = None):
        self.options = options or PipelineOptions.from_settings(get_settings())

    def load_diagram(self, source: str) -> LinkDiagram:
        if source.startswith("census:"):
            return census_lookup(source.split(":", 1)[1]).diagram()
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as e:
            raise DiagramInputError(f"cannot read {source}: {e.strerror or e}") from e
        return parse_pd(text)

    def run_pipeline(self, source: str, options: Optional[PipelineOptions] = None) -> PipelineReport:
        options = options or self.options
        data: Dict[str, Any] = {"schema": SCHEMA_VERSION, "input": source}
        report = PipelineReport(data=data)
        try:
            logger.info(f"Analyzing {source}")
            diagram = self.load_diagram(source)
            self._analyze(diagram, options, report)
        except DiagramInputError as e:
            logger.error(f"Input error for {source}: {e}")
            data.update(status="input_error", exit_code=EXIT_INPUT_ERROR, error=e.to_dict())
        except HypothesisError as e:
            logger.error(f"Hypothesis not satisfied for {source}: {e}")
            data.update(status="hypothesis_failed", exit_code=EXIT_HYPOTHESIS_FAILED, error=e.to_dict())
        except RibbonError as e:
            logger.error(f"Pipeline error for {source}: {e}")
            data.update(status="error", exit_code=EXIT_INPUT_ERROR, error=e.to_dict())
        return report

    def _analyze(self, diagram: LinkDiagram, options: PipelineOptions, report: PipelineReport) -> None:
        data = report.data
        _, writhe = components_and_writhe(diagram)
        data["diagram"] = {
            "pd": format_pd(diagram),
            "crossings": diagram.n,
            "components": diagram.component_count,
            "faces": len(diagram.faces),
            "writhe": writhe,
        }

        alternation = is_alternating(diagram)
        data["alternation"] = alternation.to_dict()
        if not alternation:
            raise NonAlternatingError(
                "diagram is not alternating",
                certificates=[alternation.to_dict()["certificate"]],
            )

        trace = reduce_nugatory_with_trace(diagram)
        reduced = trace.diagram
        data["reduction"] = trace.to_dict()
        data["reduction"]["pd"] = format_pd(reduced)

        if reduced.n == 0:
            data["bound"] = bound_report(reduced).to_dict()
            data.update(
                status="degenerate",
                exit_code=EXIT_OK,
                mirrored=False,
                presentation=None,
                ribbon=None,
                note="reduced diagram has no crossings; bound 0 and no realization emitted",
            )
            logger.info("Reduced to a crossingless diagram; degenerate bound 0")
            return

        if reduced.free_loops:
            data["free_loops"] = {
                "count": reduced.free_loops,
                "note": "crossingless unknot components set aside; their ribbonlength can be made arbitrarily small",
            }
            logger.info(f"Setting aside {reduced.free_loops} crossingless component(s)")
            reduced = make_diagram([list(c.slots) for c in reduced.crossings])

        selection = self._select_shading(reduced, options)
        data["shading"] = selection.to_dict()
        if not selection.found:
            raise InvalidBipartitionError(
                "no checkerboard shading has a bipartite Tait graph",
                certificates=[c.to_dict() for c in selection.rejections],
            )

        # pieces whose selected Tait graph is uniformly negative are mirrored
        pieces = connected_pieces(reduced)
        negative = [
            index
            for index, piece in enumerate(pieces)
            if all(selection.graph.edges[ci].sign < 0 for ci in piece)
        ]
        which, split = selection.which_shading, selection.bipartition
        working = reduced
        if negative:
            working = mirror_pieces(reduced, [ci for index in negative for ci in pieces[index]])
            indices = piece_shadings(reduced, which)
            which = compact_shading(
                [1 - w if index in negative else w for index, w in enumerate(indices)]
            )
            split = bipartition(shading_graph(working, which))
            if not split.valid:
                raise InternalConsistencyError("mirroring changed the Tait graph")
            logger.info(f"Uniform negative Tait sign on {len(negative)} of {len(pieces)} piece(s); mirroring them")
        mirrored = bool(negative)
        data["mirrored"] = mirrored
        data["mirrored_pieces"] = negative

        presentation = build_presentation(working, which, split, mirrored=mirrored)
        violations = validate_presentation(presentation)
        if violations:
            raise InvalidPresentationError(
                f"constructed presentation has {len(violations)} violation(s)", violations
            )
        rotation = is_rotated(presentation)
        data["presentation"] = presentation.to_dict(rotated=rotation.rotated)
        data["presentation"]["page_histogram"] = list(presentation.page_histogram())
        data["presentation"]["tangency_points"] = presentation.count_points(PointKind.TANGENCY)
        data["presentation"]["transversal_points"] = presentation.count_points(PointKind.TRANSVERSAL)
        data["rotation"] = rotation.to_dict()

        # a partial mirror changes the link; compare with the normalized diagram
        partial = 0 < len(negative) < len(pieces)
        data["oracle"] = self._oracle(working if partial else reduced, presentation, options)

        realization = realize_ribbon(presentation, options.width)
        report.realization = realization
        data["ribbon"] = {
            "width": realization.width,
            "triangles": realization.m,
            "folds": len(realization.folds),
            "component_sizes": list(realization.component_sizes),
            "sqrt3_multiple": str(realization.sqrt3_multiple),
            "length_over_width": round(realization.length_over_width, 9),
            "total_length": round(realization.total_length, 9),
        }
        data["sidedness"] = [s.value for s in sidedness(realization)]
        data["bound"] = bound_report(reduced, mirrored=mirrored).to_dict()

        if data["oracle"].get("match") is False:
            logger.error("Oracle mismatch between the diagram and its reconstruction")
            data.update(status="oracle_mismatch", exit_code=EXIT_INPUT_ERROR)
        else:
            data.update(status="ok", exit_code=EXIT_OK)

    def _select_shading(self, diagram: LinkDiagram, options: PipelineOptions) -> ShadingSelection:
        if options.shading == "auto":
            return select_bipartite_shading(diagram)
        which = int(options.shading)
        graph = shading_graph(diagram, which)
        split = bipartition(graph)
        if split.valid:
            return ShadingSelection(found=True, which_shading=which, graph=graph, bipartition=split)
        return ShadingSelection(found=False, rejections=(split.certificate,))

    def _oracle(self, reference: LinkDiagram, presentation, options: PipelineOptions) -> Dict[str, Any]:
        if not options.oracle:
            return {"checked": False, "reason": "disabled"}
        try:
            expected = normalized_invariant(reference, options.bracket_limit)
            rebuilt_diagram = reconstruct_diagram(presentation)
            rebuilt = normalized_invariant(rebuilt_diagram, options.bracket_limit)
        except CrossingLimitError as e:
            logger.warning(f"Oracle skipped: {e}")
            return {"checked": False, "reason": str(e)}
        return {
            "checked": True,
            "match": equivalent_up_to_mirror(expected, rebuilt),
            "reconstructed_crossings": rebuilt_diagram.n,
            "input_invariant": expected.to_list(),
            "reconstructed_invariant": rebuilt.to_list(),
        }

    async def analyze_many(
        self, sources: Sequence[str], options: Optional[PipelineOptions] = None
    ) -> List[PipelineReport]:
        """Independent pipelines, run concurrently"""
        tasks = [asyncio.to_thread(self.run_pipeline, source, options) for source in sources]
        results = await asyncio.gather(*tasks, return_exceptions=True)
        reports = []
        for source, result in zip(sources, results):
            if isinstance(result, Exception):
                logger.error(f"Pipeline crashed for {source}: {result}")
                reports.append(
                    PipelineReport(
                        data={
                            "schema": SCHEMA_VERSION,
                            "input": source,
                            "status": "error",
                            "exit_code": EXIT_INPUT_ERROR,
                            "error": {"type": type(result).__name__, "message": str(result)},
                        }
                    )
                )
            else:
                reports.append(result)
        return reports

    def reduce(self, source: str) -> Dict[str, Any]:
        diagram = self.load_diagram(source)
        trace = reduce_nugatory_with_trace(diagram)
        return {
            "input": source,
            "crossings_before": diagram.n,
            "reduction": trace.to_dict(),
            "pd": format_pd(trace.diagram),
        }

    def connected_sum(self, first: str, second: str, edge_a: int = 1, edge_b: int = 1) -> Dict[str, Any]:
        d1, d2 = self.load_diagram(first), self.load_diagram(second)
        total = connected_sum(d1, edge_a, d2, edge_b)
        return {
            "inputs": [first, second],
            "edges": [edge_a, edge_b],
            "crossings": total.n,
            "components": total.component_count,
            "pd": format_pd(total),
        }


def run_pipeline(source: str, options: Optional[PipelineOptions] = None) -> PipelineReport:
    return RibbonAgent(options).run_pipeline(source)
