"""
Command-line entry point for the ribbonlength toolkit
"""

import argparse
import asyncio
import json
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional

from pydantic import ValidationError

from src.ribbon.core.census import census_lookup, census_names
from src.ribbon.core.ribbon_agent import (
    EXIT_HYPOTHESIS_FAILED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    PipelineReport,
    RibbonAgent,
)
from src.ribbon.services.ribbon_export import export_realization
from src.ribbon.utils.config import PipelineOptions, get_settings
from src.ribbon.utils.errors import DiagramInputError, HypothesisError, RibbonError

logger = logging.getLogger("ribbon_cli")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ribbon",
        description="Folded ribbonlength bounds for alternating links with bipartite Tait graphs",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="run the full pipeline on PD files or census:<name>")
    analyze.add_argument("inputs", nargs="+")
    analyze.add_argument("--shading", choices=["auto", "0", "1"], default="auto")
    analyze.add_argument("--width", type=float, default=None)
    analyze.add_argument("--svg", type=Path, default=None, help="write the ribbon drawing here")
    analyze.add_argument("--json", type=Path, default=None, help="write the ribbon model here")
    analyze.add_argument("--no-oracle", action="store_true")

    census = commands.add_parser("census", help="built-in diagrams")
    census.add_argument("action", choices=["list"])

    total = commands.add_parser("sum", help="connected sum of two diagrams")
    total.add_argument("first")
    total.add_argument("second")
    total.add_argument("--edge-a", type=int, default=1)
    total.add_argument("--edge-b", type=int, default=1)

    reduce = commands.add_parser("reduce", help="remove nugatory crossings")
    reduce.add_argument("input")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    settings = get_settings()
    logging.basicConfig(
        level=getattr(logging, settings.log_level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    args = build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return handle_analyze(args)
        elif args.command == "census":
            return handle_census_list()
        elif args.command == "sum":
            return handle_sum(args)
        elif args.command == "reduce":
            return handle_reduce(args)
    except ValidationError as e:
        _emit({"status": "input_error", "error": {"type": "ValidationError", "message": str(e)}})
        return EXIT_INPUT_ERROR
    return EXIT_INPUT_ERROR


def handle_analyze(args: argparse.Namespace) -> int:
    options = PipelineOptions.from_settings(
        get_settings(),
        shading=args.shading,
        width=args.width,
        oracle=not args.no_oracle,
    )
    agent = RibbonAgent(options)
    if len(args.inputs) == 1:
        reports = [agent.run_pipeline(args.inputs[0])]
    else:
        reports = asyncio.run(agent.analyze_many(args.inputs))

    exit_code = max(report.exit_code for report in reports)
    if args.svg or args.json:
        if len(reports) != 1:
            logger.error("--svg/--json need exactly one input")
            return EXIT_INPUT_ERROR
        written = _write_exports(reports[0], args.svg, args.json)
        exit_code = max(exit_code, written)

    if len(reports) == 1:
        print(reports[0].to_json())
    else:
        print(json.dumps([r.data for r in reports], indent=2, sort_keys=True))
    return exit_code


def _write_exports(report: PipelineReport, svg: Optional[Path], json_path: Optional[Path]) -> int:
    if report.realization is None:
        return EXIT_OK
    try:
        if svg:
            svg.write_bytes(export_realization(report.realization, "svg"))
        if json_path:
            json_path.write_bytes(export_realization(report.realization, "json"))
    except OSError as e:
        logger.error(f"Could not write export: {e}")
        report.data["export_error"] = str(e)
        return EXIT_INPUT_ERROR
    return EXIT_OK


def handle_census_list() -> int:
    _emit([census_lookup(name).to_dict() for name in census_names()])
    return EXIT_OK


def handle_sum(args: argparse.Namespace) -> int:
    return _run_command(lambda agent: agent.connected_sum(args.first, args.second, args.edge_a, args.edge_b))


def handle_reduce(args: argparse.Namespace) -> int:
    return _run_command(lambda agent: agent.reduce(args.input))


def _run_command(action) -> int:
    agent = RibbonAgent()
    try:
        result = action(agent)
    except DiagramInputError as e:
        _emit({"status": "input_error", "error": e.to_dict()})
        return EXIT_INPUT_ERROR
    except HypothesisError as e:
        _emit({"status": "hypothesis_failed", "error": e.to_dict()})
        return EXIT_HYPOTHESIS_FAILED
    except RibbonError as e:
        _emit({"status": "error", "error": e.to_dict()})
        return EXIT_INPUT_ERROR
    result["status"] = "ok"
    _emit(result)
    return EXIT_OK


def _emit(payload: Any) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


if __name__ == "__main__":
    sys.exit(main())
