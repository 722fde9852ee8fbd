"""
Demo Script for the ribbonlength toolkit: runs every census entry
"""

from src.ribbon.core.census import census_lookup, census_names
from src.ribbon.core.ribbon_agent import RibbonAgent
from src.ribbon.utils.config import PipelineOptions


def demo_census():
    """
    Run the pipeline over the census and print one line per entry
    """
    print("Folded ribbonlength census")
    print("=" * 72)
    agent = RibbonAgent(PipelineOptions())

    header = f"{'entry':<12} {'n':>3} {'reduced':>7} {'arcs':>5} {'bound':>10} {'oracle':>7}  status"
    print(header)
    print("-" * len(header))
    for name in census_names():
        entry = census_lookup(name)
        report = agent.run_pipeline(f"census:{name}")
        data = report.data
        bound = data.get("bound") or {}
        presentation = data.get("presentation") or {}
        oracle = data.get("oracle") or {}
        multiple = bound.get("sqrt3_multiple")
        print(
            f"{name:<12} {entry.expected.crossings:>3} "
            f"{(data.get('reduction') or {}).get('crossings', '-'):>7} "
            f"{len(presentation.get('arcs', [])) or '-':>5} "
            f"{(str(multiple) + 'v3') if multiple is not None else '-':>10} "
            f"{str(oracle.get('match', '-')):>7}  {report.status}"
        )

    print("\nHopf link in detail")
    print("-" * 72)
    hopf = agent.run_pipeline("census:hopf").data
    for arc in hopf["presentation"]["arcs"]:
        print(f"   arc {arc['a']} -> {arc['b']} on page {arc['page']}")
    print(f"   rotation: {[c['direction'] for c in hopf['rotation']['components']]}")
    print(f"   sidedness: {hopf['sidedness']}")
    print(f"   length/width = {hopf['ribbon']['length_over_width']} (2*sqrt(3))")


if __name__ == "__main__":
    demo_census()
