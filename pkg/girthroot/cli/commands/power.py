import argparse
import logging

from girthroot.cli import deps
from girthroot.core.errors import EXIT_YES
from girthroot.services.graphs import graph_power

logger = logging.getLogger(__name__)

def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("power", help="r-th power of a connected graph")
    deps.add_input(parser)
    deps.add_r(parser)
    deps.add_format(parser)
    parser.set_defaults(handler=run)

def run(args: argparse.Namespace) -> int:
    """
    Print the r-th power of the input graph.
    """
    r = deps.require_r(args.r)
    G, labeling = deps.load_input(args.input)
    power = graph_power(G, r)
    logger.debug(f"power has {power.num_edges} edges")
    deps.emit(deps.render_graph(power, labeling, args.format))
    return EXIT_YES
