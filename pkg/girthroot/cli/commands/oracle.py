import argparse
import logging

from girthroot.cli import deps
from girthroot.core.errors import EXIT_NO, EXIT_YES
from girthroot.schemas.graph import OraclePayload
from girthroot.services import gadgets, graphs, serialization
from girthroot.services.oracles import bruteforce_all_roots
from girthroot.services.tree_roots import tree_root_bruteforce

logger = logging.getLogger(__name__)

def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("oracle", help="exhaustive search on small inputs")
    parser.add_argument("kind", choices=("roots", "trees", "h2c"))
    deps.add_input(parser)
    deps.add_r(parser, required=False)
    parser.add_argument("--girth", type=int, default=None, help="girth bound for roots (default 2r+3)")
    parser.add_argument("--leafless", action="store_true")
    deps.add_format(parser)
    deps.add_jobs(parser)
    parser.set_defaults(handler=run)

def run(args: argparse.Namespace) -> int:
    """
    List every root, every tree root, or one 2-colouring by brute force.
    """
    if args.kind == "h2c":
        inst = gadgets.parse_h2c(deps.read_text(args.input))
        coloring = gadgets.h2c_bruteforce(inst)
        payload = OraclePayload(
            kind="h2c",
            count=int(coloring is not None),
            coloring={gadgets.x_role(i + 1): c for i, c in enumerate(coloring.colors)} if coloring else None,
        )
        deps.emit(payload.model_dump_json())
        return EXIT_YES if coloring is not None else EXIT_NO

    r = deps.require_r(args.r)
    G, labeling = deps.load_input(args.input)
    if args.kind == "trees":
        found = tree_root_bruteforce(G, r, deps.jobs_of(args))
    else:
        g_min = args.girth if args.girth is not None else graphs.class_girth_bound(r)
        found = bruteforce_all_roots(G, r, g_min, args.leafless, deps.jobs_of(args))
    logger.info(f"oracle found {len(found)} {args.kind}")

    if args.format == "json":
        payload = OraclePayload(
            kind=args.kind,
            count=len(found),
            roots=[serialization.to_labeled_payload(H, labeling) for H in found],
        )
        deps.emit(payload.model_dump_json())
    elif found:
        deps.emit(deps.render_graphs(found, labeling, args.format))
    else:
        deps.emit("none")
    return EXIT_YES if found else EXIT_NO
