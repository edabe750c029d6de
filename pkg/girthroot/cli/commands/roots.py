import argparse
import logging

from girthroot.cli import deps
from girthroot.core.errors import EXIT_NO, EXIT_YES, UsageError
from girthroot.schemas.graph import RootSetPayload
from girthroot.services import graphs, serialization
from girthroot.services.leafless_roots import all_leafless_roots
from girthroot.services.recognition import recognize

logger = logging.getLogger(__name__)

def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("roots", help="all r-th roots of girth >= 2r+3")
    deps.add_input(parser)
    deps.add_r(parser)
    parser.add_argument("--girth", type=int, default=None, help="girth bound, at least 2r+3")
    parser.add_argument("--leafless", action="store_true", help="only roots without degree-one vertices")
    deps.add_format(parser)
    deps.add_jobs(parser)
    parser.set_defaults(handler=run)

def run(args: argparse.Namespace) -> int:
    """
    Enumerate roots. With --leafless every leafless root is listed,
    otherwise one root per core as found by full recognition.
    """
    r = deps.require_r(args.r, minimum=2)
    bound = graphs.class_girth_bound(r)
    if args.girth is not None and args.girth < bound:
        raise UsageError(f"--girth below {bound} is outside the supported class")
    G, labeling = deps.load_input(args.input)
    jobs = deps.jobs_of(args)
    if args.leafless:
        roots = list(all_leafless_roots(G, r, jobs).roots)
    else:
        roots = list(recognize(G, r, jobs).roots)
    if args.girth is not None:
        roots = [H for H in roots if graphs.girth(H) >= args.girth]
    logger.info(f"{len(roots)} root(s)")

    if args.format == "json":
        payload = RootSetPayload(
            r=r,
            girth_bound=args.girth or bound,
            known_unique=bound >= graphs.uniqueness_girth_bound(r),
            roots=[serialization.to_labeled_payload(H, labeling) for H in roots],
        )
        deps.emit(payload.model_dump_json())
    elif roots:
        deps.emit(deps.render_graphs(roots, labeling, args.format))
    else:
        deps.emit("none")
    return EXIT_YES if roots else EXIT_NO
