import argparse
import logging

from girthroot.cli import deps
from girthroot.core.errors import EXIT_NO, EXIT_YES
from girthroot.schemas.graph import RecognitionPayload
from girthroot.services import serialization
from girthroot.services.recognition import recognize

logger = logging.getLogger(__name__)

def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("recognize", help="decide whether G = H^r with girth(H) >= 2r+3")
    deps.add_input(parser)
    deps.add_r(parser)
    deps.add_format(parser)
    deps.add_jobs(parser)
    parser.set_defaults(handler=run)

def run(args: argparse.Namespace) -> int:
    """
    Run full recognition; exit 1 when the input is no such power.
    """
    r = deps.require_r(args.r)
    G, labeling = deps.load_input(args.input)
    result = recognize(G, r, deps.jobs_of(args))
    if args.format == "json":
        payload = RecognitionPayload(
            r=r,
            kind=result.kind,
            roots=[serialization.to_labeled_payload(H, labeling) for H in result.roots],
            core_multiplicity=result.core_multiplicity,
        )
        deps.emit(payload.model_dump_json())
    elif result.roots:
        deps.emit(deps.render_graphs(list(result.roots), labeling, args.format))
    else:
        deps.emit("none")
    return EXIT_YES if result.is_power else EXIT_NO
