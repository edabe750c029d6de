import argparse
import logging

from girthroot.cli import deps
from girthroot.core.errors import EXIT_NO, EXIT_YES
from girthroot.models.graph import VertexLabeling
from girthroot.models.hypergraph import LabeledGadget
from girthroot.schemas.gadget import GadgetPayload, ReductionPayload
from girthroot.services import gadgets, serialization

logger = logging.getLogger(__name__)

def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("gadget", help="build the 2-colourability reduction graphs")
    deps.add_input(parser, "instance")
    deps.add_r(parser)
    parser.add_argument("--with-coloring", dest="coloring", default=None, metavar="WORD",
                        help="colouring as a word over A and B, one letter per element")
    parser.add_argument("--verify", action="store_true",
                        help="decide colourability and check G = H^r")
    deps.add_format(parser)
    parser.set_defaults(handler=run)

def _payload(gadget: LabeledGadget) -> GadgetPayload:
    return GadgetPayload(graph=serialization.to_payload(gadget.graph), roles=gadget.role_map())

def run(args: argparse.Namespace) -> int:
    """
    Emit G (and H when a colouring is known) with the role of every vertex.
    """
    r = deps.require_r(args.r, minimum=2)
    inst = gadgets.parse_h2c(deps.read_text(args.instance))
    G = gadgets.build_G(inst, r)
    coloring = gadgets.parse_coloring(args.coloring, inst.n) if args.coloring else None

    colorable = None
    if args.verify:
        found = gadgets.h2c_bruteforce(inst)
        colorable = found is not None
        if coloring is None:
            coloring = found
        logger.info("instance is 2-colourable" if colorable else "instance is not 2-colourable")

    H = gadgets.build_H(inst, r, coloring) if coloring is not None else None
    verified = None
    if args.verify and coloring is not None:
        verified = gadgets.verify_reduction(inst, r, coloring)

    if args.format == "json":
        payload = ReductionPayload(
            r=r,
            G=_payload(G),
            H=_payload(H) if H is not None else None,
            coloring={gadgets.x_role(i + 1): c for i, c in enumerate(coloring.colors)} if coloring else None,
            verified=verified,
            colorable=colorable,
        )
        deps.emit(payload.model_dump_json())
    else:
        shown = [G.graph] + ([H.graph] if H is not None else [])
        deps.emit(deps.render_graphs(shown, VertexLabeling(G.roles), args.format))

    if colorable is False or verified is False:
        return EXIT_NO
    return EXIT_YES
