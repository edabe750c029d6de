import argparse
import logging
from typing import Optional

from pydantic import ValidationError

from girthroot.cli import deps
from girthroot.core.errors import EXIT_NO, EXIT_YES, UsageError
from girthroot.models.graph import VertexLabeling
from girthroot.models.trees import DepthPartition
from girthroot.schemas.graph import LabeledGraphPayload, PartitionPayload, TreeRootPayload
from girthroot.services import serialization
from girthroot.services.tree_roots import restricted_tree_root, tree_root

logger = logging.getLogger(__name__)

def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("treeroot", help="find a tree T with T^r = G")
    deps.add_input(parser)
    deps.add_r(parser)
    parser.add_argument("--restricted", metavar="PARTITION", default=None,
                        help="JSON file fixing the distance layers around an anchor")
    deps.add_format(parser)
    parser.set_defaults(handler=run)

def load_partition(path: str, labeling: VertexLabeling, r: int) -> DepthPartition:
    try:
        payload = PartitionPayload.model_validate_json(deps.read_text(path))
    except ValidationError as exc:
        raise UsageError(f"malformed partition file: {exc.errors()[0]['msg']}") from exc
    if len(payload.layers) != r:
        raise UsageError(f"partition has {len(payload.layers)} layers, expected {r}")

    def ids(labels: list[str]) -> frozenset[int]:
        unknown = [label for label in labels if label not in labeling]
        if unknown:
            raise UsageError(f"partition names unknown vertices: {unknown}")
        return frozenset(labeling.id_of(label) for label in labels)

    anchor = ids([payload.anchor])
    part = DepthPartition(
        anchor=next(iter(anchor)),
        layers=tuple(ids(layer) for layer in payload.layers),
        overflow=ids(payload.overflow),
    )
    if not part.covers(len(labeling)):
        raise UsageError("partition does not split the vertex set")
    return part

def run(args: argparse.Namespace) -> int:
    """
    Find some r-th tree root, optionally with prescribed depths.
    """
    r = deps.require_r(args.r)
    G, labeling = deps.load_input(args.input)
    if args.restricted:
        part = load_partition(args.restricted, labeling, r)
        result = restricted_tree_root(G, r, part)
    else:
        result = tree_root(G, r)

    if args.format == "json":
        tree: Optional[LabeledGraphPayload] = None
        if result.found:
            tree = serialization.to_labeled_payload(result.tree, labeling)
        deps.emit(TreeRootPayload(found=result.found, tree=tree, verified=result.verified).model_dump_json())
    elif result.found:
        deps.emit(deps.render_graph(result.tree, labeling, args.format))
    else:
        deps.emit("none")
    return EXIT_YES if result.found else EXIT_NO
