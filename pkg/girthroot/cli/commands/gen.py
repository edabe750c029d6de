import argparse
import logging

from pydantic import ValidationError

from girthroot.cli import deps
from girthroot.core.errors import EXIT_YES, UsageError
from girthroot.schemas.generator import GenConfig
from girthroot.services import gadgets, generators, graphs

logger = logging.getLogger(__name__)

# flag name -> GenConfig field
OVERRIDES = {
    "seed": "seed",
    "r": "r",
    "girth": "girth",
    "n": "n_target",
    "tree_probability": "tree_probability",
    "deep_tails": "deep_tails",
    "elements": "h2c_n",
    "subsets": "h2c_m",
}

def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("gen", help="seeded instance generation")
    parser.add_argument("kind", choices=("leafless", "class", "tree", "h2c", "witness"))
    parser.add_argument("--config", default=None, help="GenConfig as a JSON file")
    parser.add_argument("--seed", type=int, default=None)
    deps.add_r(parser, required=False)
    parser.add_argument("--girth", type=int, default=None)
    parser.add_argument("--n", type=int, default=None, help="target vertex count")
    parser.add_argument("--tree-probability", type=float, default=None)
    parser.add_argument("--deep-tails", type=int, default=None)
    parser.add_argument("--elements", type=int, default=None, help="H2C universe size")
    parser.add_argument("--subsets", type=int, default=None, help="H2C subset count")
    parser.add_argument("--power", action="store_true", help="emit H^r instead of H")
    deps.add_format(parser)
    parser.set_defaults(handler=run)

def build_config(args: argparse.Namespace) -> GenConfig:
    data = {}
    if args.config:
        try:
            data = GenConfig.model_validate_json(deps.read_text(args.config)).model_dump(exclude_unset=True)
        except ValidationError as exc:
            raise UsageError(f"invalid generator config: {exc.errors()[0]['msg']}") from exc
    for flag, field in OVERRIDES.items():
        value = getattr(args, flag, None)
        if value is not None:
            data[field] = value
    try:
        return GenConfig(**data)
    except ValidationError as exc:
        raise UsageError(f"invalid generator settings: {exc.errors()[0]['msg']}") from exc

def run(args: argparse.Namespace) -> int:
    """
    Generate a class graph, tree, H2C instance or the cycle-power witness.
    """
    cfg = build_config(args)
    logger.debug(f"generating {args.kind} with {cfg.model_dump()}")
    if args.kind == "h2c":
        deps.emit(gadgets.format_h2c(generators.random_h2c_instance(cfg)))
        return EXIT_YES
    if args.kind == "witness":
        cycle, power = generators.cycle_power_witness(cfg.r)
        deps.emit(deps.render_graph(power if args.power else cycle, None, args.format))
        return EXIT_YES

    if args.kind == "leafless":
        H = generators.random_leafless_girth_graph(cfg)
    elif args.kind == "class":
        H = generators.class_instance(cfg, with_trees=True)
    else:
        H = generators.random_tree(cfg.n_target, cfg.seed)
    if args.power:
        H = graphs.graph_power(H, cfg.r)
    deps.emit(deps.render_graph(H, None, args.format))
    return EXIT_YES
