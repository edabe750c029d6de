"""Shared argument handling and I/O for the subcommands."""
import argparse
import sys
from pathlib import Path
from typing import Optional

from girthroot.core.config import settings
from girthroot.core.errors import UsageError
from girthroot.models.graph import Graph, VertexLabeling
from girthroot.services import serialization

FORMATS = ("json", "dot", "edgelist")

def add_input(parser: argparse.ArgumentParser, name: str = "input") -> None:
    parser.add_argument(name, help="input file, or - for stdin")

def add_r(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--r", type=int, required=required, help="power exponent (r >= 1)")

def add_jobs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--jobs", type=int, default=None, help="worker processes")

def add_format(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    for fmt in FORMATS:
        group.add_argument(f"--{fmt}", dest="format", action="store_const", const=fmt)
    parser.set_defaults(format="json")

def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc

def load_input(path: str) -> tuple[Graph, VertexLabeling]:
    return serialization.load_graph(read_text(path))

def require_r(r: int, minimum: int = 1) -> int:
    if r is None or r < minimum:
        raise UsageError(f"--r must be at least {minimum}")
    return r

def jobs_of(args: argparse.Namespace) -> int:
    jobs = getattr(args, "jobs", None) or settings.JOBS
    if jobs < 1:
        raise UsageError("--jobs must be at least 1")
    return jobs

def render_graph(G: Graph, labeling: Optional[VertexLabeling], fmt: str) -> str:
    if fmt == "dot":
        return serialization.to_dot(G, labeling)
    if fmt == "edgelist":
        return serialization.format_edge_list(G, labeling)
    return serialization.to_json(G, labeling) + "\n"

def render_graphs(graphs: list[Graph], labeling: Optional[VertexLabeling], fmt: str) -> str:
    """Non-JSON listing of several graphs, separated by blank lines."""
    return "\n".join(render_graph(G, labeling, fmt) for G in graphs)

def emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
