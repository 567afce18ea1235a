"""Parameterized descriptions of graph families.

A class spec names a graph family instance (path, cycle, complete, star,
complete bipartite) or composes specs by join and disjoint union; ``Raw``
wraps an explicit graph. Specs drive both graph construction and the
closed-form dispatch, and have a small textual syntax for the command line
("cycle:7", "bipartite:3,4", "union:path:3+path:2", "paw").
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import FormatError, ParameterError
from .graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    diamond_graph,
    disjoint_union,
    empty_graph,
    path_graph,
    paw_graph,
    star_graph,
)
from .graph import join as graph_join


@dataclass(frozen=True)
class Path:
    n: int


@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class Star:
    """Star with n leaves; order n+1, centre at index n."""

    n: int


@dataclass(frozen=True)
class CompleteBipartite:
    m: int
    n: int


@dataclass(frozen=True)
class Join:
    left: "ClassSpec"
    right: "ClassSpec"


@dataclass(frozen=True)
class DisjointUnion:
    parts: tuple["ClassSpec", ...]

    def __init__(self, parts):
        object.__setattr__(self, "parts", tuple(parts))


@dataclass(frozen=True)
class Raw:
    graph: Graph


ClassSpec = Union[Path, Cycle, Complete, Star, CompleteBipartite, Join, DisjointUnion, Raw]


def validate_spec(spec: ClassSpec) -> None:
    """Raise ParameterError when a spec's parameters are out of bounds."""
    if isinstance(spec, Path):
        if spec.n < 1:
            raise ParameterError("path order must be at least 1")
    elif isinstance(spec, Cycle):
        if spec.n < 3:
            raise ParameterError("cycle order must be at least 3")
    elif isinstance(spec, Complete):
        if spec.n < 1:
            raise ParameterError("complete graph order must be at least 1")
    elif isinstance(spec, Star):
        if spec.n < 0:
            raise ParameterError("star leaf count must be nonnegative")
    elif isinstance(spec, CompleteBipartite):
        if spec.m < 1 or spec.n < 1:
            raise ParameterError("complete bipartite parts must be at least 1")
    elif isinstance(spec, Join):
        validate_spec(spec.left)
        validate_spec(spec.right)
    elif isinstance(spec, DisjointUnion):
        if not spec.parts:
            raise ParameterError("disjoint union needs at least one part")
        for part in spec.parts:
            validate_spec(part)
    elif not isinstance(spec, Raw):
        raise ParameterError(f"unknown class spec {spec!r}")


def build_class(spec: ClassSpec) -> Graph:
    """Build the canonical labeled graph for a class spec."""
    validate_spec(spec)
    if isinstance(spec, Path):
        return path_graph(spec.n)
    if isinstance(spec, Cycle):
        return cycle_graph(spec.n)
    if isinstance(spec, Complete):
        return complete_graph(spec.n)
    if isinstance(spec, Star):
        return star_graph(spec.n)
    if isinstance(spec, CompleteBipartite):
        return complete_bipartite_graph(spec.m, spec.n)
    if isinstance(spec, Join):
        return graph_join(build_class(spec.left), build_class(spec.right))
    if isinstance(spec, DisjointUnion):
        return disjoint_union([build_class(part) for part in spec.parts])
    return spec.graph


def spec_label(spec: ClassSpec) -> str:
    """Human-readable name used in reports."""
    if isinstance(spec, Path):
        return f"path:{spec.n}"
    if isinstance(spec, Cycle):
        return f"cycle:{spec.n}"
    if isinstance(spec, Complete):
        return f"complete:{spec.n}"
    if isinstance(spec, Star):
        return f"star:{spec.n}"
    if isinstance(spec, CompleteBipartite):
        return f"bipartite:{spec.m},{spec.n}"
    if isinstance(spec, Join):
        return f"join({spec_label(spec.left)}, {spec_label(spec.right)})"
    if isinstance(spec, DisjointUnion):
        return "union:" + "+".join(spec_label(p) for p in spec.parts)
    g = spec.graph
    return f"graph(n={g.n}, m={g.edge_count})"


_NAMED_GRAPHS = {
    "paw": paw_graph,
    "diamond": diamond_graph,
}


def parse_class_spec(text: str) -> ClassSpec:
    """Parse the textual spec syntax used by the CLI.

    Accepted forms: ``path:N``, ``cycle:N``, ``complete:N``, ``star:N``,
    ``bipartite:M,N`` (alias ``complete_bipartite``), ``empty:N``, the named
    graphs ``paw`` and ``diamond``, and ``union:SPEC+SPEC+...``.
    """
    text = text.strip()
    if text in _NAMED_GRAPHS:
        return Raw(_NAMED_GRAPHS[text]())
    name, sep, args = text.partition(":")
    name = name.strip().lower()
    if name in _NAMED_GRAPHS:
        raise FormatError(f"{name} takes no arguments, got {text!r}")
    if not sep:
        raise FormatError(f"class spec {text!r} needs arguments, e.g. 'cycle:7'")
    if name == "union":
        parts = [parse_class_spec(part) for part in args.split("+") if part.strip()]
        if not parts:
            raise FormatError(f"empty union in class spec {text!r}")
        return DisjointUnion(parts)
    try:
        values = [int(a) for a in args.split(",")] if args else []
    except ValueError:
        raise FormatError(f"non-integer argument in class spec {text!r}") from None
    single = {
        "path": Path,
        "cycle": Cycle,
        "complete": Complete,
        "star": Star,
    }
    if name in single:
        if len(values) != 1:
            raise FormatError(f"{name} takes exactly one argument, got {text!r}")
        return single[name](values[0])
    if name in ("bipartite", "complete_bipartite"):
        if len(values) != 2:
            raise FormatError(f"{name} takes two arguments, got {text!r}")
        return CompleteBipartite(values[0], values[1])
    if name == "empty":
        if len(values) != 1:
            raise FormatError(f"empty takes exactly one argument, got {text!r}")
        if values[0] < 0:
            raise FormatError("empty graph order must be nonnegative")
        return Raw(empty_graph(values[0]))
    raise FormatError(f"unknown graph class {name!r}")
