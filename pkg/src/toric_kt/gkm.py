"""Congruence (moment graph) model of equivariant K-theory.

A graph has one vertex per fixed point and one edge per invariant curve.
An element assigns a representation-ring element (a Laurent polynomial in
``rank`` global character variables) to every vertex; it is a member iff
the two ends of each edge agree after pulling back along the edge's
character projection ``M -> M_edge``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import zlattice
from .errors import InvalidFanError
from .fan import Fan, cone_key, require_valid, walls
from .laurent import LaurentPoly
from .piecewise import PiecewiseElement


@dataclass(frozen=True)
class GkmEdge:
    a: int
    b: int
    proj: zlattice.Matrix

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "proj": [list(r) for r in self.proj]}


@dataclass(frozen=True)
class GkmGraph:
    rank: int
    vertices: tuple[str, ...]
    edges: tuple[GkmEdge, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        for k, e in enumerate(self.edges):
            if not (0 <= e.a < len(self.vertices) and 0 <= e.b < len(self.vertices)):
                raise ValueError(f"edge {k} refers to a missing vertex")
            if e.a == e.b:
                raise ValueError(f"edge {k} is a loop at vertex {e.a}")
            if any(len(row) != self.rank for row in e.proj):
                raise ValueError(f"edge {k}: projection rows must have length {self.rank}")

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "vertices": list(self.vertices),
            "edges": [e.to_dict() for e in self.edges],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GkmGraph":
        if not isinstance(data, dict):
            raise ValueError("graph document must be a JSON object")
        try:
            rank = data["rank"]
            vertices = [str(v) for v in data["vertices"]]
            edges = [
                GkmEdge(int(e["a"]), int(e["b"]), zlattice.as_matrix(e["proj"], rank))
                for e in data["edges"]
            ]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed graph document: {exc}") from None
        if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
            raise ValueError('"rank" must be a nonnegative integer')
        return cls(rank, vertices, edges)

    @classmethod
    def load(cls, path: str | Path) -> "GkmGraph":
        return cls.from_dict(json.loads(Path(path).read_text()))


@dataclass(frozen=True)
class GkmElement:
    values: tuple[LaurentPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __add__(self, other: "GkmElement") -> "GkmElement":
        return GkmElement(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "GkmElement") -> "GkmElement":
        return GkmElement(tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other: "GkmElement") -> "GkmElement":
        return GkmElement(tuple(a * b for a, b in zip(self.values, other.values)))


def from_fan(fan: Fan) -> GkmGraph:
    """Vertices are the maximal cones, edges the walls between them.

    The projection of a wall ``tau`` sends ``m`` to ``(<m, v_rho>)_{rho in tau}``.

    Raises:
      InvalidFanError: the fan is invalid, incomplete, or has a maximal cone
        of lower dimension.
    """
    # local import: limits pulls in the LP machinery
    from .limits import is_complete

    require_valid(fan)
    low = [cone_key(s) for s in fan.max_cones if len(s) != fan.rank]
    if low:
        raise InvalidFanError(f"maximal cones {low} are not full-dimensional")
    if not is_complete(fan):
        raise InvalidFanError("fan is not complete")
    edges = [
        GkmEdge(fan.max_cone_index(a), fan.max_cone_index(b), fan.ray_matrix(tau))
        for a, b, tau in walls(fan)
    ]
    return GkmGraph(fan.rank, [cone_key(s) for s in fan.max_cones], edges)


def _check_arity(graph: GkmGraph, elt: GkmElement) -> None:
    if len(elt.values) != len(graph.vertices):
        raise ValueError(f"element has {len(elt.values)} values, graph has {len(graph.vertices)} vertices")
    for k, p in enumerate(elt.values):
        if p.nvars != graph.rank:
            raise ValueError(f"value at vertex {k} has {p.nvars} variables, expected {graph.rank}")


def first_failing_edge(graph: GkmGraph, elt: GkmElement) -> int | None:
    _check_arity(graph, elt)
    for k, e in enumerate(graph.edges):
        if elt.values[e.a].pullback(e.proj) != elt.values[e.b].pullback(e.proj):
            return k
    return None


def is_gkm_member(graph: GkmGraph, elt: GkmElement) -> bool:
    """Edge congruences: both ends agree in the representation ring of the edge."""
    return first_failing_edge(graph, elt) is None


# -- conversion between chart and global coordinates --------------------------


def chart_to_global(fan: Fan, elt: PiecewiseElement) -> GkmElement:
    """Rewrite chart polynomials of full-dimensional cones in global exponents.

    A chart exponent ``c`` on ``sigma`` is the character ``m`` with
    ``R_sigma m = c`` (rows of ``R_sigma`` are the rays), so ``m = R_sigma^-1 c``.
    """
    vals = []
    for sigma, p in zip(fan.max_cones, elt.components):
        if len(sigma) != fan.rank:
            raise ValueError(f"cone {cone_key(sigma)} is not full-dimensional")
        vals.append(p.pullback(zlattice.unimodular_inverse(fan.ray_matrix(sigma))))
    return GkmElement(tuple(vals))


def global_to_chart(fan: Fan, elt: GkmElement) -> PiecewiseElement:
    return PiecewiseElement(
        tuple(p.pullback(fan.ray_matrix(s)) for s, p in zip(fan.max_cones, elt.values))
    )


# -- tuple files ---------------------------------------------------------------


def element_from_json(graph: GkmGraph, data: dict) -> GkmElement:
    """Read ``{"components": {vertex_label: laurent}}`` (global exponents)."""
    if not isinstance(data, dict) or not isinstance(data.get("components"), dict):
        raise ValueError('tuple document must have a "components" object')
    comps = data["components"]
    unknown = sorted(set(comps) - set(graph.vertices))
    if unknown:
        raise ValueError(f"unknown vertices {unknown}")
    missing = [v for v in graph.vertices if v not in comps]
    if missing:
        raise ValueError(f"missing values for vertices {missing}")
    return GkmElement(tuple(LaurentPoly.from_json(comps[v], graph.rank) for v in graph.vertices))


def element_to_json(graph: GkmGraph, elt: GkmElement) -> dict:
    return {"components": {v: p.to_json() for v, p in zip(graph.vertices, elt.values)}}


def constant_element(graph: GkmGraph, c: int) -> GkmElement:
    return GkmElement(tuple(LaurentPoly.constant(graph.rank, c) for _ in graph.vertices))


def edge_count(graph: GkmGraph) -> int:
    return len(graph.edges)


def vertex_degrees(graph: GkmGraph) -> list[int]:
    deg = [0] * len(graph.vertices)
    for e in graph.edges:
        deg[e.a] += 1
        deg[e.b] += 1
    return deg


def character_element(graph: GkmGraph, m: Sequence[int]) -> GkmElement:
    """The same character at every vertex; always a member."""
    return GkmElement(tuple(LaurentPoly.monomial(m) for _ in graph.vertices))
