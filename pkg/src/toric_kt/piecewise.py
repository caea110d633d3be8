"""Equivariant K-theory of a smooth toric variety as compatible tuples.

An element has one Laurent polynomial per maximal cone.  The polynomial for
a cone ``sigma`` lives in that cone's chart: one variable per ray of
``sigma`` (in ray-index order), the monomials being the characters of the
subtorus spanned by ``sigma`` written in the basis dual to its rays.

Restricting from ``sigma`` to a face ``tau`` keeps the exponents of the rays
of ``tau`` and drops the others.  A tuple belongs to the ring iff its
restrictions agree on every pairwise intersection of maximal cones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Sequence

from . import zlattice
from .fan import Cone, Fan, cone_key, parse_cone_key, walls
from .laurent import LaurentPoly

Mode = Literal["all_pairs", "adjacent_only"]


@dataclass(frozen=True)
class PiecewiseElement:
    components: tuple[LaurentPoly, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    def _check(self, other: "PiecewiseElement") -> None:
        if len(self.components) != len(other.components):
            raise ValueError("elements live over different fans")

    def __add__(self, other):
        if isinstance(other, int):
            return PiecewiseElement(tuple(c + other for c in self.components))
        self._check(other)
        return PiecewiseElement(tuple(a + b for a, b in zip(self.components, other.components)))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return PiecewiseElement(tuple(c - other for c in self.components))
        self._check(other)
        return PiecewiseElement(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self):
        return PiecewiseElement(tuple(-c for c in self.components))

    def __mul__(self, other):
        if isinstance(other, int):
            return PiecewiseElement(tuple(c * other for c in self.components))
        self._check(other)
        return PiecewiseElement(tuple(a * b for a, b in zip(self.components, other.components)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return PiecewiseElement(tuple(c**k for c in self.components))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)


def chart_size(fan: Fan, i: int) -> int:
    return len(fan.max_cones[i])


def constant(fan: Fan, c: int) -> PiecewiseElement:
    return PiecewiseElement(tuple(LaurentPoly.constant(len(s), c) for s in fan.max_cones))


def zero(fan: Fan) -> PiecewiseElement:
    return constant(fan, 0)


def restrict_character(fan: Fan, m: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """Chart exponent of the character ``m`` on the subtorus of ``sigma``."""
    if len(m) != fan.rank:
        raise ValueError(f"dimension mismatch: character of length {len(m)} in rank {fan.rank}")
    return tuple(zlattice.dot(m, fan.rays[i]) for i in sigma)


def face_projection(sigma: Sequence[int], tau: Sequence[int]) -> zlattice.Matrix:
    """0/1 matrix keeping the chart slots of ``tau`` inside ``sigma``'s chart."""
    sigma = tuple(sigma)
    if not set(tau) <= set(sigma):
        raise ValueError(f"{list(tau)} is not a face of {list(sigma)}")
    return tuple(tuple(int(r == t) for r in sigma) for t in sorted(tau))


def restrict_to_face(fan: Fan, sigma: Sequence[int], tau: Sequence[int], p: LaurentPoly) -> LaurentPoly:
    """Restriction from the chart of ``sigma`` to the chart of its face ``tau``."""
    if p.nvars != len(sigma):
        raise ValueError(f"polynomial in {p.nvars} variables on a cone with {len(sigma)} rays")
    return p.pullback(face_projection(sigma, tau))


def _pairs(fan: Fan, mode: Mode):
    if mode == "all_pairs":
        for i, j in combinations(range(len(fan.max_cones)), 2):
            yield i, j, tuple(sorted(set(fan.max_cones[i]) & set(fan.max_cones[j])))
    elif mode == "adjacent_only":
        for a, b, tau in walls(fan):
            yield fan.max_cone_index(a), fan.max_cone_index(b), tau
    else:
        raise ValueError(f"unknown compatibility mode {mode!r}")


def _check_shape(fan: Fan, elt: PiecewiseElement) -> None:
    if len(elt.components) != len(fan.max_cones):
        raise ValueError(
            f"element has {len(elt.components)} components, fan has {len(fan.max_cones)} maximal cones"
        )
    for sigma, p in zip(fan.max_cones, elt.components):
        if p.nvars != len(sigma):
            raise ValueError(f"component on cone {list(sigma)} has {p.nvars} variables")


def first_incompatible_pair(fan: Fan, elt: PiecewiseElement, mode: Mode = "all_pairs") -> tuple[int, int] | None:
    """Indices of the first pair of maximal cones whose restrictions differ."""
    _check_shape(fan, elt)
    for i, j, tau in _pairs(fan, mode):
        a = restrict_to_face(fan, fan.max_cones[i], tau, elt.components[i])
        b = restrict_to_face(fan, fan.max_cones[j], tau, elt.components[j])
        if a != b:
            return i, j
    return None


def is_compatible(fan: Fan, elt: PiecewiseElement, mode: Mode = "all_pairs") -> bool:
    """Restriction compatibility over all pairs of maximal cones, or only walls.

    The two modes are not interchangeable in general; ``adjacent_only`` is
    offered for fans where adjacency suffices and is never used silently.
    """
    return first_incompatible_pair(fan, elt, mode) is None


def u_rho(fan: Fan, rho: int) -> PiecewiseElement:
    """Dual-basis character of ``rho`` on cones containing it, 1 elsewhere."""
    if not 0 <= rho < fan.num_rays:
        raise IndexError(f"ray index {rho} out of range")
    comps = []
    for sigma in fan.max_cones:
        if rho in sigma:
            comps.append(LaurentPoly.variable(len(sigma), sigma.index(rho)))
        else:
            comps.append(LaurentPoly.one(len(sigma)))
    return PiecewiseElement(tuple(comps))


def character_matrix(fan: Fan, sigma: Sequence[int]) -> zlattice.Matrix:
    """Matrix of ``M -> M_sigma``: rows are the ray generators of ``sigma``."""
    return fan.ray_matrix(sigma)


def embed_character(fan: Fan, m: Sequence[int]) -> PiecewiseElement:
    """Image of the character ``m`` under the structure map ``R(T) -> K``."""
    return PiecewiseElement(
        tuple(LaurentPoly.monomial(restrict_character(fan, m, s)) for s in fan.max_cones)
    )


def embed_representation(fan: Fan, f: LaurentPoly) -> PiecewiseElement:
    """Image of an element of ``R(T) = Z[M]`` (``f`` in ``rank`` variables)."""
    if f.nvars != fan.rank:
        raise ValueError(f"dimension mismatch: {f.nvars} variables in rank {fan.rank}")
    return PiecewiseElement(tuple(f.pullback(character_matrix(fan, s)) for s in fan.max_cones))


# -- the lattice V_Delta -----------------------------------------------------


def _slot_offsets(fan: Fan) -> list[int]:
    offsets, acc = [], 0
    for s in fan.max_cones:
        offsets.append(acc)
        acc += len(s)
    return offsets


def v_delta_constraints(fan: Fan) -> zlattice.Matrix:
    """Rows cutting out V_Delta inside the product of chart lattices.

    A tuple of single characters is a vector of chart exponents; for each
    pair of maximal cones and each shared ray the two exponents must agree.
    """
    offsets = _slot_offsets(fan)
    total = offsets[-1] + len(fan.max_cones[-1]) if fan.max_cones else 0
    rows = []
    for i, j, tau in _pairs(fan, "all_pairs"):
        for rho in tau:
            row = [0] * total
            row[offsets[i] + fan.max_cones[i].index(rho)] += 1
            row[offsets[j] + fan.max_cones[j].index(rho)] -= 1
            rows.append(tuple(row))
    return tuple(rows)


def exponent_vector(fan: Fan, elt: PiecewiseElement) -> tuple[int, ...]:
    """Flattened chart exponents of a tuple of unit monomials."""
    out = []
    for p in elt.components:
        if not (len(p.terms) == 1 and next(iter(p.terms.values())) == 1):
            raise ValueError("element is not a tuple of characters")
        out.extend(next(iter(p.terms)))
    return tuple(out)


@dataclass(frozen=True)
class BasisCheck:
    is_basis: bool
    rank: int
    kernel_basis: tuple[tuple[int, ...], ...]
    witness: tuple[tuple[int, ...], ...] | None
    """Row ``rho`` holds the coordinates of ``u_rho`` in ``kernel_basis``."""


def v_delta_basis_check(fan: Fan) -> BasisCheck:
    """Decide whether the ``u_rho`` form a Z-basis of V_Delta.

    V_Delta is computed independently as the integer kernel of the pairwise
    agreement constraints.  The ``u_rho`` are a basis iff each lies in the
    kernel with integer coordinates and the coordinate matrix is square with
    determinant +-1.
    """
    offsets = _slot_offsets(fan)
    total = offsets[-1] + len(fan.max_cones[-1]) if fan.max_cones else 0
    K = zlattice.kernel_basis(v_delta_constraints(fan), cols=total)
    coords = []
    for rho in range(fan.num_rays):
        c = zlattice.express_in_lattice(K, exponent_vector(fan, u_rho(fan, rho)))
        if c is None:
            return BasisCheck(False, len(K), tuple(K), None)
        coords.append(c)
    C = tuple(coords)
    ok = len(C) == len(K) and (len(K) == 0 or abs(zlattice.det(C)) == 1)
    return BasisCheck(ok, len(K), tuple(K), C)


# -- serialisation -----------------------------------------------------------


def to_json(fan: Fan, elt: PiecewiseElement) -> dict:
    return {
        "components": {
            cone_key(s): p.to_json() for s, p in zip(fan.max_cones, elt.components)
        }
    }


def from_json(fan: Fan, data: dict) -> PiecewiseElement:
    if not isinstance(data, dict) or not isinstance(data.get("components"), dict):
        raise ValueError('element document must have a "components" object')
    comps = data["components"]
    by_cone: dict[Cone, LaurentPoly] = {}
    for key, poly in comps.items():
        try:
            cone = parse_cone_key(key)
        except ValueError:
            raise ValueError(f"bad cone key {key!r}") from None
        if cone not in fan.max_cones:
            raise ValueError(f"{key!r} is not a maximal cone of the fan")
        by_cone[cone] = LaurentPoly.from_json(poly, len(cone))
    missing = [cone_key(s) for s in fan.max_cones if s not in by_cone]
    if missing:
        raise ValueError(f"missing components for cones {missing}")
    return PiecewiseElement(tuple(by_cone[s] for s in fan.max_cones))

