"""Limits of one-parameter subgroups and the "enough limits" decision.

For a cone ``tau`` of the fan, a point of the orbit of ``tau`` has a limit
under the subgroup ``v`` iff ``v`` lies in some ``sigma + <tau>`` with
``sigma`` in the star of ``tau`` (``<tau>`` is the linear span of ``tau``).
The fan has enough limits iff the intersection over all ``tau`` of these
unions has nonempty interior.

The interior test is exact.  Every shifted cone is cut out by hyperplanes
(facet normals, plus equations of its span when it is not full-dimensional).
In the arrangement of all of them, each shifted cone is a union of closed
cells, hence so is the region; it has interior iff it contains an open
chamber.  Chambers are enumerated depth-first with exact LP pruning and one
interior point of each is tested.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import zlattice
from .errors import ResourceLimitError
from .exact_lp import find_feasible_point
from .fan import Cone, Fan, faces_closure, star

MAX_RANK = 4
MAX_HYPERPLANES = 40


@dataclass(frozen=True)
class ShiftedCone:
    """``cone(sigma) + span(tau)`` for a face ``tau`` of ``sigma``."""

    sigma: Cone
    tau: Cone

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(sorted(self.sigma)))
        object.__setattr__(self, "tau", tuple(sorted(self.tau)))
        if not set(self.tau) <= set(self.sigma):
            raise ValueError(f"{list(self.tau)} is not a face of {list(self.sigma)}")


def _dual_frame(fan: Fan, sigma: Cone) -> zlattice.Matrix:
    """Rows ``d_i`` dual to a Z-basis whose first vectors are sigma's rays.

    ``d_i . v`` is the coordinate of ``v`` on ray ``sigma[i]`` for
    ``i < len(sigma)`` and on a complement vector afterwards.
    """
    B = zlattice.complete_to_basis(fan.ray_matrix(sigma), fan.rank)
    return zlattice.transpose(zlattice.unimodular_inverse(B))


def _constraints(fan: Fan, sc: ShiftedCone) -> tuple[list[tuple], list[tuple]]:
    """(inequality normals ``>= 0``, equality normals ``== 0``)."""
    D = _dual_frame(fan, sc.sigma)
    k = len(sc.sigma)
    ineq = [D[i] for i, r in enumerate(sc.sigma) if r not in sc.tau]
    eq = list(D[k:])
    return ineq, eq


def in_shifted_cone(fan: Fan, v: Sequence, sc: ShiftedCone) -> bool:
    """Exact membership of the rational vector ``v`` in ``sigma + <tau>``."""
    if len(v) != fan.rank:
        raise ValueError(f"dimension mismatch: vector of length {len(v)} in rank {fan.rank}")
    ineq, eq = _constraints(fan, sc)
    v = [Fraction(x) for x in v]
    return all(zlattice.dot(d, v) == 0 for d in eq) and all(zlattice.dot(d, v) >= 0 for d in ineq)


def admits_limits(fan: Fan, v: Sequence) -> bool:
    """Whether every orbit point has a limit under the subgroup ``v``."""
    if len(v) != fan.rank:
        raise ValueError(f"dimension mismatch: vector of length {len(v)} in rank {fan.rank}")
    for tau in faces_closure(fan):
        if not any(in_shifted_cone(fan, v, ShiftedCone(s, tau)) for s in star(fan, tau)):
            return False
    return True


def _normalize(h: Sequence[int]) -> tuple[int, ...] | None:
    if not any(h):
        return None
    h = zlattice.primitive(h)
    first = next(x for x in h if x)
    return tuple(-x for x in h) if first < 0 else h


def _collect(normals) -> list[tuple[int, ...]]:
    out = []
    for h in normals:
        h = _normalize(h)
        if h is not None and h not in out:
            out.append(h)
    return out


def shifted_cones(fan: Fan) -> list[ShiftedCone]:
    """``sigma + <tau>`` for every face ``tau`` and maximal ``sigma`` containing it.

    Non-maximal members of a star add nothing: ``sigma`` inside ``sigma'``
    gives ``sigma + <tau>`` inside ``sigma' + <tau>``.
    """
    out = []
    for tau in faces_closure(fan):
        for sigma in fan.max_cones:
            if set(tau) <= set(sigma):
                out.append(ShiftedCone(sigma, tau))
    return out


def limit_hyperplanes(fan: Fan) -> list[tuple[int, ...]]:
    normals = []
    for sc in shifted_cones(fan):
        ineq, eq = _constraints(fan, sc)
        normals.extend(ineq)
        normals.extend(eq)
    return _collect(normals)


@dataclass(frozen=True)
class Chamber:
    """Open region ``{x : sign_i * (h_i . x) > 0}`` with an interior point."""

    normals: tuple[tuple[int, ...], ...]
    signs: tuple[int, ...]
    point: tuple[Fraction, ...]

    def contains(self, x: Sequence) -> bool:
        return all(s * zlattice.dot(h, x) > 0 for h, s in zip(self.normals, self.signs))


def chambers(rank: int, normals: Sequence[Sequence[int]]):
    """Yield every open chamber of a central hyperplane arrangement.

    Depth-first over sign vectors.  A branch is kept iff
    ``sign_i * h_i . x >= 1`` is feasible for the hyperplanes fixed so far;
    a feasible point of the parent usually decides one side for free.
    """
    normals = [tuple(h) for h in normals]
    if rank > MAX_RANK or len(normals) > MAX_HYPERPLANES:
        raise ResourceLimitError(
            f"chamber enumeration limited to rank <= {MAX_RANK} and <= {MAX_HYPERPLANES} "
            f"hyperplanes (got rank {rank}, {len(normals)} hyperplanes)"
        )

    def solve(signs):
        rows = [([s * a for a in h], 1) for h, s in zip(normals, signs)]
        return find_feasible_point(rank, inequalities=rows)

    def rec(signs: tuple[int, ...], point):
        i = len(signs)
        if i == len(normals):
            yield Chamber(tuple(normals), signs, tuple(point))
            return
        val = zlattice.dot(normals[i], point)
        for s in (1, -1):
            if s * val > 0:
                scale = max(Fraction(1), 1 / (s * val))
                child = tuple(scale * x for x in point)
            else:
                child = solve(signs + (s,))
            if child is not None:
                yield from rec(signs + (s,), child)

    yield from rec((), tuple(Fraction(0) for _ in range(rank)))


def _in_some_max_cone(fan: Fan, x) -> bool:
    return any(in_shifted_cone(fan, x, ShiftedCone(s, ())) for s in fan.max_cones)


def is_complete(fan: Fan) -> bool:
    """Support equals the whole space, decided by chamber covering.

    Every maximal cone must be full-dimensional, and every open chamber of
    the arrangement of their facet hyperplanes must lie in some maximal cone.
    """
    if any(len(s) != fan.rank for s in fan.max_cones):
        return False
    normals = []
    for s in fan.max_cones:
        normals.extend(_dual_frame(fan, s))
    return all(_in_some_max_cone(fan, c.point) for c in chambers(fan.rank, _collect(normals)))


@dataclass(frozen=True)
class LimitsResult:
    enough_limits: bool
    complete: bool
    witness: tuple[Fraction, ...] | None
    chamber: Chamber | None

    def to_json(self) -> dict:
        return {
            "enough_limits": self.enough_limits,
            "witness": None if self.witness is None else [_fraction_json(x) for x in self.witness],
        }


def _fraction_json(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def decide_limits(fan: Fan, use_complete_shortcut: bool = True) -> LimitsResult:
    """Decide enough limits; returns a witness chamber when one is found.

    Complete fans are answered at once (no witness); every subgroup has
    limits on a complete variety.
    """
    if use_complete_shortcut and is_complete(fan):
        return LimitsResult(True, True, None, None)
    for ch in chambers(fan.rank, limit_hyperplanes(fan)):
        if admits_limits(fan, ch.point):
            return LimitsResult(True, False, ch.point, ch)
    return LimitsResult(False, False, None, None)


def enough_limits(fan: Fan) -> bool:
    return decide_limits(fan).enough_limits
