"""Smooth fans stored combinatorially.

A cone is a sorted tuple of ray indices.  Smooth cones are simplicial, so
the index set determines the cone; geometry only enters through the ray
matrix.  The empty tuple is the zero cone.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Sequence

from . import zlattice
from .errors import InvalidFanError
from .exact_lp import find_feasible_point

Cone = tuple[int, ...]


def cone_key(cone: Sequence[int]) -> str:
    """Serialised form of a cone: ``"0-2-5"``; the zero cone is ``""``."""
    return "-".join(str(i) for i in cone)


def parse_cone_key(key: str) -> Cone:
    return tuple(sorted(int(x) for x in key.split("-"))) if key else ()


@dataclass(frozen=True)
class Fan:
    rank: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[Cone, ...]

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(int(x) for x in r) for r in self.rays))
        object.__setattr__(
            self, "max_cones", tuple(tuple(sorted(int(i) for i in c)) for c in self.max_cones)
        )

    @property
    def num_rays(self) -> int:
        return len(self.rays)

    def ray_matrix(self, cone: Sequence[int]) -> zlattice.Matrix:
        """Rows are the generators of ``cone`` in index order."""
        return tuple(self.rays[i] for i in cone)

    def max_cone_index(self, cone: Sequence[int]) -> int:
        return self.max_cones.index(tuple(sorted(cone)))

    @classmethod
    def from_dict(cls, data: dict) -> "Fan":
        try:
            rank = data["rank"]
            rays = data["rays"]
            cones = data["max_cones"]
        except (KeyError, TypeError) as exc:
            raise InvalidFanError(f"fan document missing field: {exc}") from None
        if not isinstance(rank, int) or rank < 1:
            raise InvalidFanError(f"rank must be a positive integer, got {rank!r}")
        for r in rays:
            if not isinstance(r, list) or not all(isinstance(x, int) for x in r):
                raise InvalidFanError(f"ray {r!r} is not a list of integers")
        for c in cones:
            if not isinstance(c, list) or not all(isinstance(x, int) for x in c):
                raise InvalidFanError(f"cone {c!r} is not a list of ray indices")
        return cls(rank, tuple(map(tuple, rays)), tuple(map(tuple, cones)))

    @classmethod
    def load(cls, path: str | Path) -> "Fan":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "rays": [list(r) for r in self.rays],
            "max_cones": [list(c) for c in self.max_cones],
        }


@dataclass
class Issue:
    check: str
    cones: list[list[int]]
    message: str

    def to_dict(self) -> dict:
        return {"check": self.check, "cones": self.cones, "message": self.message}


@dataclass
class ValidationReport:
    issues: list[Issue] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.issues

    def failed(self, check: str) -> list[Issue]:
        return [i for i in self.issues if i.check == check]

    def to_dict(self) -> dict:
        return {
            "valid": self.ok,
            "checks": dict(sorted(self.checks.items())),
            "issues": [i.to_dict() for i in self.issues],
        }


CHECKS = ("structure", "primitive", "smooth", "maximal", "rays_used", "intersection")


def _structural_issues(fan: Fan) -> list[Issue]:
    out = []
    for i, r in enumerate(fan.rays):
        if len(r) != fan.rank:
            out.append(Issue("structure", [], f"ray {i} has length {len(r)}, expected {fan.rank}"))
    for c in fan.max_cones:
        if len(set(c)) != len(c):
            out.append(Issue("structure", [list(c)], f"cone {list(c)} repeats a ray index"))
        bad = [i for i in c if not 0 <= i < fan.num_rays]
        if bad:
            out.append(Issue("structure", [list(c)], f"cone {list(c)} references unknown rays {bad}"))
    if not fan.max_cones:
        out.append(Issue("structure", [], "fan has no maximal cones"))
    return out


def _shares_point_off_face(fan: Fan, s1: Cone, s2: Cone) -> bool:
    """Exact test for a point of cone(s1) & cone(s2) outside cone(s1 & s2).

    Both cones are simplicial, so a common point lies in the common face iff
    its coordinates on ``s1 - s2`` vanish.  Normalising that coordinate sum to
    1 gives an LP feasibility problem.
    """
    tau = set(s1) & set(s2)
    k1, k2 = len(s1), len(s2)
    # variables: lambda (k1) then mu (k2), all >= 0
    eqs = []
    for coord in range(fan.rank):
        row = [fan.rays[i][coord] for i in s1] + [-fan.rays[j][coord] for j in s2]
        eqs.append((row, 0))
    norm = [int(i not in tau) for i in s1] + [0] * k2
    if not any(norm):
        return False
    eqs.append((norm, 1))
    point = find_feasible_point(k1 + k2, equalities=eqs, nonneg=range(k1 + k2))
    return point is not None


def validate(fan: Fan) -> ValidationReport:
    """Run every fan axiom check and collect failures (never raises)."""
    report = ValidationReport()
    structural = _structural_issues(fan)
    report.issues.extend(structural)
    report.checks["structure"] = not structural
    if structural:
        for name in CHECKS[1:]:
            report.checks[name] = False
        return report

    issues = []
    for i, r in enumerate(fan.rays):
        if not zlattice.is_primitive(r):
            issues.append(Issue("primitive", [], f"ray {i} = {list(r)} is not primitive"))
    report.checks["primitive"] = not issues
    report.issues.extend(issues)

    issues = []
    for c in fan.max_cones:
        rows = fan.ray_matrix(c)
        if len(c) > fan.rank or not zlattice.is_part_of_basis(rows, fan.rank):
            factors = list(zlattice.snf(rows, fan.rank).invariant_factors) if rows else []
            issues.append(
                Issue(
                    "smooth",
                    [list(c)],
                    f"cone {list(c)} is not smooth: generators {[list(r) for r in rows]} "
                    f"have invariant factors {factors}",
                )
            )
    report.checks["smooth"] = not issues
    report.issues.extend(issues)

    issues = []
    for a, b in combinations(fan.max_cones, 2):
        if set(a) <= set(b) or set(b) <= set(a):
            issues.append(
                Issue("maximal", [list(a), list(b)], f"cone {list(a)} and cone {list(b)} are nested or equal")
            )
    report.checks["maximal"] = not issues
    report.issues.extend(issues)

    used = set().union(*map(set, fan.max_cones))
    issues = [
        Issue("rays_used", [], f"ray {i} lies in no maximal cone")
        for i in range(fan.num_rays)
        if i not in used
    ]
    report.checks["rays_used"] = not issues
    report.issues.extend(issues)

    issues = []
    if report.checks["smooth"]:
        for a, b in combinations(fan.max_cones, 2):
            if _shares_point_off_face(fan, a, b):
                issues.append(
                    Issue(
                        "intersection",
                        [list(a), list(b)],
                        f"cones {list(a)} and {list(b)} meet outside their common face "
                        f"{sorted(set(a) & set(b))}",
                    )
                )
        report.checks["intersection"] = not issues
    else:
        report.checks["intersection"] = False
    report.issues.extend(issues)
    return report


def require_valid(fan: Fan) -> Fan:
    report = validate(fan)
    if not report.ok:
        raise InvalidFanError("; ".join(i.message for i in report.issues), report)
    return fan


def faces_closure(fan: Fan) -> list[Cone]:
    """Every face of every maximal cone, the zero cone included.

    Sorted by dimension, then lexicographically, which is a linear extension
    of the inclusion order.
    """
    issues = _structural_issues(fan)
    if issues:
        raise InvalidFanError(issues[0].message)
    faces: set[Cone] = set()
    for c in fan.max_cones:
        for k in range(len(c) + 1):
            faces.update(combinations(c, k))
    return sorted(faces, key=lambda f: (len(f), f))


def is_cone(fan: Fan, cone: Sequence[int]) -> bool:
    s = set(cone)
    return any(s <= set(c) for c in fan.max_cones)


def star(fan: Fan, tau: Sequence[int]) -> list[Cone]:
    """Cones of the fan having ``tau`` as a face."""
    tau = tuple(sorted(tau))
    if not is_cone(fan, tau):
        raise ValueError(f"{list(tau)} is not a cone of the fan")
    t = set(tau)
    return [c for c in faces_closure(fan) if t <= set(c)]


def walls(fan: Fan) -> list[tuple[Cone, Cone, Cone]]:
    """Pairs of adjacent maximal cones with their common codimension-one face."""
    out = []
    for a, b in combinations(fan.max_cones, 2):
        if len(a) != len(b):
            continue
        tau = tuple(sorted(set(a) & set(b)))
        if len(tau) == len(a) - 1:
            out.append((a, b, tau))
    return out


def is_complete_combinatorial(fan: Fan) -> bool:
    """Completeness via the pseudomanifold test.

    A valid fan whose maximal cones are all full-dimensional is complete iff
    every codimension-one face lies in exactly two maximal cones.  Used as an
    independent check on the chamber-covering test in :mod:`limits`.
    """
    n = fan.rank
    if any(len(c) != n for c in fan.max_cones):
        return False
    counts: dict[Cone, int] = {}
    for c in fan.max_cones:
        for f in combinations(c, n - 1):
            counts[f] = counts.get(f, 0) + 1
    return all(v == 2 for v in counts.values())
