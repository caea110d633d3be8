"""Named smooth fans and random lattice-equivalent copies of them."""

from __future__ import annotations

import random
from itertools import product

from . import zlattice
from .fan import Fan


def _fan(rank, rays, cones) -> Fan:
    return Fan(rank, [tuple(r) for r in rays], [tuple(c) for c in cones])


def p1() -> Fan:
    return _fan(1, [[1], [-1]], [[0], [1]])


def p2() -> Fan:
    return _fan(2, [[1, 0], [0, 1], [-1, -1]], [[0, 1], [1, 2], [0, 2]])


def p1xp1() -> Fan:
    return _fan(2, [[1, 0], [0, 1], [-1, 0], [0, -1]], [[0, 1], [1, 2], [2, 3], [0, 3]])


def hirzebruch(a: int) -> Fan:
    return _fan(2, [[1, 0], [0, 1], [-1, a], [0, -1]], [[0, 1], [1, 2], [2, 3], [0, 3]])


def f1() -> Fan:
    return hirzebruch(1)


def a2() -> Fan:
    return _fan(2, [[1, 0], [0, 1]], [[0, 1]])


def a1xp1() -> Fan:
    return _fan(2, [[1, 0], [0, 1], [0, -1]], [[0, 1], [0, 2]])


def a2_minus_origin() -> Fan:
    return _fan(2, [[1, 0], [0, 1]], [[0], [1]])


def torus(rank: int = 2) -> Fan:
    return _fan(rank, [], [[]])


def p3() -> Fan:
    rays = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]]
    return _fan(3, rays, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])


def p2xp1() -> Fan:
    rays = [[1, 0, 0], [0, 1, 0], [-1, -1, 0], [0, 0, 1], [0, 0, -1]]
    cones = [sorted(a + (b,)) for a in [(0, 1), (1, 2), (0, 2)] for b in (3, 4)]
    return _fan(3, rays, cones)


def a3() -> Fan:
    return _fan(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[0, 1, 2]])


def p1_cubed() -> Fan:
    rays = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, 0, 0], [0, -1, 0], [0, 0, -1]]
    return _fan(3, rays, [[a, b, c] for a, b, c in product((0, 3), (1, 4), (2, 5))])


SMOOTH_CORPUS = {
    "P1": p1,
    "P2": p2,
    "P1xP1": p1xp1,
    "F1": f1,
    "A2": a2,
    "A1xP1": a1xp1,
}

RANK3_CORPUS = {
    "P3": p3,
    "P2xP1": p2xp1,
    "A3": a3,
    "P1xP1xP1": p1_cubed,
}

NO_LIMITS_CORPUS = {
    "A2minus0": a2_minus_origin,
    "torus": torus,
}

COMPLETE = ("P1", "P2", "P1xP1", "F1")


def corpus() -> dict[str, Fan]:
    """Every named fan, keyed by name."""
    out = {}
    for table in (SMOOTH_CORPUS, RANK3_CORPUS, NO_LIMITS_CORPUS):
        out.update({k: f() for k, f in table.items()})
    return out


def random_unimodular(rank: int, rng: random.Random, steps: int = 6) -> zlattice.Matrix:
    """Product of random elementary matrices, signed permutations included."""
    A = [list(r) for r in zlattice.identity(rank)]
    for _ in range(steps):
        if rank < 2 or rng.random() < 0.2:
            i = rng.randrange(rank)
            A[i] = [-x for x in A[i]]
            continue
        i, j = rng.sample(range(rank), 2)
        if rng.random() < 0.2:
            A[i], A[j] = A[j], A[i]
        else:
            k = rng.choice((-2, -1, 1, 2))
            A[i] = [a + k * b for a, b in zip(A[i], A[j])]
    return zlattice.as_matrix(A)


def transform(fan: Fan, A: zlattice.Matrix, rng: random.Random | None = None) -> Fan:
    """Image of ``fan`` under ``A``; rays and cones reshuffled when ``rng`` is given."""
    rays = [zlattice.matvec(A, v) for v in fan.rays]
    perm = list(range(len(rays)))
    if rng is not None:
        rng.shuffle(perm)
    # new index of old ray perm[i] is i
    where = {old: new for new, old in enumerate(perm)}
    new_rays = [rays[old] for old in perm]
    cones = [tuple(sorted(where[r] for r in c)) for c in fan.max_cones]
    return Fan(fan.rank, new_rays, cones)


def random_smooth_fan(rng: random.Random, max_rank: int = 3, max_rays: int = 7) -> Fan:
    """A random unimodular image of a named smooth fan within the size bounds."""
    pool = [f() for f in list(SMOOTH_CORPUS.values()) + list(RANK3_CORPUS.values())]
    pool = [f for f in pool if f.rank <= max_rank and f.num_rays <= max_rays]
    base = rng.choice(pool)
    return transform(base, random_unimodular(base.rank, rng), rng)
