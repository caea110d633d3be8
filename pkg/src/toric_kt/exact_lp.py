"""Exact rational LP feasibility (phase-one simplex, Bland's rule).

Only feasibility is ever needed: the fan validator asks whether two cones
share a point outside their common face, and the chamber enumeration asks
whether a system of strict sign conditions has a solution.  Everything runs
over ``Fraction`` so decisions are exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Row = tuple[Sequence, object]


def find_feasible_point(
    num_vars: int,
    equalities: Iterable[Row] = (),
    inequalities: Iterable[Row] = (),
    nonneg: Iterable[int] = (),
) -> tuple[Fraction, ...] | None:
    """Return ``x`` with ``a.x == b`` for each equality and ``a.x >= b`` for
    each inequality, or None when the system is infeasible.

    Variables listed in ``nonneg`` are constrained to be >= 0; all others are
    free.
    """
    nonneg = set(nonneg)
    # column layout: one column per nonneg var, two (x+, x-) per free var
    col_of: list[tuple[int, int | None]] = []
    ncols = 0
    for j in range(num_vars):
        if j in nonneg:
            col_of.append((ncols, None))
            ncols += 1
        else:
            col_of.append((ncols, ncols + 1))
            ncols += 2

    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []

    def structural(a: Sequence) -> list[Fraction]:
        if len(a) != num_vars:
            raise ValueError(f"row of length {len(a)} for {num_vars} variables")
        out = [Fraction(0)] * ncols
        for j, coef in enumerate(a):
            pos, neg = col_of[j]
            out[pos] += coef
            if neg is not None:
                out[neg] -= coef
        return out

    eq_rows = [(structural(a), Fraction(b)) for a, b in equalities]
    ge_rows = [(structural(a), Fraction(b)) for a, b in inequalities]
    nslack = len(ge_rows)
    for k, (a, b) in enumerate(ge_rows):
        slack = [Fraction(0)] * nslack
        slack[k] = Fraction(-1)
        rows.append(a + slack)
        rhs.append(b)
    for a, b in eq_rows:
        rows.append(a + [Fraction(0)] * nslack)
        rhs.append(b)

    m = len(rows)
    nstruct = ncols + nslack
    if m == 0:
        return tuple(Fraction(0) for _ in range(num_vars))
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    # artificial columns
    for i in range(m):
        rows[i] = rows[i] + [Fraction(int(i == k)) for k in range(m)]
    total = nstruct + m
    basis = list(range(nstruct, total))
    cost = [Fraction(0)] * nstruct + [Fraction(1)] * m
    reduced = [cost[j] - sum(rows[i][j] for i in range(m)) for j in range(total)]
    for j in range(nstruct, total):
        reduced[j] = Fraction(0)

    while True:
        entering = next((j for j in range(total) if reduced[j] < 0), None)
        if entering is None:
            break
        best = None
        for i in range(m):
            a = rows[i][entering]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded ray; cannot happen in phase one
            break
        r = best[1]
        piv = rows[r][entering]
        rows[r] = [x / piv for x in rows[r]]
        rhs[r] = rhs[r] / piv
        for i in range(m):
            if i != r and rows[i][entering] != 0:
                f = rows[i][entering]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
                rhs[i] -= f * rhs[r]
        f = reduced[entering]
        reduced = [x - f * y for x, y in zip(reduced, rows[r])]
        basis[r] = entering

    values = [Fraction(0)] * total
    for i, j in enumerate(basis):
        values[j] = rhs[i]
    if any(values[j] != 0 for j in range(nstruct, total)):
        return None
    x = []
    for pos, neg in col_of:
        x.append(values[pos] - (values[neg] if neg is not None else 0))
    return tuple(x)
