"""Constructive ideal identities in Laurent rings over Z.

Two identities are made executable:

* intersections of the ideals ``I_A = (x_rho - 1 : rho in A)`` are generated
  by ``prod_{rho in S} (x_rho - 1)`` over sets ``S`` meeting every ``A``;
  :func:`decompose_intersection` produces the coefficients;
* for unit-ended polynomials on pairwise independent characters the product
  ideal equals the intersection of the principal ideals;
  :func:`product_factorization` divides successively and treats a failure
  after the first stage as a broken contract.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ContractViolation, NotInIdealError
from .laurent import LaurentPoly, UnitEndedPoly, divide_by_unit_ended, product, x_minus_one


def in_I_sigma(p: LaurentPoly, A: Iterable[int]) -> bool:
    """Membership in ``(x_rho - 1 : rho in A)``: the retraction killing ``A`` vanishes."""
    return p.substitute_ones(A).is_zero()


@dataclass
class IntersectionWitness:
    nvars: int
    coefficients: dict[frozenset[int], LaurentPoly] = field(default_factory=dict)

    def add(self, S: Iterable[int], q: LaurentPoly) -> None:
        S = frozenset(S)
        cur = self.coefficients.get(S)
        new = q if cur is None else cur + q
        if new.is_zero():
            self.coefficients.pop(S, None)
        else:
            self.coefficients[S] = new

    def reconstruct(self) -> LaurentPoly:
        """``sum_S prod_{rho in S}(x_rho - 1) * q_S``."""
        out = LaurentPoly.zero(self.nvars)
        for S, q in self.coefficients.items():
            out = out + product((x_minus_one(self.nvars, r) for r in sorted(S)), self.nvars) * q
        return out

    def sets(self) -> list[tuple[int, ...]]:
        return sorted((tuple(sorted(S)) for S in self.coefficients), key=lambda s: (len(s), s))


def telescope(p: LaurentPoly, A: Sequence[int]) -> dict[int, LaurentPoly]:
    """Write ``p - pi_A(p)`` as ``sum_{rho in A} (x_rho - 1) h_rho``.

    Kills the variables of ``A`` one at a time; each step's difference
    ``f - f|_{x_rho=1}`` is divided by ``x_rho - 1`` term by term using
    ``x^a - 1 = (x - 1)(1 + ... + x^{a-1})`` and
    ``x^-a - 1 = (x - 1)(-x^-a - ... - x^-1)``.
    """
    out: dict[int, LaurentPoly] = {}
    cur = p
    for rho in A:
        h: dict[tuple[int, ...], int] = {}
        for e, c in cur.terms.items():
            a = e[rho]
            if a == 0:
                continue
            base = list(e)
            if a > 0:
                ks, sign = range(0, a), 1
            else:
                ks, sign = range(a, 0), -1
            for k in ks:
                base[rho] = k
                t = tuple(base)
                h[t] = h.get(t, 0) + sign * c
        hp = LaurentPoly(p.nvars, h)
        if not hp.is_zero():
            out[rho] = hp
        cur = cur.substitute_ones([rho])
    return out


def decompose_intersection(p: LaurentPoly, As: Sequence[Iterable[int]]) -> IntersectionWitness:
    """Coefficients ``q_S`` with ``p == sum_S prod_{rho in S}(x_rho - 1) q_S``.

    Every ``S`` meets every ``A_j``.  Induction on the number of sets: the
    tail ``A_2..A_r`` is decomposed first; terms whose ``S`` misses ``A_1``
    have ``q_S`` replaced by ``q_S - pi(q_S)`` (``pi`` kills ``A_1``), which
    lies in ``I_{A_1}`` and is expanded over ``x_rho - 1``, ``rho in A_1``.

    Raises:
      NotInIdealError: ``p`` is not in ``I_{A_j}``; ``index`` is ``j``.
    """
    As = [tuple(sorted(set(A))) for A in As]
    for j, A in enumerate(As):
        if not in_I_sigma(p, A):
            raise NotInIdealError(f"polynomial is not in the ideal of set {j} = {list(A)}", j)
    return _decompose(p, As)


def _decompose(p: LaurentPoly, As: list[tuple[int, ...]]) -> IntersectionWitness:
    w = IntersectionWitness(p.nvars)
    if p.is_zero():
        return w
    if not As:
        w.add((), p)
        return w
    A1 = As[0]
    if len(As) == 1:
        for rho, h in telescope(p, A1).items():
            w.add((rho,), h)
        return w
    tail = _decompose(p, As[1:])
    a1 = set(A1)
    for S, q in tail.coefficients.items():
        if S & a1:
            w.add(S, q)
            continue
        # the pi(q_S) parts sum to pi(p) = 0 against these generators
        for rho, h in telescope(q, A1).items():
            w.add(S | {rho}, h)
    return w


def check_pairwise_independent(axes: Sequence[Sequence[int]]) -> None:
    for (i, a), (j, b) in combinations(enumerate(axes), 2):
        if all(a[k] * b[l] == a[l] * b[k] for k in range(len(a)) for l in range(k + 1, len(a))):
            raise ValueError(f"axes {i} and {j} are linearly dependent")


def product_factorization(p: LaurentPoly, gammas: Sequence[UnitEndedPoly]) -> LaurentPoly:
    """``q`` with ``p == q * prod(gammas)``.

    Raises:
      NotInIdealError: ``p`` is not divisible by some ``gamma_i``.
      ContractViolation: ``p`` lies in every ``(gamma_i)`` yet a later
        quotient is not divisible by the next ``gamma``.
    """
    check_pairwise_independent([g.axis for g in gammas])
    for i, g in enumerate(gammas):
        _, r = divide_by_unit_ended(p, g)
        if not r.is_zero():
            raise NotInIdealError(f"polynomial is not divisible by gamma {i}", i)
    q = p
    for i, g in enumerate(gammas):
        q, r = divide_by_unit_ended(q, g)
        if not r.is_zero():
            raise ContractViolation(
                f"quotient after {i} divisions is not divisible by gamma {i} "
                "although the input lies in every principal ideal"
            )
    return q
