"""Ordinary K_0 rank over Q by killing the augmentation ideal.

The Stanley-Reisner presentation is made polynomial by doubling each ray
variable ``x_rho`` with a partner ``xb_rho`` and the relation
``x_rho * xb_rho - 1``.  Tensoring over the representation ring with the
integers sets every character to 1, which adds one relation per basis
vector of the character lattice.  The Q-dimension of the quotient is the
number of standard monomials of a Groebner basis.

Polynomials are dicts ``{exponent tuple: Fraction}``.  The monomial order
is degree reverse lexicographic with variable order ``x0 < xb0 < x1 < ...``;
index 0 is the smallest variable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import ResourceLimitError
from .fan import Fan
from .stanley_reisner import minimal_nonfaces

Exponent = tuple[int, ...]
Poly = dict[Exponent, Fraction]

MAX_VARIABLES = 12
MAX_BASIS_SIZE = 2000


def order_key(e: Exponent) -> tuple:
    """Sort key for degrevlex: larger key means larger monomial."""
    return sum(e), tuple(-x for x in e)


def leading(f: Poly) -> Exponent:
    return max(f, key=order_key)


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _shift(f: Poly, e: Exponent, c: Fraction) -> Poly:
    return {tuple(x + y for x, y in zip(m, e)): c * v for m, v in f.items()}


def _sub_into(acc: Poly, g: Poly) -> None:
    for m, v in g.items():
        w = acc.get(m, 0) - v
        if w:
            acc[m] = w
        else:
            acc.pop(m, None)


def monic(f: Poly) -> Poly:
    c = f[leading(f)]
    return {m: v / c for m, v in f.items()}


def reduce(f: Poly, basis: Sequence[Poly]) -> Poly:
    """Full normal form of ``f`` modulo ``basis`` (every term reduced)."""
    f = dict(f)
    lead = [(leading(g), g) for g in basis]
    out: Poly = {}
    while f:
        m = leading(f)
        c = f[m]
        for lm, g in lead:
            if _divides(lm, m):
                q = tuple(x - y for x, y in zip(m, lm))
                _sub_into(f, _shift(g, q, c / g[lm]))
                break
        else:
            out[m] = c
            del f[m]
    return out


def s_polynomial(f: Poly, g: Poly) -> Poly:
    lf, lg = leading(f), leading(g)
    L = _lcm(lf, lg)
    a = _shift(f, tuple(x - y for x, y in zip(L, lf)), 1 / f[lf])
    _sub_into(a, _shift(g, tuple(x - y for x, y in zip(L, lg)), 1 / g[lg]))
    return a


def groebner_basis(gens: Sequence[Poly]) -> list[Poly]:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pairs are processed smallest-lcm first; the coprime-leading-monomial
    criterion skips pairs whose S-polynomial is known to reduce to zero.

    Raises:
      ResourceLimitError: the intermediate basis exceeds ``MAX_BASIS_SIZE``.
    """
    G: list[Poly] = []
    for f in gens:
        f = reduce(f, G) if G else dict(f)
        if f:
            G.append(monic(f))
    pairs = [(i, j) for i, j in combinations(range(len(G)), 2)]
    while pairs:
        pairs.sort(key=lambda p: order_key(_lcm(leading(G[p[0]]), leading(G[p[1]]))))
        i, j = pairs.pop(0)
        li, lj = leading(G[i]), leading(G[j])
        if all(x == 0 or y == 0 for x, y in zip(li, lj)):
            continue
        h = reduce(s_polynomial(G[i], G[j]), G)
        if h:
            G.append(monic(h))
            if len(G) > MAX_BASIS_SIZE:
                raise ResourceLimitError(f"Groebner basis exceeded {MAX_BASIS_SIZE} elements")
            k = len(G) - 1
            pairs.extend((a, k) for a in range(k))
    return _interreduce(G)


def _interreduce(G: list[Poly]) -> list[Poly]:
    # drop elements whose leading monomial is divisible by another's
    lead = [leading(g) for g in G]
    keep = []
    for i, g in enumerate(G):
        if any(j != i and _divides(lead[j], lead[i]) and (lead[j] != lead[i] or j < i) for j in range(len(G))):
            continue
        keep.append(g)
    out = []
    for i, g in enumerate(keep):
        out.append(monic(reduce(g, keep[:i] + keep[i + 1 :]) or g))
    return sorted(out, key=lambda g: order_key(leading(g)))


def standard_monomials(G: Sequence[Poly], nvars: int) -> list[Exponent] | None:
    """Monomials divisible by no leading monomial, or None if infinitely many."""
    lead = [leading(g) for g in G]
    for v in range(nvars):
        if not any(lm[v] > 0 and sum(lm) == lm[v] for lm in lead):
            return None
    zero = (0,) * nvars
    if any(_divides(lm, zero) for lm in lead):
        return []
    seen = {zero}
    queue = deque([zero])
    while queue:
        m = queue.popleft()
        for v in range(nvars):
            n = m[:v] + (m[v] + 1,) + m[v + 1 :]
            if n not in seen and not any(_divides(lm, n) for lm in lead):
                seen.add(n)
                queue.append(n)
    return sorted(seen, key=order_key)


# -- the presentation ------------------------------------------------------------


@dataclass(frozen=True)
class PresentedAlgebra:
    nvars: int
    names: tuple[str, ...]
    generators: tuple[Poly, ...]


def variable_names(fan: Fan) -> tuple[str, ...]:
    out = []
    for r in range(fan.num_rays):
        out += [f"x{r}", f"xb{r}"]
    return tuple(out)


def _mono(nvars: int, slots: dict[int, int]) -> Exponent:
    e = [0] * nvars
    for i, k in slots.items():
        e[i] += k
    return tuple(e)


def sr_relations(fan: Fan) -> list[Poly]:
    """``prod_{rho in S}(x_rho - 1)`` for each minimal nonface ``S``."""
    nv = 2 * fan.num_rays
    out = []
    for S in minimal_nonfaces(fan):
        f: Poly = {_mono(nv, {}): Fraction(1)}
        for rho in S:
            g: Poly = {}
            for m, c in f.items():
                for e, s in ((_mono(nv, {2 * rho: 1}), 1), (_mono(nv, {}), -1)):
                    t = tuple(x + y for x, y in zip(m, e))
                    g[t] = g.get(t, 0) + s * c
            f = {m: c for m, c in g.items() if c}
        out.append(f)
    return out


def inverse_relations(fan: Fan) -> list[Poly]:
    nv = 2 * fan.num_rays
    return [
        {_mono(nv, {2 * r: 1, 2 * r + 1: 1}): Fraction(1), _mono(nv, {}): Fraction(-1)}
        for r in range(fan.num_rays)
    ]


def character_relations(fan: Fan) -> list[Poly]:
    """``prod_rho x_rho^<e_k, v_rho> - 1`` for the standard basis ``e_k``.

    Negative exponents use the inverse partners; trivial relations are dropped.
    """
    nv = 2 * fan.num_rays
    out = []
    for k in range(fan.rank):
        slots = {}
        for r, v in enumerate(fan.rays):
            a = v[k]
            if a > 0:
                slots[2 * r] = a
            elif a < 0:
                slots[2 * r + 1] = -a
        if slots:
            out.append({_mono(nv, slots): Fraction(1), _mono(nv, {}): Fraction(-1)})
    return out


def presentation(fan: Fan) -> PresentedAlgebra:
    gens = sr_relations(fan) + inverse_relations(fan) + character_relations(fan)
    return PresentedAlgebra(2 * fan.num_rays, variable_names(fan), tuple(gens))


def quotient_basis(fan: Fan) -> tuple[list[Poly], list[Exponent]]:
    alg = presentation(fan)
    if alg.nvars > MAX_VARIABLES:
        raise ResourceLimitError(
            f"{alg.nvars} doubled variables exceed the limit of {MAX_VARIABLES}"
        )
    G = groebner_basis(alg.generators)
    std = standard_monomials(G, alg.nvars)
    if std is None:
        raise ValueError("quotient is infinite-dimensional")
    return G, std


def k0_rank_over_Q(fan: Fan) -> int:
    """Q-dimension of the ordinary K_0 presentation."""
    return len(quotient_basis(fan)[1])


@dataclass(frozen=True)
class K0Report:
    rank: int
    enough_limits: bool
    verified_against_max_cones: bool

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "enough_limits": self.enough_limits,
            "verified_against_max_cones": self.verified_against_max_cones,
        }


def k0_report(fan: Fan) -> K0Report:
    """Rank plus whether it matches the maximal cone count.

    The match is only asserted for fans with enough limits; otherwise
    ``verified_against_max_cones`` is false whatever the rank.
    """
    from .limits import enough_limits

    rank = k0_rank_over_Q(fan)
    el = enough_limits(fan)
    return K0Report(rank, el, el and rank == len(fan.max_cones))
