"""Multiplicative Stanley-Reisner presentation.

The Laurent ring ``Z[x_rho^{+-1}]`` (one variable per ray) maps onto the
piecewise ring by ``x_rho -> u_rho``; its kernel is generated by the products
``prod_{rho in S} (x_rho - 1)`` over minimal nonfaces ``S``.  Equality in the
quotient is decided through that map, which is injective on the quotient.
"""

from __future__ import annotations

from itertools import combinations

from . import piecewise
from .errors import ContractViolation, IncompatibleElementError
from .fan import Fan, cone_key
from .laurent import LaurentPoly, product, x_minus_one
from .piecewise import PiecewiseElement

SrElement = LaurentPoly


def is_face(fan: Fan, subset) -> bool:
    s = set(subset)
    return any(s <= set(c) for c in fan.max_cones)


def minimal_nonfaces(fan: Fan) -> list[tuple[int, ...]]:
    """Inclusion-minimal ray sets contained in no maximal cone.

    Level-by-level: a candidate of size ``k`` is only formed when all its
    ``(k-1)``-subsets are faces, since a smaller nonface inside it would
    make it non-minimal.
    """
    faces_prev = [()]
    out = []
    k = 1
    while faces_prev:
        prev = set(faces_prev)
        faces_now = []
        seen = set()
        for f in faces_prev:
            start = f[-1] + 1 if f else 0
            for r in range(start, fan.num_rays):
                cand = f + (r,)
                if cand in seen:
                    continue
                seen.add(cand)
                if not all(sub in prev for sub in combinations(cand, k - 1)):
                    continue
                if is_face(fan, cand):
                    faces_now.append(cand)
                else:
                    out.append(cand)
        faces_prev = faces_now
        k += 1
    return sorted(out, key=lambda s: (len(s), s))


def relation(fan: Fan, subset) -> SrElement:
    """``prod_{rho in subset} (x_rho - 1)``."""
    return product((x_minus_one(fan.num_rays, r) for r in subset), fan.num_rays)


def relations(fan: Fan) -> list[SrElement]:
    return [relation(fan, s) for s in minimal_nonfaces(fan)]


def _chart_selection(fan: Fan, sigma) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(r == rho) for r in range(fan.num_rays)) for rho in sigma)


def phi(fan: Fan, p: SrElement) -> PiecewiseElement:
    """The ring map ``x_rho -> u_rho``.

    On a maximal cone the variables of rays outside it become 1 and the
    remaining ones are renamed to chart variables.
    """
    if p.nvars != fan.num_rays:
        raise ValueError(f"SR element in {p.nvars} variables, fan has {fan.num_rays} rays")
    return PiecewiseElement(tuple(p.pullback(_chart_selection(fan, s)) for s in fan.max_cones))


def sr_is_zero(fan: Fan, p: SrElement) -> bool:
    return phi(fan, p).is_zero()


def sr_equal(fan: Fan, p: SrElement, q: SrElement) -> bool:
    return sr_is_zero(fan, p - q)


def character_monomial(fan: Fan, m) -> SrElement:
    """``prod_rho x_rho^<m, v_rho>``, the SR image of the character ``m``."""
    return LaurentPoly.monomial([sum(a * b for a, b in zip(m, v)) for v in fan.rays])


def express(fan: Fan, a: PiecewiseElement, check: bool = True) -> SrElement:
    """A Laurent polynomial in the ``x_rho`` whose image is ``a``.

    Walks the maximal cones in stored order.  At each cone the current
    residue's component is lifted verbatim into the variables of that cone's
    rays and subtracted.  Because the residue already vanishes on earlier
    cones, its component there vanishes on each shared face, so the lift
    vanishes on earlier cones too; this is re-checked after every step.

    The result depends on the cone order and is not a normal form; the only
    contract is ``phi(fan, express(fan, a)) == a``.

    Raises:
      IncompatibleElementError: ``a`` fails the all-pairs compatibility check.
      ContractViolation: an earlier component became nonzero again.
    """
    if check:
        bad = piecewise.first_incompatible_pair(fan, a, "all_pairs")
        if bad is not None:
            i, j = bad
            raise IncompatibleElementError(
                f"restrictions of cones {cone_key(fan.max_cones[i])} and "
                f"{cone_key(fan.max_cones[j])} disagree",
                bad,
            )
    result = LaurentPoly.zero(fan.num_rays)
    residue = a
    for i, sigma in enumerate(fan.max_cones):
        lift = residue.components[i].embed(fan.num_rays, sigma)
        result = result + lift
        residue = residue - phi(fan, lift)
        for j in range(i + 1):
            if not residue.components[j].is_zero():
                raise ContractViolation(
                    f"component on cone {cone_key(fan.max_cones[j])} nonzero after step {i}"
                )
    return result
