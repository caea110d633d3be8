"""Multivariate Laurent polynomials with integer coefficients.

A :class:`LaurentPoly` is a finitely supported map from exponent tuples to
nonzero ints.  It models both the group ring Z[M] of a character lattice and
the Laurent ring Z[x_rho^{+-1}] of the Stanley-Reisner presentation.

Coefficients are Python ints only.  Swapping in another commutative
coefficient ring would mean replacing the int arithmetic in ``_add_into``
and the scalar paths of ``__mul__``; nothing else depends on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Mapping, Sequence

from . import zlattice

Exponent = tuple[int, ...]


def _add_into(acc: dict, exp: Exponent, coeff: int) -> None:
    c = acc.get(exp, 0) + coeff
    if c:
        acc[exp] = c
    else:
        acc.pop(exp, None)


class LaurentPoly:
    """Immutable Laurent polynomial in ``nvars`` variables over Z."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], int] | None = None):
        self.nvars = nvars
        clean: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(x) for x in exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            if c:
                _add_into(clean, exp, int(c))
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "LaurentPoly":
        return cls._raw(nvars, {(0,) * nvars: int(c)} if c else {})

    @classmethod
    def one(cls, nvars: int) -> "LaurentPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        exp = tuple(int(x) for x in exp)
        return cls._raw(len(exp), {exp: int(coeff)} if coeff else {})

    @classmethod
    def variable(cls, nvars: int, i: int, power: int = 1) -> "LaurentPoly":
        exp = [0] * nvars
        exp[i] = power
        return cls.monomial(exp)

    # -- basic protocol ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(self.nvars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable-count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.nvars, other)
        return NotImplemented

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            _add_into(out, e, c)
        return LaurentPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            _add_into(out, e, -c)
        return LaurentPoly._raw(self.nvars, out)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.nvars)
            return LaurentPoly._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                _add_into(out, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return LaurentPoly._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only unit monomials have negative powers")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials have negative powers")
            return LaurentPoly.monomial([k * x for x in e], c ** (-k))
        out = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure ---------------------------------------------------------

    def coefficient(self, exp: Sequence[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def augmentation(self) -> int:
        """Sum of coefficients (every character sent to 1)."""
        return sum(self.terms.values())

    def support(self) -> list[Exponent]:
        return sorted(self.terms)

    def variables_used(self) -> set[int]:
        return {i for e in self.terms for i, x in enumerate(e) if x}

    def degree_range(self, i: int) -> tuple[int, int] | None:
        if not self.terms:
            return None
        ds = [e[i] for e in self.terms]
        return min(ds), max(ds)

    def is_unit_monomial(self) -> bool:
        return len(self.terms) == 1 and next(iter(self.terms.values())) in (1, -1)

    # -- homomorphisms -----------------------------------------------------

    def substitute_ones(self, variables: Iterable[int]) -> "LaurentPoly":
        """Image under the ring map sending each listed variable to 1."""
        kill = set(variables)
        bad = [i for i in kill if not 0 <= i < self.nvars]
        if bad:
            raise ValueError(f"variable indices {bad} out of range for {self.nvars} variables")
        out: dict[Exponent, int] = {}
        for e, c in self.terms.items():
            _add_into(out, tuple(0 if i in kill else x for i, x in enumerate(e)), c)
        return LaurentPoly._raw(self.nvars, out)

    def pullback(self, L: Sequence[Sequence[int]]) -> "LaurentPoly":
        """Monomial map ``x^e -> x^(L e)``, extended linearly.

        ``L`` has one row per target variable and ``nvars`` columns.
        """
        L = tuple(tuple(r) for r in L)
        for row in L:
            if len(row) != self.nvars:
                raise ValueError(
                    f"shape mismatch: row of length {len(row)} for {self.nvars} source variables"
                )
        out: dict[Exponent, int] = {}
        for e, c in self.terms.items():
            _add_into(out, tuple(sum(a * x for a, x in zip(row, e)) for row in L), c)
        return LaurentPoly._raw(len(L), out)

    def embed(self, nvars: int, slots: Sequence[int]) -> "LaurentPoly":
        """Rename variable ``i`` to slot ``slots[i]`` of an ``nvars``-variable ring."""
        if len(slots) != self.nvars:
            raise ValueError("one slot per variable required")
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nvars
            for s, x in zip(slots, e):
                ne[s] = x
            out[tuple(ne)] = c
        return LaurentPoly._raw(nvars, out)

    # -- serialisation -----------------------------------------------------

    def to_json(self) -> list[dict]:
        """Canonical list of ``{"exp": [...], "coeff": n}`` sorted by exponent."""
        return [{"coeff": self.terms[e], "exp": list(e)} for e in sorted(self.terms)]

    @classmethod
    def from_json(cls, data: Sequence[Mapping], nvars: int | None = None) -> "LaurentPoly":
        if not isinstance(data, list):
            raise ValueError("Laurent polynomial must be a list of terms")
        terms: dict[Exponent, int] = {}
        for t in data:
            if not isinstance(t, dict) or "exp" not in t or "coeff" not in t:
                raise ValueError(f"malformed term {t!r}")
            exp, c = t["exp"], t["coeff"]
            if not isinstance(c, int) or not all(isinstance(x, int) for x in exp):
                raise ValueError(f"non-integer data in term {t!r}")
            if nvars is None:
                nvars = len(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            _add_into(terms, tuple(exp), c)
        if nvars is None:
            raise ValueError("cannot infer variable count of an empty polynomial")
        return cls._raw(nvars, terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = [f"x{i}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = "*".join(
                n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def substitute_ones(p: LaurentPoly, variables: Iterable[int]) -> LaurentPoly:
    return p.substitute_ones(variables)


def monomial_pullback(p: LaurentPoly, L: Sequence[Sequence[int]]) -> LaurentPoly:
    return p.pullback(L)


def product(polys: Iterable[LaurentPoly], nvars: int) -> LaurentPoly:
    out = LaurentPoly.one(nvars)
    for p in polys:
        out = out * p
    return out


def x_minus_one(nvars: int, i: int) -> LaurentPoly:
    return LaurentPoly.variable(nvars, i) - 1


@dataclass(frozen=True)
class UnitEndedPoly:
    """``sum_{k=low}^{low+len(coeffs)-1} coeffs[k-low] * chi^k`` in Z[Z^nvars].

    ``chi`` is the monomial with exponent ``axis``.  The extreme coefficients
    must be units (+-1) so division by it never leaves Z.
    """

    nvars: int
    axis: tuple[int, ...]
    low: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "axis", tuple(int(x) for x in self.axis))
        object.__setattr__(self, "coeffs", tuple(int(x) for x in self.coeffs))
        if len(self.axis) != self.nvars:
            raise ValueError(f"axis of length {len(self.axis)} in {self.nvars} variables")
        if not any(self.axis):
            raise ValueError("axis must be a nonzero exponent vector")
        if not self.coeffs or self.coeffs[0] not in (1, -1) or self.coeffs[-1] not in (1, -1):
            raise ValueError(f"extreme coefficients of {self.coeffs} must be +-1")

    @property
    def span(self) -> int:
        return len(self.coeffs) - 1

    @property
    def poly(self) -> LaurentPoly:
        terms = {}
        for k, r in enumerate(self.coeffs, start=self.low):
            if r:
                terms[tuple(k * a for a in self.axis)] = r
        return LaurentPoly(self.nvars, terms)

    def normalized_coeffs(self) -> tuple[int, ...]:
        """Coefficients after multiplying by ``coeffs[0]^-1 chi^-low`` (constant term 1)."""
        u = self.coeffs[0]
        return tuple(u * r for r in self.coeffs)


def _axis_coordinates(axis: Sequence[int]) -> tuple[int, zlattice.Matrix, zlattice.Matrix]:
    """``(d, B, B^-1)`` with ``B`` unimodular and ``B^-1 axis == d e_0``."""
    d = 0
    for a in axis:
        d = gcd(d, a)
    B = zlattice.unimodular_with_first_column(zlattice.primitive(axis))
    return d, B, zlattice.unimodular_inverse(B)


def divide_by_unit_ended(p: LaurentPoly, g: UnitEndedPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Division with remainder by a unit-ended polynomial in one character.

    Coordinates are changed so the axis becomes ``d e_0`` (``d`` its content);
    exponents then split into cosets by ``c_0 mod d`` and each coset is
    divided as a polynomial in ``chi = t^d`` with coefficients in the other
    variables.  ``g`` is first rescaled to constant term 1.

    Returns:
      ``(q, r)`` with ``p == q * g.poly + r``.  In every coset the
      ``chi``-degrees of ``r`` span fewer than ``g.span`` steps, starting at
      the coset's lowest degree in ``p``; ``r == 0`` iff ``p`` lies in the
      principal ideal ``(g)``.
    """
    if p.nvars != g.nvars:
        raise ValueError(f"variable-count mismatch: {p.nvars} vs {g.nvars}")
    d, B, Binv = _axis_coordinates(g.axis)
    gn = g.normalized_coeffs()
    s = g.span
    top_unit = gn[-1]
    work = dict(p.pullback(Binv).terms)

    low_of: dict[int, int] = {}
    for e in work:
        res = e[0] % d
        low_of[res] = min(low_of.get(res, e[0]), e[0])

    quot: dict[Exponent, int] = {}
    while True:
        lead = None
        for e in work:
            if e[0] - low_of[e[0] % d] >= d * s and (lead is None or e[0] > lead):
                lead = e[0]
        if lead is None:
            break
        for e in [e for e in work if e[0] == lead]:
            c = work.get(e)
            if not c:
                continue
            qc = c * top_unit
            base = lead - d * s
            _add_into(quot, (base,) + e[1:], qc)
            for k, gk in enumerate(gn):
                if gk:
                    _add_into(work, (base + d * k,) + e[1:], -qc * gk)

    # p' = Q*gn + R and gn = u * chi^-low * g', so q' = u * chi^-low * Q
    u = g.coeffs[0]
    shift = d * g.low
    q_new = {(e[0] - shift,) + e[1:]: u * c for e, c in quot.items()}
    q = LaurentPoly._raw(p.nvars, q_new).pullback(B)
    r = LaurentPoly._raw(p.nvars, work).pullback(B)
    return q, r
