"""Weyl characters, the antisymmetrized pairing and tensor product decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError, InvariantViolation, NegativeMultiplicity, NotDivisible
from .group_algebra import InvariantPoly, LaurentPoly, exact_div
from .root_datum import RootDatum, Weight
from .weyl_group import weyl_group

_char_cache: dict[tuple, LaurentPoly] = {}


def alternate(datum: RootDatum, p: LaurentPoly) -> LaurentPoly:
    """``sum_w (-1)^l(w) w(p)``."""
    out: dict[tuple[int, ...], int] = {}
    for w in weyl_group(datum):
        m, sgn = w.matrix, w.sign
        for e, c in p.terms.items():
            f = tuple(sum(x * y for x, y in zip(row, e)) for row in m)
            v = out.get(f, 0) + sgn * c
            if v:
                out[f] = v
            else:
                del out[f]
    return LaurentPoly(out)


def antisymmetrize(datum: RootDatum, mu: Sequence[int]) -> LaurentPoly:
    """``J(mu) = sum_w (-1)^l(w) e^{w(mu)}``."""
    return alternate(datum, LaurentPoly.monomial(mu))


_denominator_cache: dict[tuple, LaurentPoly] = {}


def weyl_denominator(datum: RootDatum) -> LaurentPoly:
    got = _denominator_cache.get(datum.cartan)
    if got is None:
        got = _denominator_cache[datum.cartan] = antisymmetrize(datum, datum.rho)
    return got


def weyl_denominator_product(datum: RootDatum) -> LaurentPoly:
    """``e^rho * prod_{alpha > 0} (1 - e^{-alpha})``, expanded."""
    r = datum.rank
    out = LaurentPoly.monomial(datum.rho)
    for alpha in datum.pos_roots:
        out = out * LaurentPoly({(0,) * r: 1, tuple(-a for a in alpha): -1})
    return out


def _require_dominant(chi: Sequence[int]) -> Weight:
    chi = Weight(chi)
    if not chi.is_dominant():
        raise InputError(f"weight {list(chi)} is not dominant")
    return chi


def weyl_character(datum: RootDatum, chi: Sequence[int]) -> LaurentPoly:
    """Character of the irreducible module of highest weight ``chi``."""
    chi = _require_dominant(chi)
    key = (datum.cartan, tuple(chi))
    got = _char_cache.get(key)
    if got is None:
        num = antisymmetrize(datum, chi + datum.rho)
        try:
            got = exact_div(num, weyl_denominator(datum))
        except NotDivisible as exc:
            raise InvariantViolation(f"Weyl character of {list(chi)}: {exc}") from exc
        _char_cache[key] = got
    return got


def weyl_dim(datum: RootDatum, chi: Sequence[int]) -> int:
    """Weyl dimension formula ``prod <chi + rho, a^vee> / <rho, a^vee>``."""
    chi = _require_dominant(chi)
    top = chi + datum.rho
    d = Fraction(1)
    for b in datum.positive_roots:
        d *= Fraction(b.pair(top), b.pair(datum.rho))
    assert d.denominator == 1
    return int(d)


def straighten(datum: RootDatum, mu: Sequence[int]) -> tuple[Weight, int] | None:
    """``(w(mu), (-1)^l(w))`` with ``w(mu)`` dominant, or ``None`` when ``mu`` lies
    on a wall (then ``J(mu) = 0``).  ``J(mu) = sign * J(w(mu))``."""
    a = datum.cartan
    n = len(a)
    v = list(mu)
    sign = 1
    while True:
        k = next((i for i in range(n) if v[i] < 0), None)
        if k is None:
            break
        c = v[k]
        for i in range(n):
            v[i] -= c * a[i][k]
        sign = -sign
    if any(x == 0 for x in v):
        return None
    return Weight(v), sign


def pairing(datum: RootDatum, p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """``(p, q) = J(p q e^rho) / J(rho)``, an element of Z[X~]^{W0}.

    Each monomial ``e^mu`` of ``p q`` contributes ``J(mu + rho) / J(rho)``,
    which is ``+-`` an irreducible character or zero, so the quotient is
    assembled from cached characters without dividing.
    """
    rho = datum.rho
    mult: dict[Weight, int] = {}
    for e, c in (p * q).terms.items():
        got = straighten(datum, [x + r for x, r in zip(e, rho)])
        if got is not None:
            eta, sign = got
            lam = eta - rho
            mult[lam] = mult.get(lam, 0) + sign * c
    out = LaurentPoly.zero()
    for lam, m in sorted(mult.items()):
        if m:
            out = out + weyl_character(datum, lam) * m
    return out


def pairing_checked(datum: RootDatum, p: LaurentPoly, q: LaurentPoly) -> InvariantPoly:
    return InvariantPoly(pairing(datum, p, q), weyl_group(datum))


@dataclass
class CharacterDecomposition:
    parts: dict[Weight, int]

    def dimension(self, datum: RootDatum) -> int:
        return sum(m * weyl_dim(datum, lam) for lam, m in self.parts.items())

    def character(self, datum: RootDatum) -> LaurentPoly:
        out = LaurentPoly.zero()
        for lam, m in self.parts.items():
            out = out + weyl_character(datum, lam) * m
        return out

    def to_json(self) -> list[dict]:
        return [{"weight": list(lam), "multiplicity": m} for lam, m in sorted(self.parts.items())]


def decompose_character(datum: RootDatum, ch: LaurentPoly) -> CharacterDecomposition:
    """Write a W0-invariant ``ch`` as a sum of irreducible characters.

    Repeatedly strips the dominant exponent that is largest for
    :meth:`RootDatum.height_key` (compatible with the dominance order, so the
    stripped weight is always a highest weight).
    """
    rem = ch
    parts: dict[Weight, int] = {}
    while rem:
        dom = [e for e in rem.terms if all(x >= 0 for x in e)]
        if not dom:
            raise InvariantViolation("remainder has no dominant exponent; input not invariant")
        top = max(dom, key=datum.height_key)
        m = rem.coeff(top)
        if m < 0:
            raise NegativeMultiplicity(f"multiplicity {m} at {list(top)}")
        parts[Weight(top)] = m
        rem = rem - weyl_character(datum, top) * m
    return CharacterDecomposition(dict(sorted(parts.items())))


def tensor_decompose(datum: RootDatum, chi: Sequence[int], chi2: Sequence[int]) -> CharacterDecomposition:
    """Multiplicities of ``V(chi) (x) V(chi2)``."""
    prod = weyl_character(datum, chi) * weyl_character(datum, chi2)
    return decompose_character(datum, prod)
