"""Double cosets ``W_I \\ W0 / W_I``, their minimal representatives and closure
order, and characters of the Levi-type subsystems ``R_I ∩ w(R_I)``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import IncompatibleI, InputError, InvariantViolation, NotDivisible, NotDominantForLevi
from .group_algebra import LaurentPoly, exact_div
from .lattice import det
from .root_datum import PositiveRoot, RootDatum, Weight
from .weyl_group import WeylElement, bruhat_leq, weyl_group


@dataclass(frozen=True)
class DoubleCoset:
    I: frozenset[int]
    elements: tuple[WeylElement, ...]
    min_rep: WeylElement

    def __contains__(self, w) -> bool:
        return w in self.elements

    def __len__(self):
        return len(self.elements)

    def to_json(self) -> dict:
        return {"min_rep": list(self.min_rep.word), "size": len(self.elements),
                "elements": [list(w.word) for w in self.elements]}


def _check_I(datum: RootDatum, I: Iterable[int]) -> frozenset[int]:
    I = frozenset(int(i) for i in I)
    if any(not 1 <= i <= datum.rank for i in I):
        raise InputError(f"I must be a subset of 1..{datum.rank}")
    return I


def parabolic_subgroup(datum: RootDatum, I: Iterable[int]) -> list[WeylElement]:
    group = weyl_group(datum)
    I = _check_I(datum, I)
    seen = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for w in frontier:
            for i in I:
                v = w * group.s(i)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return sorted(seen, key=lambda w: (w.length, w.word))


def double_cosets(datum: RootDatum, I: Iterable[int]) -> list[DoubleCoset]:
    """Partition of W0 into ``W_I w W_I``, sorted by the length of the minimal element."""
    I = _check_I(datum, I)
    group = weyl_group(datum)
    wi = parabolic_subgroup(datum, I)
    done: set = set()
    out = []
    for w in group:  # length order, so w is the minimal element when first met
        if w in done:
            continue
        cos = {u * w * v for u in wi for v in wi}
        done |= cos
        elems = tuple(sorted(cos, key=lambda x: (x.length, x.word)))
        minimal = [x for x in elems if x.length == elems[0].length]
        if len(minimal) != 1:
            raise InvariantViolation(f"double coset of {w} has no unique minimal element")
        out.append(DoubleCoset(I, elems, minimal[0]))
    out.sort(key=lambda d: (d.min_rep.length, d.min_rep.word))
    return out


def coset_leq(d: DoubleCoset, d2: DoubleCoset) -> bool:
    """``d <= d2`` iff ``u_d <= u_d2`` in the Bruhat order."""
    if d.I != d2.I:
        raise IncompatibleI("double cosets taken with respect to different I")
    return bruhat_leq(d.min_rep, d2.min_rep)


def hasse_edges(cosets: Sequence[DoubleCoset]) -> list[tuple[int, int]]:
    """Covering pairs ``(i, j)`` with ``cosets[i] < cosets[j]``."""
    n = len(cosets)
    less = [[i != j and coset_leq(cosets[i], cosets[j]) for j in range(n)] for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(n):
            if less[i][j] and not any(less[i][k] and less[k][j] for k in range(n)):
                edges.append((i, j))
    return edges


def levi_positive_roots(datum: RootDatum, I: Iterable[int], w: WeylElement) -> list[PositiveRoot]:
    """Positive roots of the ambient system lying in ``R_I ∩ w(R_I)``."""
    I = _check_I(datum, I)
    in_RI = {b.root for b in datum.positive_roots
             if all(c == 0 or k + 1 in I for k, c in enumerate(b.simple_coords))}
    r_I = in_RI | {-r for r in in_RI}
    w_r_I = {w.act(r) for r in r_I}
    return [b for b in datum.positive_roots if b.root in r_I and b.root in w_r_I]


def _reflection(b: PositiveRoot, n: int):
    return tuple(tuple(int(i == j) - b.root[i] * b.coroot[j] for j in range(n)) for i in range(n))


def _subgroup_matrices(n: int, gens):
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    seen = {ident}
    frontier = [ident]

    def mul(a, b):
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
                     for i in range(n))

    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = mul(m, g)
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
        frontier = nxt
    return sorted(seen)


def levi_character(datum: RootDatum, I: Iterable[int], w: WeylElement, chi: Sequence[int]) -> LaurentPoly:
    """Irreducible character of highest weight ``chi`` for the subsystem ``R_I ∩ w(R_I)``.

    Weyl's formula for the subsystem, written with ``e^{-rho_L}`` cleared so
    that only integral exponents appear::

        sum_v det(v) e^{v(chi) + v(rho_L) - rho_L}  /  prod_{beta} (1 - e^{-beta})
    """
    n = datum.rank
    chi = Weight(chi)
    roots = levi_positive_roots(datum, I, w)
    for b in roots:
        if b.pair(chi) < 0:
            raise NotDominantForLevi(
                f"{list(chi)} pairs negatively with the coroot of {list(b.root)}")
    if not roots:
        return LaurentPoly.monomial(chi)
    two_rho = Weight.zero(n)
    for b in roots:
        two_rho = two_rho + b.root
    num: dict[tuple[int, ...], int] = {}
    for m in _subgroup_matrices(n, [_reflection(b, n) for b in roots]):
        v_chi = [sum(m[i][j] * chi[j] for j in range(n)) for i in range(n)]
        v_2rho = [sum(m[i][j] * two_rho[j] for j in range(n)) for i in range(n)]
        shift = [(a - b) // 2 for a, b in zip(v_2rho, two_rho)]
        e = tuple(a + s for a, s in zip(v_chi, shift))
        num[e] = num.get(e, 0) + det(m)
    den = LaurentPoly.one(n)
    for b in roots:
        den = den * LaurentPoly({(0,) * n: 1, tuple(-x for x in b.root): -1})
    try:
        return exact_div(LaurentPoly(num), den)
    except NotDivisible as exc:
        raise InvariantViolation(f"Levi character not polynomial: {exc}") from exc
