"""Classes in Z[X~] (x)_{Z[X~]^W0} Z[X~], the convolution product, restriction
to the orbit strata, and the membership test for the sublattice ``X``.

A class is kept in normal form ``sum_f a_f (x) e^{x_f}``: the right factor is a
Steinberg basis monomial and the left coefficient ``a_f`` is arbitrary.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .characters import pairing, weyl_character
from .group_algebra import LaurentPoly, weyl_act
from .root_datum import RootDatum, Weight, dominant_weights_up_to
from .steinberg import SteinbergData, expand, steinberg_data
from .weyl_group import WeylElement


@dataclass(frozen=True, eq=False)
class KClass:
    data: SteinbergData = field(repr=False)
    coeffs: dict[WeylElement, LaurentPoly]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {f: c for f, c in self.coeffs.items() if c})

    @property
    def datum(self) -> RootDatum:
        return self.data.datum

    def coeff(self, f: WeylElement) -> LaurentPoly:
        return self.coeffs.get(f, LaurentPoly.zero())

    def __eq__(self, other):
        return isinstance(other, KClass) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "KClass") -> "KClass":
        out = dict(self.coeffs)
        for f, c in other.coeffs.items():
            out[f] = out.get(f, LaurentPoly.zero()) + c
        return KClass(self.data, out)

    def __neg__(self) -> "KClass":
        return KClass(self.data, {f: -c for f, c in self.coeffs.items()})

    def __sub__(self, other: "KClass") -> "KClass":
        return self + (-other)

    def scale(self, k) -> "KClass":
        """Multiply every left coefficient by an int or a polynomial."""
        return KClass(self.data, {f: c * k for f, c in self.coeffs.items()})

    def __mul__(self, other: "KClass") -> "KClass":
        return convolve(self, other)

    def recombine(self) -> list[tuple[LaurentPoly, Weight]]:
        """Pure-tensor presentation ``[(a_f, x_f), ...]`` in element order."""
        return [(self.coeffs[f], self.data.x_weights[f]) for f in self.data.elements
                if f in self.coeffs]

    def __repr__(self):
        body = ", ".join(f"{f}: {c}" for f, c in self.recombine_named())
        return f"KClass({{{body}}})"

    def recombine_named(self):
        return [(f, self.coeffs[f]) for f in self.data.elements if f in self.coeffs]


@dataclass(frozen=True, eq=False)
class CellElement:
    """Index ``(f, chi, f')`` of ``f^-1 w0 chi f'`` in the lowest two-sided cell.

    ``f`` and ``f2`` are Weyl group elements standing for ``w x_w`` in Sigma.
    """

    f: WeylElement
    chi: Weight
    f2: WeylElement

    def __post_init__(self):
        if not Weight(self.chi).is_dominant():
            from .errors import InputError
            raise InputError(f"cell weight {list(self.chi)} is not dominant")
        object.__setattr__(self, "chi", Weight(self.chi))

    @property
    def key(self) -> tuple:
        g = self.f.group
        return (g.index[self.f], tuple(self.chi), g.index[self.f2])

    def __eq__(self, other):
        return isinstance(other, CellElement) and self.key == other.key

    def __lt__(self, other):
        return self.key < other.key

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return f"({self.f}, {list(self.chi)}, {self.f2})"

    def to_json(self) -> dict:
        return {"f": list(self.f.word), "chi": list(self.chi), "f2": list(self.f2.word)}


def zero_class(data: SteinbergData) -> KClass:
    return KClass(data, {})


def normalize(data: SteinbergData, a: LaurentPoly, b: LaurentPoly) -> KClass:
    """Normal form of the pure tensor ``a (x) b``."""
    if not a or not b:
        return zero_class(data)
    return KClass(data, {f: a * c for f, c in expand(data, b).items()})


def from_pairs(data: SteinbergData, pairs) -> KClass:
    """Sum of ``a (x) b`` over ``(a, b)`` pairs of polynomials."""
    out = zero_class(data)
    for a, b in pairs:
        out = out + normalize(data, a, b)
    return out


def convolve(k1: KClass, k2: KClass) -> KClass:
    """``(sum a_f (x) x_f) * (sum b_g (x) x_g) = sum_g (sum_f a_f (x_f, b_g)) (x) x_g``."""
    data = k1.data
    datum = data.datum
    out: dict[WeylElement, LaurentPoly] = {}
    for g, b in k2.coeffs.items():
        acc = LaurentPoly.zero()
        for f, a in k1.coeffs.items():
            p = pairing(datum, data.x(f), b)
            if p:
                acc = acc + a * p
        if acc:
            out[g] = acc
    return KClass(data, out)


def identity_class(data: SteinbergData) -> KClass:
    """``sum_f y_f (x) e^{x_f}``, the two-sided unit."""
    return KClass(data, {f: data.duals[f] for f in data.elements})


def restrict(k: KClass, w: WeylElement) -> LaurentPoly:
    """Restriction to the stratum of ``w``: ``a (x) b -> a * w(b)``."""
    out = LaurentPoly.zero()
    for f, a in k.coeffs.items():
        out = out + a * weyl_act(w, k.data.x(f))
    return out


def is_in_KG(datum: RootDatum, k: KClass) -> bool:
    """Every restriction lies in Z[X] (the trivial coset of ``X~/X``)."""
    for w in k.data.elements:
        r = restrict(k, w)
        if any(not datum.in_sublattice(e) for e in r.terms):
            return False
    return True


def sigma(data: SteinbergData, z: CellElement) -> KClass:
    """``t_{f^-1 w0 chi f'} -> V(chi) y_f (x) x_{f'}``."""
    datum = data.datum
    return KClass(data, {z.f2: weyl_character(datum, z.chi) * data.duals[z.f]})


def omega_criterion(datum: RootDatum, data: SteinbergData, f: WeylElement, chi,
                    f2: WeylElement) -> bool:
    """``[chi] + [x_{f'}] == [x_f]`` in ``X~/X``."""
    c = datum.coset_of
    return (c(chi) + c(data.x_weights[f2]) - c(data.x_weights[f])).is_identity


def cell_elements(data: SteinbergData, cutoff: int) -> list[CellElement]:
    """All ``(f, chi, f')`` with ``chi`` dominant of coordinate sum <= cutoff."""
    out = []
    for f in data.elements:
        for chi in dominant_weights_up_to(data.datum, cutoff):
            for f2 in data.elements:
                out.append(CellElement(f, chi, f2))
    return out


def g_basis(datum: RootDatum, cutoff: int, data: SteinbergData | None = None) -> list[CellElement]:
    """Cell indices whose sigma-image lies in the K-group for ``X``."""
    data = data or steinberg_data(datum)
    return [z for z in cell_elements(data, cutoff)
            if omega_criterion(datum, data, z.f, z.chi, z.f2)]
