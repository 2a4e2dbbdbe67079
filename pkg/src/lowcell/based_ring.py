"""The based ring of the lowest two-sided cell on its ``t``-basis, and the check
that ``sigma`` carries its product to convolution."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .characters import tensor_decompose
from .convolution import CellElement, KClass, cell_elements, convolve, sigma, zero_class
from .errors import VerificationFailed
from .root_datum import RootDatum
from .steinberg import SteinbergData, steinberg_data
from .weyl_group import ExtAffineElement, weyl_group

EXHAUSTIVE_LIMIT = 10_000


@dataclass
class JRingElement:
    terms: dict[CellElement, int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {z: c for z, c in sorted(self.terms.items()) if c}

    def __add__(self, other: "JRingElement") -> "JRingElement":
        out = dict(self.terms)
        for z, c in other.terms.items():
            out[z] = out.get(z, 0) + c
        return JRingElement(out)

    def __mul__(self, other: "JRingElement") -> "JRingElement":
        out = JRingElement()
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                prod = jmultiply(None, a, b)
                out = out + JRingElement({z: c * ca * cb for z, c in prod.terms.items()})
        return out

    def __eq__(self, other):
        return isinstance(other, JRingElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def to_json(self) -> list[dict]:
        return [dict(z.to_json(), coeff=c) for z, c in self.terms.items()]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*t{z}" for z, c in self.terms.items())


def basis_element(z: CellElement) -> JRingElement:
    return JRingElement({z: 1})


def jmultiply(datum: RootDatum | None, a: CellElement, b: CellElement) -> JRingElement:
    """``t_(f,chi,f') t_(g,chi',g') = delta_{f',g} sum_lam m_lam t_(f,lam,g')``."""
    if a.f2 != b.f:
        return JRingElement()
    datum = datum or a.f.group.datum
    parts = tensor_decompose(datum, a.chi, b.chi).parts
    return JRingElement({CellElement(a.f, lam, b.f2): m for lam, m in parts.items()})


def sigma_element(data: SteinbergData, x: JRingElement) -> KClass:
    out = zero_class(data)
    for z, c in x.terms.items():
        out = out + sigma(data, z).scale(c)
    return out


def sigma_point(data: SteinbergData, w) -> ExtAffineElement:
    """The element ``w x_w`` of Sigma, i.e. ``t_{w(x_w)} w``."""
    return ExtAffineElement(w.act(data.x_weights[w]), w)


def cell_group_element(data: SteinbergData, z: CellElement) -> ExtAffineElement:
    """``f^-1 w0 chi f'`` as an element ``t_lambda w`` of the extended affine group."""
    group = weyl_group(data.datum)
    w0 = ExtAffineElement.finite_part(group.longest)
    t = ExtAffineElement.translation_by(group, z.chi)
    return sigma_point(data, z.f).inverse() * w0 * t * sigma_point(data, z.f2)


def in_c0(datum: RootDatum, z: CellElement, data: SteinbergData | None = None) -> bool:
    """Whether ``f^-1 w0 chi f'`` lies in ``X x| W0`` (translation part in ``X``)."""
    data = data or steinberg_data(datum)
    return datum.in_sublattice(cell_group_element(data, z).translation)


@dataclass
class SigmaReport:
    datum: str
    digest: str
    cutoff: int
    mode: str
    seed: int
    checked: int = 0
    passed: int = 0
    closure_checked: int = 0
    counterexample: dict | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None and self.checked == self.passed

    def to_json(self) -> dict:
        doc = {
            "datum": self.datum,
            "digest": self.digest,
            "cutoff": self.cutoff,
            "mode": self.mode,
            "seed": self.seed,
            "checked": self.checked,
            "passed": self.passed,
            "closure_checked": self.closure_checked,
            "ok": self.ok,
        }
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample
        return doc


def sample_pairs(cells: list[CellElement], sample_count: int, seed: int):
    """All ordered pairs when there are few enough, else a seeded sample.

    Sampled pairs are composable (``a.f2 == b.f``) half of the time; the rest
    are uniform, which almost always hits the zero product.
    """
    n = len(cells)
    if n * n <= EXHAUSTIVE_LIMIT:
        return "exhaustive", [(a, b) for a in cells for b in cells]
    rng = random.Random(seed)
    by_left: dict = {}
    for z in cells:
        by_left.setdefault(z.f, []).append(z)
    pairs = []
    for _ in range(sample_count):
        a = cells[rng.randrange(n)]
        if rng.random() < 0.5:
            pool = by_left[a.f2]
            b = pool[rng.randrange(len(pool))]
        else:
            b = cells[rng.randrange(n)]
        pairs.append((a, b))
    return "sampled", pairs


def verify_sigma_hom(datum: RootDatum, cutoff: int, sample_count: int = 200, seed: int = 0,
                     data: SteinbergData | None = None, raise_on_failure: bool = True) -> SigmaReport:
    """Check ``sigma(a b) == sigma(a) * sigma(b)`` and closure of the ``X`` part.

    Exhaustive over all ordered pairs of cell indices with weights up to
    ``cutoff`` when there are at most ``EXHAUSTIVE_LIMIT`` pairs, otherwise
    ``sample_count`` pairs drawn with ``random.Random(seed)``.
    """
    data = data or steinberg_data(datum)
    cells = cell_elements(data, cutoff)
    mode, pairs = sample_pairs(cells, sample_count, seed)
    report = SigmaReport(datum.name, datum.digest, cutoff, mode, seed)
    c0 = {z: in_c0(datum, z, data) for z in cells}
    for a, b in pairs:
        report.checked += 1
        prod = jmultiply(datum, a, b)
        lhs = sigma_element(data, prod)
        rhs = convolve(sigma(data, a), sigma(data, b))
        bad = None
        if lhs != rhs:
            bad = "sigma(a*b) != sigma(a)*sigma(b)"
        elif c0[a] and c0[b]:
            report.closure_checked += 1
            if not all(in_c0(datum, z, data) for z in prod.terms):
                bad = "product of J_c0 elements leaves J_c0"
        if bad:
            report.counterexample = {"reason": bad, "a": a.to_json(), "b": b.to_json(),
                                     "product": prod.to_json()}
            if raise_on_failure:
                raise VerificationFailed(bad, report.to_json())
            break
        report.passed += 1
    return report


