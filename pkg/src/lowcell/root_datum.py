"""Root data, the weight lattice and the finite quotient by a character lattice.

Weights live in the full weight lattice and are written in the basis of
fundamental weights, so the simple root ``alpha_i`` is the ``i``-th column of
the Cartan matrix ``a[i][j] = <alpha_i^vee, alpha_j>``.  The character lattice
``X`` is given by a basis of rows in the same coordinates.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from . import lattice
from .errors import DatumError

MAX_RANK = 4


class Weight(tuple):
    """An integral weight in fundamental-weight coordinates.

    A tuple subclass, so it hashes, orders and compares like the plain
    exponent tuples used inside polynomials; ``+``, ``-`` and scalar ``*`` are
    the lattice operations instead of concatenation.
    """

    def __new__(cls, coords: Iterable[int] = ()):
        return super().__new__(cls, (int(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    def __add__(self, other):
        return Weight(a + b for a, b in zip(self, other))

    __radd__ = __add__

    def __sub__(self, other):
        return Weight(a - b for a, b in zip(self, other))

    def __rsub__(self, other):
        return Weight(b - a for a, b in zip(self, other))

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, k):
        return Weight(k * a for a in self)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Weight({list(self)})"

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self)


@dataclass(frozen=True, order=True)
class OmegaElement:
    """An element of the finite abelian group ``X~/X``.

    Stored as residues modulo the nontrivial invariant factors.
    """

    residues: tuple[int, ...]
    moduli: tuple[int, ...]

    def __add__(self, other: "OmegaElement") -> "OmegaElement":
        return OmegaElement(
            tuple((a + b) % m for a, b, m in zip(self.residues, other.residues, self.moduli)),
            self.moduli)

    def __neg__(self) -> "OmegaElement":
        return OmegaElement(tuple((-a) % m for a, m in zip(self.residues, self.moduli)),
                            self.moduli)

    def __sub__(self, other: "OmegaElement") -> "OmegaElement":
        return self + (-other)

    @property
    def is_identity(self) -> bool:
        return not any(self.residues)

    def __str__(self):
        if not self.moduli:
            return "0"
        return "(" + ", ".join(f"{a} mod {m}" for a, m in zip(self.residues, self.moduli)) + ")"


@dataclass(frozen=True)
class OmegaGroup:
    """``X~/X`` as a product of cyclic groups, from the Smith form of the sublattice."""

    invariant_factors: tuple[int, ...]  # all of them, 1's included
    projection: tuple[tuple[int, ...], ...]  # columns of V for the nontrivial factors

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d != 1)

    @property
    def elem_count(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    @property
    def identity(self) -> OmegaElement:
        return OmegaElement((0,) * len(self.moduli), self.moduli)

    def label(self, weight: Sequence[int]) -> OmegaElement:
        res = tuple(sum(w * c for w, c in zip(weight, col)) % m
                    for col, m in zip(self.projection, self.moduli))
        return OmegaElement(res, self.moduli)

    def elements(self) -> list[OmegaElement]:
        return [OmegaElement(r, self.moduli) for r in product(*(range(m) for m in self.moduli))]

    def canonical_form(self) -> str:
        if not self.moduli:
            return "trivial"
        return " x ".join(f"Z/{m}" for m in self.moduli)


@dataclass(frozen=True)
class PositiveRoot:
    root: Weight  # fundamental-weight coordinates
    simple_coords: tuple[int, ...]  # coefficients on simple roots
    coroot: tuple[int, ...]  # coefficients on simple coroots; <lam, beta^vee> = coroot . lam

    def pair(self, lam: Sequence[int]) -> int:
        return sum(c * x for c, x in zip(self.coroot, lam))


@dataclass(frozen=True)
class RootDatum:
    cartan: tuple[tuple[int, ...], ...]
    sublattice: tuple[tuple[int, ...], ...]
    name: str = ""
    positive_roots: tuple[PositiveRoot, ...] = field(default=(), compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def simple_roots(self) -> list[Weight]:
        return [Weight(self.cartan[i][j] for i in range(self.rank)) for j in range(self.rank)]

    @property
    def pos_roots(self) -> list[Weight]:
        return [p.root for p in self.positive_roots]

    @property
    def fund_weights(self) -> list[Weight]:
        return [Weight(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    @property
    def rho(self) -> Weight:
        return Weight((1,) * self.rank)

    def zero(self) -> Weight:
        return Weight.zero(self.rank)

    @cached_property
    def omega(self) -> OmegaGroup:
        u, d, v = lattice.smith_form([list(r) for r in self.sublattice])
        factors = tuple(d[i][i] for i in range(self.rank))
        proj = tuple(tuple(v[k][i] for k in range(self.rank))
                     for i in range(self.rank) if factors[i] != 1)
        return OmegaGroup(factors, proj)

    def coset_of(self, lam: Sequence[int]) -> OmegaElement:
        return self.omega.label(lam)

    def in_sublattice(self, lam: Sequence[int]) -> bool:
        return self.coset_of(lam).is_identity

    @cached_property
    def digest(self) -> str:
        """Content digest of the datum (Cartan matrix plus sublattice)."""
        blob = json.dumps({"cartan": self.cartan, "sublattice": self.sublattice},
                          separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    @cached_property
    def cartan_digest(self) -> str:
        """Digest of the part that fixes the Weyl group and weight lattice."""
        blob = json.dumps({"cartan": self.cartan}, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def height_key(self, lam: Sequence[int]) -> tuple:
        """Sort key that strictly increases along the dominance order.

        ``<lam, rho^vee>`` times ``det(cartan)``, ties broken lexicographically.
        """
        inv = self._cartan_inverse_scaled
        ht = sum(inv[i][j] * lam[j] for i in range(self.rank) for j in range(self.rank))
        return (ht, tuple(lam))

    @cached_property
    def _cartan_inverse_scaled(self) -> list[list[int]]:
        d = abs(lattice.det(self.cartan))
        inv = lattice.inverse_fraction(self.cartan)
        return [[int(x * d) for x in row] for row in inv]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "sublattice": [list(r) for r in self.sublattice],
            "simple_roots": [list(a) for a in self.simple_roots],
            "positive_roots": [list(a) for a in self.pos_roots],
            "rho": list(self.rho),
            "omega": {"order": self.omega.elem_count,
                      "invariant_factors": list(self.omega.moduli),
                      "form": self.omega.canonical_form()},
            "digest": self.digest,
        }


def cartan_matrix(series: str, rank: int) -> list[list[int]]:
    """Cartan matrix of a finite type in Bourbaki numbering."""
    series = series.upper()
    n = rank
    bounds = {"A": 1, "B": 2, "C": 2, "D": 4}
    if series in bounds and n < bounds[series]:
        raise DatumError(f"type {series}{n} needs rank >= {bounds[series]}")
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if series in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if series == "B" and n >= 2:
            link(n - 2, n - 1, -1, -2)
        if series == "C" and n >= 2:
            link(n - 2, n - 1, -2, -1)
    elif series == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif series == "E":
        if n not in (6, 7, 8):
            raise DatumError(f"no type E{n}")
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif series == "F":
        if n != 4:
            raise DatumError(f"no type F{n}")
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif series == "G":
        if n != 2:
            raise DatumError(f"no type G{n}")
        link(0, 1, -3, -1)
    else:
        raise DatumError(f"unknown Cartan type {series!r}")
    return a


def validate_cartan(a: Sequence[Sequence[int]]) -> None:
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise DatumError("Cartan matrix must be square and nonempty")
    for i in range(n):
        if a[i][i] != 2:
            raise DatumError("Cartan matrix must have 2 on the diagonal")
        for j in range(n):
            if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                raise DatumError(f"bad off-diagonal entries at ({i}, {j})")
    # symmetrizability: d_i a_ij = d_j a_ji, propagated along the diagram
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and a[i][j]:
                    dj = d[i] * a[i][j] / a[j][i]
                    if d[j] is None:
                        d[j] = dj
                        stack.append(j)
                    elif d[j] != dj:
                        raise DatumError("Cartan matrix is not symmetrizable")
    # finite type iff all leading principal minors are positive
    for k in range(1, n + 1):
        if lattice.det([row[:k] for row in a[:k]]) <= 0:
            raise DatumError("Cartan matrix is not of finite type")


def _positive_roots(a: Sequence[Sequence[int]]) -> tuple[PositiveRoot, ...]:
    """Close the simple roots under simple reflections, keeping positive roots.

    Roots and coroots are tracked in simple (co)root coordinates, so no
    division ever happens.
    """
    n = len(a)
    unit = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = {u: u for u in unit}  # simple-root coords -> simple-coroot coords
    frontier = list(unit)
    while frontier:
        nxt = []
        for beta in frontier:
            cobeta = seen[beta]
            for i in range(n):
                if beta == unit[i]:
                    continue
                # <beta, alpha_i^vee> and <alpha_i, beta^vee>
                p = sum(a[i][j] * beta[j] for j in range(n))
                q = sum(cobeta[j] * a[j][i] for j in range(n))
                new = tuple(b - p * int(k == i) for k, b in enumerate(beta))
                conew = tuple(c - q * int(k == i) for k, c in enumerate(cobeta))
                if new not in seen:
                    seen[new] = conew
                    nxt.append(new)
        frontier = nxt
        if len(seen) > 10_000:
            raise DatumError("root closure did not terminate")
    roots = []
    for beta in sorted(seen, key=lambda b: (sum(b), tuple(-x for x in b))):
        wt = Weight(sum(a[i][j] * beta[j] for j in range(n)) for i in range(n))
        roots.append(PositiveRoot(wt, beta, seen[beta]))
    return tuple(roots)


def make_datum(cartan: Sequence[Sequence[int]], sublattice="weight", name: str = "",
               allow_large: bool = False) -> RootDatum:
    """Validate and assemble a :class:`RootDatum`.

    ``sublattice`` is ``"weight"``, ``"root"``, or a list of integer rows
    generating ``X`` (extra generators are allowed and reduced to a basis).
    """
    a = [[int(x) for x in row] for row in cartan]
    validate_cartan(a)
    n = len(a)
    if n > MAX_RANK and not allow_large:
        raise DatumError(f"rank {n} exceeds the supported bound {MAX_RANK}")
    simple = [[a[i][j] for i in range(n)] for j in range(n)]
    if isinstance(sublattice, str):
        key = sublattice.lower()
        if key in ("weight", "sc", "simply_connected"):
            gens = lattice.identity(n)
        elif key in ("root", "adjoint"):
            gens = simple
        else:
            raise DatumError(f"unknown sublattice keyword {sublattice!r}")
    else:
        try:
            gens = [[int(x) for x in row] for row in sublattice]
        except (TypeError, ValueError) as exc:
            raise DatumError(f"sublattice rows must be integer lists: {exc}") from None
        if any(len(row) != n for row in gens):
            raise DatumError(f"sublattice rows must have length {n}")
    basis = lattice.hermite_rows(gens)
    if len(basis) != n or lattice.det(basis) == 0:
        raise DatumError("sublattice is singular (not of finite index)")
    for j, alpha in enumerate(simple):
        if lattice.solve_integral(basis, alpha) is None:
            raise DatumError(f"sublattice does not contain the simple root alpha_{j + 1}")
    return RootDatum(
        cartan=tuple(tuple(r) for r in a),
        sublattice=tuple(tuple(r) for r in basis),
        name=name,
        positive_roots=_positive_roots(a),
    )


def parse_type(text: str) -> tuple[str, int]:
    text = text.strip()
    if len(text) < 2 or not text[0].isalpha() or not text[1:].isdigit():
        raise DatumError(f"cannot parse Cartan type {text!r}")
    return text[0].upper(), int(text[1:])


def load_datum(doc: dict | str, allow_large: bool = False) -> RootDatum:
    """Build a datum from a parsed document or from YAML/JSON text.

    Recognized keys: ``type`` (e.g. ``"A2"``) or ``cartan`` (list of rows),
    and optional ``sublattice`` (``"root"``, ``"weight"`` or a list of rows;
    default ``"weight"``).
    """
    if isinstance(doc, str):
        import yaml

        try:
            doc = yaml.safe_load(doc)
        except yaml.YAMLError as exc:
            raise DatumError(f"unparseable datum document: {exc}") from None
    if not isinstance(doc, dict):
        raise DatumError("datum document must be a mapping")
    typ = doc.get("type")
    cartan = doc.get("cartan")
    if isinstance(typ, str) and typ.strip().lower().startswith("cartan"):
        # ``type: "cartan = [[...]]"`` form
        import yaml

        cartan = yaml.safe_load(typ.split("=", 1)[1]) if "=" in typ else None
        typ = None
    if cartan is None and typ is None:
        raise DatumError("datum needs a 'type' or a 'cartan' field")
    if cartan is not None:
        if not (isinstance(cartan, list) and all(isinstance(r, list) for r in cartan)):
            raise DatumError("cartan must be a list of integer rows")
        try:
            cartan = [[int(x) for x in r] for r in cartan]
        except (TypeError, ValueError):
            raise DatumError("cartan entries must be integers") from None
        name = doc.get("name", "cartan")
    else:
        series, rank = parse_type(str(typ))
        cartan = cartan_matrix(series, rank)
        name = doc.get("name", f"{series}{rank}")
    sub = doc.get("sublattice", "weight")
    return make_datum(cartan, sub, name=str(name), allow_large=allow_large)


def standard_datum(typ: str, sublattice="weight") -> RootDatum:
    """Shortcut: ``standard_datum("A2", "root")``."""
    series, rank = parse_type(typ)
    return make_datum(cartan_matrix(series, rank), sublattice, name=f"{series}{rank}")


def dominant_weights_up_to(datum: RootDatum, cutoff: int) -> list[Weight]:
    """Dominant weights with coordinate sum at most ``cutoff``, lexicographic."""
    if cutoff < 0:
        return []
    out = [Weight(c) for c in product(range(cutoff + 1), repeat=datum.rank)
           if sum(c) <= cutoff]
    return sorted(out)
