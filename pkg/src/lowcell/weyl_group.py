"""The finite Weyl group and the extended affine Weyl group ``X~ x| W0``.

Reduced words use 1-based generator labels, ``(1, 2)`` meaning ``s1 s2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import DatumError
from .root_datum import MAX_RANK, RootDatum, Weight

MatrixT = tuple[tuple[int, ...], ...]


def _mat_mul(a: MatrixT, b: MatrixT) -> MatrixT:
    cols = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _mat_vec(m: MatrixT, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


@dataclass(frozen=True, eq=False)
class WeylElement:
    """An element of W0: its matrix on weight coordinates plus a reduced word.

    Equality and hashing use the matrix only.
    """

    matrix: MatrixT
    word: tuple[int, ...]
    group: "WeylGroup" = field(repr=False)

    @property
    def length(self) -> int:
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.group.lookup(_mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "WeylElement":
        return self.group.inverse(self)

    def act(self, lam: Sequence[int]) -> Weight:
        return Weight(_mat_vec(self.matrix, lam))

    def __call__(self, lam: Sequence[int]) -> Weight:
        return self.act(lam)

    @property
    def sign(self) -> int:
        return -1 if len(self.word) % 2 else 1

    def name(self) -> str:
        return "e" if not self.word else "s" + "s".join(map(str, self.word))

    def __str__(self):
        return self.name()

    def __repr__(self):
        return f"WeylElement({self.name()})"

    def to_json(self) -> dict:
        return {"word": list(self.word), "length": self.length,
                "matrix": [list(r) for r in self.matrix]}


class WeylGroup:
    """All elements of W0, sorted by ``(length, word)``."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        n = datum.rank
        alphas = datum.simple_roots
        self.generators_matrices: list[MatrixT] = [
            tuple(tuple(int(i == j) - alphas[k][i] * int(j == k) for j in range(n))
                  for i in range(n))
            for k in range(n)
        ]
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        # breadth-first search on left multiplication gives lengths
        length = {ident: 0}
        layers = [[ident]]
        while layers[-1]:
            nxt = []
            for m in layers[-1]:
                for g in self.generators_matrices:
                    p = _mat_mul(g, m)
                    if p not in length:
                        length[p] = len(layers)
                        nxt.append(p)
            layers.append(nxt)
        # lexicographically least reduced word: least left descent first
        words: dict[MatrixT, tuple[int, ...]] = {ident: ()}
        for layer in layers[1:]:
            for m in layer:
                for k, g in enumerate(self.generators_matrices):
                    p = _mat_mul(g, m)
                    if length[p] == length[m] - 1:
                        words[m] = (k + 1,) + words[p]
                        break
        self.elements: list[WeylElement] = sorted(
            (WeylElement(m, w, self) for m, w in words.items()),
            key=lambda e: (e.length, e.word))
        self._by_matrix = {e.matrix: e for e in self.elements}
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.identity = self.elements[0]
        self.longest = self.elements[-1]
        self.simple = [self._by_matrix[g] for g in self.generators_matrices]
        self._inverse = {}
        for e in self.elements:
            # the inverse is the reversed word
            inv = ident
            for k in e.word:
                inv = _mat_mul(self.generators_matrices[k - 1], inv)
            self._inverse[e] = self._by_matrix[inv]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def lookup(self, matrix: MatrixT) -> WeylElement:
        return self._by_matrix[matrix]

    def inverse(self, w: WeylElement) -> WeylElement:
        return self._inverse[w]

    def from_word(self, word: Sequence[int]) -> WeylElement:
        w = self.identity
        for k in word:
            if not 1 <= k <= self.datum.rank:
                raise DatumError(f"generator index {k} out of range")
            w = w * self.simple[k - 1]
        return w

    def s(self, k: int) -> WeylElement:
        return self.simple[k - 1]


@lru_cache(maxsize=None)
def weyl_group(datum: RootDatum) -> WeylGroup:
    if datum.rank > MAX_RANK and len(datum.positive_roots) > 60:
        raise DatumError("Weyl group too large for enumeration")
    return WeylGroup(datum)


def enumerate_weyl(datum: RootDatum) -> list[WeylElement]:
    return list(weyl_group(datum).elements)


def act(w: WeylElement, lam: Sequence[int]) -> Weight:
    return w.act(lam)


def longest_element(datum: RootDatum) -> WeylElement:
    return weyl_group(datum).longest


def inversion_count(w: WeylElement) -> int:
    """``#{beta > 0 : w(beta) < 0}``, computed from the coroots.

    ``w(beta) < 0`` exactly when ``<w^-1(rho), beta^vee> < 0``.
    """
    datum = w.group.datum
    r = w.inverse().act(datum.rho)
    return sum(1 for b in datum.positive_roots if b.pair(r) < 0)


def is_left_descent(w: WeylElement, k: int) -> bool:
    """Whether ``l(s_k w) < l(w)``, i.e. ``<w(rho), alpha_k^vee> < 0``."""
    return w.act(w.group.datum.rho)[k - 1] < 0


def left_descents(w: WeylElement) -> list[int]:
    r = w.act(w.group.datum.rho)
    return [k + 1 for k in range(len(r)) if r[k] < 0]


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Bruhat order via the lifting property on a left descent of ``v``."""
    return _bruhat(u.group, u.matrix, v.matrix)


@lru_cache(maxsize=200_000)
def _bruhat(group: WeylGroup, um: MatrixT, vm: MatrixT) -> bool:
    u, v = group.lookup(um), group.lookup(vm)
    if u.length > v.length:
        return False
    if v.length == 0:
        return u.length == 0
    if u.length == 0:
        return True
    k = v.word[0]  # least left descent of v
    s = group.s(k)
    sv = s * v
    if is_left_descent(u, k):
        return _bruhat(group, (s * u).matrix, sv.matrix)
    return _bruhat(group, um, sv.matrix)


@dataclass(frozen=True)
class ExtAffineElement:
    """``t_lambda * w`` in the extended affine Weyl group."""

    translation: Weight
    finite: WeylElement

    def __mul__(self, other: "ExtAffineElement") -> "ExtAffineElement":
        return ExtAffineElement(self.translation + self.finite.act(other.translation),
                                self.finite * other.finite)

    def inverse(self) -> "ExtAffineElement":
        winv = self.finite.inverse()
        return ExtAffineElement(-winv.act(self.translation), winv)

    @classmethod
    def translation_by(cls, group: WeylGroup, lam: Sequence[int]) -> "ExtAffineElement":
        return cls(Weight(lam), group.identity)

    @classmethod
    def finite_part(cls, w: WeylElement) -> "ExtAffineElement":
        return cls(Weight.zero(len(w.matrix)), w)

    def __str__(self):
        return f"t{list(self.translation)}*{self.finite}"


def ext_length(x: ExtAffineElement) -> int:
    """Iwahori-Matsumoto length of ``t_lambda w``."""
    datum = x.finite.group.datum
    lam = x.translation
    wrho = x.finite.act(datum.rho)
    total = 0
    for b in datum.positive_roots:
        p = b.pair(lam)
        # w^-1(beta) > 0  iff  <w(rho), beta^vee> > 0
        total += abs(p) if b.pair(wrho) > 0 else abs(p - 1)
    return total
