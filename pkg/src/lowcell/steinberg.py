"""The Steinberg basis ``{e^{x_w}}`` of Z[X~] over Z[X~]^{W0}, its Gram matrix
under the antisymmetrized pairing, and the dual family ``{y_f}``."""

from __future__ import annotations

import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .characters import pairing
from .errors import InvariantCheckFailed, InvariantViolation, NotDivisible
from .group_algebra import LaurentPoly, exact_div, from_text, is_invariant, to_text
from .root_datum import RootDatum, Weight
from .weyl_group import WeylElement, left_descents, weyl_group

log = logging.getLogger(__name__)

CACHE_ENV = "LOWCELL_CACHE_DIR"
CACHE_FORMAT = 1


def x_basis(datum: RootDatum) -> dict[WeylElement, Weight]:
    """``x_w = w^-1(sum of omega_i over simple alpha_i with w^-1(alpha_i) < 0)``."""
    out = {}
    for w in weyl_group(datum):
        lam = Weight.zero(datum.rank)
        for k in left_descents(w):
            lam = lam + datum.fund_weights[k - 1]
        out[w] = w.inverse().act(lam)
    return out


def gram_matrix(datum: RootDatum, xs: dict[WeylElement, Weight] | None = None) -> list[list[LaurentPoly]]:
    """``A[f][g] = (e^{x_f}, e^{x_g})`` in the group's element order."""
    xs = xs or x_basis(datum)
    elems = weyl_group(datum).elements
    n = len(elems)
    a = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = pairing(datum, LaurentPoly.monomial(xs[elems[i]]), LaurentPoly.monomial(xs[elems[j]]))
            a[i][j] = a[j][i] = v
    return a


def _unit_value(p: LaurentPoly) -> int | None:
    """``+1``/``-1`` if ``p`` is that constant, else ``None``."""
    if len(p) == 1:
        (e, c), = p.terms.items()
        if c in (1, -1) and not any(e):
            return c
    return None


def _div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    u = _unit_value(d)
    if u == 1:
        return p
    if u == -1:
        return -p
    return exact_div(p, d)


def _unit_monomial(p: LaurentPoly) -> tuple[tuple[int, ...], int] | None:
    """``(mu, s)`` when ``p == s e^mu`` with ``s = +-1`` (a unit of Z[X~])."""
    if len(p) == 1:
        (e, c), = p.terms.items()
        if c in (1, -1):
            return e, c
    return None


def _permutation_sign(perm: dict[int, int]) -> int:
    sign, seen = 1, set()
    for start in perm:
        if start in seen:
            continue
        k, length = start, 0
        while k not in seen:
            seen.add(k)
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _unit_pivot_inverse(a: list[list[LaurentPoly]], rank: int):
    """Sparse Gauss-Jordan using only unit pivots ``+-e^mu``.

    Pivots are chosen by the Markowitz count to limit fill-in.  Returns
    ``(det, inverse)`` or ``None`` as soon as no unit entry is left to pivot on.
    """
    n = len(a)
    one = LaurentPoly.one(rank)
    rows = [{j: x for j, x in enumerate(row) if x} for row in a]
    for i in range(n):
        rows[i][n + i] = one
    free_rows, free_cols = set(range(n)), set(range(n))
    pivot_col: dict[int, int] = {}
    det = one
    while free_rows:
        col_count = {j: 0 for j in free_cols}
        for i in free_rows:
            for j in rows[i]:
                if j in col_count:
                    col_count[j] += 1
        best = None
        for i in sorted(free_rows):
            for j, x in rows[i].items():
                if j not in free_cols or _unit_monomial(x) is None:
                    continue
                cost = (len(rows[i]) - 1) * (col_count[j] - 1)
                if best is None or cost < best[0]:
                    best = (cost, i, j)
        if best is None:
            return None
        _, r, c = best
        mu, s = _unit_monomial(rows[r][c])
        det = det * rows[r][c]
        inv_u = LaurentPoly.monomial(tuple(-m for m in mu), s)
        prow = {j: x * inv_u for j, x in rows[r].items()}
        rows[r] = prow
        for i in range(n):
            f = rows[i].get(c) if i != r else None
            if not f:
                continue
            row = rows[i]
            for j, x in prow.items():
                v = row.get(j, LaurentPoly.zero()) - f * x
                if v:
                    row[j] = v
                else:
                    row.pop(j, None)
        free_rows.discard(r)
        free_cols.discard(c)
        pivot_col[r] = c
    det = det * _permutation_sign(pivot_col)
    zero = LaurentPoly.zero()
    inv = [None] * n
    for r, c in pivot_col.items():
        inv[c] = [rows[r].get(n + j, zero) for j in range(n)]
    return det, inv


def invert_matrix(a: list[list[LaurentPoly]], rank: int) -> tuple[list[list[LaurentPoly]], LaurentPoly, list[list[LaurentPoly]]]:
    """Adjugate, determinant and inverse of a square matrix over Z[X~].

    Elimination with unit pivots ``+-e^mu`` is tried first; it needs no
    division at all and is what makes the rank-3 Gram matrices cheap.  If it
    runs out of unit entries, the fallback is fraction-free Gauss-Jordan
    elimination on ``[A | I]``: every division is exact (by the previous
    pivot), and at the end the left block is ``d * I`` and the right block
    ``d * A^-1`` with ``d = +-det A``.  The inverse is then one exact
    division per entry.
    """
    n = len(a)
    got = _unit_pivot_inverse(a, rank)
    if got is not None:
        det, inv = got
        return [[x * det for x in row] for row in inv], det, inv
    zero = LaurentPoly.zero()
    one = LaurentPoly.one(rank)
    m = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    prev = one
    sign = 1
    for k in range(n):
        cands = [i for i in range(k, n) if m[i][k]]
        if not cands:
            raise InvariantViolation("Gram matrix is singular")
        piv = min(cands, key=lambda i: (_unit_value(m[i][k]) is None, len(m[i][k]), i))
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pk = m[k][k]
        rowk = m[k]
        for i in range(n):
            if i == k:
                continue
            rowi = m[i]
            f = rowi[k]
            if not f and _unit_value(pk) is not None and _unit_value(prev) is not None:
                # (pk * x) / prev with unit pk, prev is a sign flip at most
                s = _unit_value(pk) * _unit_value(prev)
                if s == -1:
                    m[i] = [-x for x in rowi]
                continue
            new = []
            for j in range(2 * n):
                x = rowi[j] * pk if rowi[j] else zero
                if f and rowk[j]:
                    x = x - f * rowk[j]
                new.append(_div(x, prev) if x else zero)
            m[i] = new
        prev = pk
    d = m[0][0]
    if any(m[i][i] != d for i in range(n)):
        raise InvariantViolation("fraction-free elimination did not reach a scalar matrix")
    det = d * sign
    right = [row[n:] for row in m]
    inv = [[_div(x, d) if x else zero for x in row] for row in right]
    adj = [[x * sign for x in row] for row in right]
    return adj, det, inv


@dataclass(frozen=True)
class SteinbergData:
    """Everything needed to write classes in the basis ``{e^{x_f}}``."""

    datum: RootDatum
    elements: tuple[WeylElement, ...]
    x_weights: dict[WeylElement, Weight]
    gram: list[list[LaurentPoly]]
    gram_inverse: list[list[LaurentPoly]]
    duals: dict[WeylElement, LaurentPoly]
    datum_digest: str

    def x(self, w: WeylElement) -> LaurentPoly:
        return LaurentPoly.monomial(self.x_weights[w])

    def y(self, w: WeylElement) -> LaurentPoly:
        return self.duals[w]

    def to_json(self) -> dict:
        return {
            "format": CACHE_FORMAT,
            "digest": self.datum_digest,
            "cartan": [list(r) for r in self.datum.cartan],
            "elements": [list(w.word) for w in self.elements],
            "x": [list(self.x_weights[w]) for w in self.elements],
            "gram": [[to_text(p) for p in row] for row in self.gram],
            "gram_inverse": [[to_text(p) for p in row] for row in self.gram_inverse],
            "duals": [to_text(self.duals[w]) for w in self.elements],
        }


def dual_basis(datum: RootDatum) -> dict[WeylElement, LaurentPoly]:
    return steinberg_data(datum).duals


def _build(datum: RootDatum) -> SteinbergData:
    group = weyl_group(datum)
    elems = group.elements
    xs = x_basis(datum)
    gram = gram_matrix(datum, xs)
    _adj, _det, inv = invert_matrix(gram, datum.rank)
    duals = {}
    for i, f in enumerate(elems):
        y = LaurentPoly.zero()
        for j, g in enumerate(elems):
            if inv[i][j]:
                y = y + inv[i][j] * LaurentPoly.monomial(xs[g])
        duals[f] = y
    data = SteinbergData(datum, tuple(elems), xs, gram, inv, duals, datum.cartan_digest)
    check_duality(data)
    return data


def check_duality(data: SteinbergData) -> None:
    """``(e^{x_f}, y_g) == delta_{f,g}``; raises on the first failure."""
    datum = data.datum
    one = LaurentPoly.one(datum.rank)
    for f in data.elements:
        xf = data.x(f)
        for g in data.elements:
            want = one if f == g else LaurentPoly.zero()
            if pairing(datum, xf, data.duals[g]) != want:
                raise InvariantViolation(f"dual basis check failed at ({f}, {g})")


def _cache_dir(cache_dir) -> Path | None:
    if cache_dir is False:
        return None
    if cache_dir is None:
        env = os.environ.get(CACHE_ENV)
        if not env:
            return None
        cache_dir = env
    return Path(cache_dir)


def _load_cached(datum: RootDatum, path: Path) -> SteinbergData | None:
    try:
        doc = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if doc.get("format") != CACHE_FORMAT or doc.get("digest") != datum.cartan_digest:
        return None
    group = weyl_group(datum)
    try:
        elems = [group.from_word(w) for w in doc["elements"]]
        if elems != group.elements:
            return None
        r = datum.rank
        xs = {w: Weight(x) for w, x in zip(elems, doc["x"])}
        gram = [[from_text(t, r) for t in row] for row in doc["gram"]]
        inv = [[from_text(t, r) for t in row] for row in doc["gram_inverse"]]
        duals = {w: from_text(t, r) for w, t in zip(elems, doc["duals"])}
    except Exception:  # a damaged cache is simply rebuilt
        log.warning("ignoring unreadable cache file %s", path)
        return None
    if xs != x_basis(datum):
        return None
    return SteinbergData(datum, tuple(elems), xs, gram, inv, duals, datum.cartan_digest)


def _store(data: SteinbergData, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(data.to_json(), fh, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


_memory: dict[tuple, SteinbergData] = {}


def steinberg_data(datum: RootDatum, cache_dir=None) -> SteinbergData:
    """Build (or fetch) the Steinberg data of ``datum``.

    Only the Cartan matrix matters, so data are shared between data that
    differ in the sublattice.  ``cache_dir=None`` consults the
    ``LOWCELL_CACHE_DIR`` environment variable; ``False`` disables the disk
    cache.  The cache is advisory: anything unreadable is rebuilt.
    """
    key = datum.cartan
    got = _memory.get(key)
    if got is not None:
        if got.datum is not datum:
            got = SteinbergData(datum, got.elements, got.x_weights, got.gram,
                                got.gram_inverse, got.duals, got.datum_digest)
        return got
    directory = _cache_dir(cache_dir)
    path = directory / f"steinberg-{datum.cartan_digest}.json" if directory else None
    data = _load_cached(datum, path) if path and path.exists() else None
    if data is None:
        data = _build(datum)
        if path is not None:
            _store(data, path)
    _memory[key] = data
    return data


def expand(data: SteinbergData, p: LaurentPoly) -> dict[WeylElement, LaurentPoly]:
    """Coefficients ``c_f = (p, y_f)`` with ``p = sum_f c_f e^{x_f}``."""
    datum = data.datum
    group = weyl_group(datum)
    out = {}
    for f in data.elements:
        c = pairing(datum, p, data.duals[f])
        if not is_invariant(group, c):
            raise InvariantCheckFailed(f"expansion coefficient at {f} is not invariant")
        out[f] = c
    return out


def recombine(data: SteinbergData, coeffs: dict[WeylElement, LaurentPoly]) -> LaurentPoly:
    out = LaurentPoly.zero()
    for f, c in coeffs.items():
        if c:
            out = out + c * data.x(f)
    return out


def dual_expand(data: SteinbergData, p: LaurentPoly) -> dict[WeylElement, LaurentPoly]:
    """Coefficients ``(p, e^{x_f})`` of ``p`` on the dual family ``{y_f}``."""
    return {f: pairing(data.datum, p, data.x(f)) for f in data.elements}


def dual_recombine(data: SteinbergData, coeffs: dict[WeylElement, LaurentPoly]) -> LaurentPoly:
    out = LaurentPoly.zero()
    for f, c in coeffs.items():
        if c:
            out = out + c * data.duals[f]
    return out


__all__ = [
    "SteinbergData", "x_basis", "gram_matrix", "invert_matrix", "dual_basis",
    "steinberg_data", "expand", "recombine", "dual_expand", "dual_recombine",
    "check_duality", "NotDivisible",
]
