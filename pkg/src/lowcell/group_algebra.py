"""The group algebra Z[X~] as sparse Laurent polynomials with integer coefficients.

A :class:`LaurentPoly` is a finite map from exponent tuples (weights in
fundamental-weight coordinates) to nonzero ints.  The term order is the
lexicographic order on exponent tuples, which is compatible with addition
of exponents, so leading terms multiply.
"""

from __future__ import annotations

import heapq
import re
from typing import Iterable, Mapping, Sequence

from .errors import InputError, NotDivisible


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        clean: dict[tuple[int, ...], int] = {}
        for e, c in items:
            if c:
                e = tuple(e)
                c = clean.get(e, 0) + int(c)
                if c:
                    clean[e] = c
                else:
                    del clean[e]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # trusted constructor: no zero coefficients, tuple keys
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        return cls._raw({tuple(exponent): coeff} if coeff else {})

    @classmethod
    def constant(cls, c: int, rank: int) -> "LaurentPoly":
        return cls.monomial((0,) * rank, c)

    @classmethod
    def one(cls, rank: int) -> "LaurentPoly":
        return cls.constant(1, rank)

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return self._terms

    def items(self):
        """Terms in descending lexicographic order of exponents."""
        return sorted(self._terms.items(), reverse=True)

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self._terms, reverse=True)

    def coeff(self, exponent: Sequence[int]) -> int:
        return self._terms.get(tuple(exponent), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def leading(self) -> tuple[tuple[int, ...], int]:
        e = max(self._terms)
        return e, self._terms[e]

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            if other == 0:
                return not self._terms
            return (len(self._terms) == 1 and
                    all(not any(e) and c == other for e, c in self._terms.items()))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                del out[e]
        return LaurentPoly._raw(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) - c
            if v:
                out[e] = v
            else:
                del out[e]
        return LaurentPoly._raw(out)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly._raw({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[tuple[int, ...], int] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def shift(self, exponent: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial ``e^exponent``."""
        return LaurentPoly._raw({tuple(x + y for x, y in zip(e, exponent)): c
                                 for e, c in self._terms.items()})

    def map_exponents(self, fn) -> "LaurentPoly":
        """Apply an injective map to exponents (e.g. a Weyl group element)."""
        return LaurentPoly._raw({tuple(fn(e)): c for e, c in self._terms.items()})

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"LaurentPoly({to_text(self)!r})"


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def weyl_act(w, p: LaurentPoly) -> LaurentPoly:
    """``w(p)``: act on every exponent by the Weyl group element ``w``."""
    m = w.matrix
    return LaurentPoly._raw({
        tuple(sum(x * y for x, y in zip(row, e)) for row in m): c
        for e, c in p.terms.items()
    })


def _box(p: dict) -> tuple[list[int], list[int]]:
    keys = list(p)
    r = len(keys[0])
    return ([min(k[i] for k in keys) for i in range(r)],
            [max(k[i] for k in keys) for i in range(r)])


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """The quotient ``r`` with ``q * r == p``, or :class:`NotDivisible`.

    Leading-term elimination in lexicographic order.  A true quotient has its
    exponents inside the box ``[min(p) - min(q), max(p) - max(q)]``
    coordinatewise, which bounds the loop when no quotient exists.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero()
    qt = q.terms
    if len(qt) == 1:
        (eq, cq), = qt.items()
        out = {}
        for e, c in p.terms.items():
            if c % cq:
                raise NotDivisible(f"coefficient {c} not divisible by {cq}")
            out[tuple(x - y for x, y in zip(e, eq))] = c // cq
        return LaurentPoly._raw(out)
    q_lead = max(qt)
    q_lc = qt[q_lead]
    q_rest = [(e, c) for e, c in qt.items() if e != q_lead]
    (pmin, pmax), (qmin, qmax) = _box(p.terms), _box(qt)
    lo = [a - b for a, b in zip(pmin, qmin)]
    hi = [a - b for a, b in zip(pmax, qmax)]
    if any(a > b for a, b in zip(lo, hi)):
        raise NotDivisible("Newton box of the quotient is empty")

    rem = dict(p.terms)
    heap = [tuple(-x for x in e) for e in rem]
    heapq.heapify(heap)
    quot: dict[tuple[int, ...], int] = {}
    while rem:
        neg = heapq.heappop(heap)
        e = tuple(-x for x in neg)
        c = rem.get(e)
        if c is None:
            continue  # stale heap entry
        t = tuple(x - y for x, y in zip(e, q_lead))
        if any(x < a or x > b for x, a, b in zip(t, lo, hi)):
            raise NotDivisible(f"quotient exponent {list(t)} escapes the Newton box")
        if c % q_lc:
            raise NotDivisible(f"coefficient {c} not divisible by {q_lc}")
        k = c // q_lc
        quot[t] = k
        del rem[e]
        for eq, cq in q_rest:
            f = tuple(x + y for x, y in zip(t, eq))
            v = rem.get(f)
            if v is None:
                rem[f] = -k * cq
                heapq.heappush(heap, tuple(-x for x in f))
            else:
                v -= k * cq
                if v:
                    rem[f] = v
                else:
                    del rem[f]
    return LaurentPoly._raw(quot)


def omega_components(datum, p: LaurentPoly) -> dict:
    """Split ``p`` by the coset of each exponent in ``X~/X``.

    Returns ``{OmegaElement: LaurentPoly}`` with only nonzero components.
    """
    parts: dict = {}
    for e, c in p.terms.items():
        parts.setdefault(datum.coset_of(e), {})[e] = c
    return {k: LaurentPoly._raw(v) for k, v in sorted(parts.items())}


def omega_degree(datum, p: LaurentPoly):
    """The single coset supporting ``p``, or ``None`` if ``p`` is not homogeneous.

    The zero polynomial is homogeneous of every degree; ``None`` is returned.
    """
    parts = omega_components(datum, p)
    if len(parts) != 1:
        return None
    return next(iter(parts))


def is_invariant(group, p: LaurentPoly) -> bool:
    """``w(p) == p`` for every generator (hence every element) of W0."""
    return all(weyl_act(s, p) == p for s in group.simple)


class InvariantPoly:
    """A W0-invariant Laurent polynomial, optionally checked on construction."""

    __slots__ = ("poly", "verified")

    def __init__(self, poly: LaurentPoly, group=None):
        self.poly = poly
        self.verified = False
        if group is not None:
            if not is_invariant(group, poly):
                from .errors import InvariantCheckFailed
                raise InvariantCheckFailed(f"{to_text(poly)} is not W0-invariant")
            self.verified = True

    def __eq__(self, other):
        if isinstance(other, InvariantPoly):
            return self.poly == other.poly
        return self.poly == other

    def __hash__(self):
        return hash(self.poly)

    def __repr__(self):
        return f"InvariantPoly({to_text(self.poly)!r})"


# -- canonical text form -------------------------------------------------

def _fmt_exp(e) -> str:
    return "e[" + ",".join(str(x) for x in e) + "]"


def to_text(p: LaurentPoly) -> str:
    """``c*e[a1,...,ar]`` terms, largest exponent first, joined by `` + ``/`` - ``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, (e, c) in enumerate(p.items()):
        if i == 0:
            parts.append(f"{c}*{_fmt_exp(e)}")
        elif c < 0:
            parts.append(f"- {-c}*{_fmt_exp(e)}")
        else:
            parts.append(f"+ {c}*{_fmt_exp(e)}")
    return " ".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*(\d+)?\s*\*?\s*e\s*\[\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\]\s*")


def from_text(text: str, rank: int | None = None) -> LaurentPoly:
    """Inverse of :func:`to_text`; also accepts ``e[...]`` without a coefficient."""
    s = text.strip()
    if s in ("0", ""):
        return LaurentPoly.zero()
    terms: dict[tuple[int, ...], int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise InputError(f"cannot parse polynomial near {s[pos:pos + 20]!r}")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(1) is None and pos > 0:
            raise InputError(f"missing operator near {s[pos:pos + 20]!r}")
        c = sign * int(m.group(2) or 1)
        e = tuple(int(x) for x in m.group(3).split(",")) if m.group(3) else ()
        if rank is not None and len(e) != rank:
            raise InputError(f"exponent {list(e)} has the wrong length (rank {rank})")
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
    return LaurentPoly(terms)
