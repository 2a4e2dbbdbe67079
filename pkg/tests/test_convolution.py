import random

import pytest

from conftest import random_poly
from lowcell.characters import pairing, weyl_character
from lowcell.convolution import (
    CellElement,
    KClass,
    cell_elements,
    convolve,
    from_pairs,
    g_basis,
    identity_class,
    is_in_KG,
    normalize,
    omega_criterion,
    restrict,
    sigma,
)
from lowcell.errors import InputError
from lowcell.group_algebra import LaurentPoly
from lowcell.root_datum import standard_datum
from lowcell.steinberg import steinberg_data

P = LaurentPoly


def random_class(data, rng):
    return KClass(data, {f: random_poly(rng, data.datum.rank, terms=2, spread=1)
                         for f in data.elements if rng.random() < 0.6})


def test_normalize_examples(a1_data):
    e, s = a1_data.elements
    one = P.one(1)
    assert normalize(a1_data, one, one).coeffs == {e: one}
    assert normalize(a1_data, one, P.monomial((-1,))).coeffs == {s: one}
    k = normalize(a1_data, one, P.monomial((1,)))
    assert k.coeffs == {e: weyl_character(a1_data.datum, (1,)), s: P.constant(-1, 1)}
    assert normalize(a1_data, P.zero(), one) == KClass(a1_data, {})


def test_convolve_examples(a1_data):
    e, s = a1_data.elements
    one = P.one(1)
    unit = normalize(a1_data, one, one)
    assert convolve(unit, unit) == unit
    ys = KClass(a1_data, {s: a1_data.duals[s]})
    assert ys * ys == ys


def test_identity_class_a1(a1_data):
    e, s = a1_data.elements
    ident = identity_class(a1_data)
    expected = from_pairs(a1_data, [(P.one(1), P.one(1)),
                                    (-P.monomial((-1,)), P.monomial((-1,)))])
    assert ident == expected
    assert restrict(ident, e) == P({(0,): 1, (-2,): -1})
    assert restrict(ident, s) == 0


def test_restrict_examples(a1_data):
    e, s = a1_data.elements
    assert restrict(normalize(a1_data, P.one(1), P.one(1)), s) == 1
    assert restrict(normalize(a1_data, P.one(1), P.monomial((-1,))), s) == P.monomial((1,))


def test_is_in_kg_examples(a1, a1_data):
    assert is_in_KG(a1, identity_class(a1_data))
    assert not is_in_KG(a1, normalize(a1_data, P.one(1), P.monomial((-1,))))
    sc = standard_datum("A1")
    assert is_in_KG(sc, normalize(a1_data, P.one(1), P.monomial((-1,))))


@pytest.mark.parametrize("typ,sub", [("A1", "root"), ("A2", "root"), ("B2", "root"), ("A3", "root"),
                                     ("A2", "weight")])
def test_identity_in_kg(typ, sub):
    d = standard_datum(typ, sub)
    assert is_in_KG(d, identity_class(steinberg_data(d, cache_dir=False)))


@pytest.mark.parametrize("typ", ["A1", "A2", "B2"])
def test_convolution_of_pure_tensors(typ):
    # (a (x) b) * (c (x) d) = (b, c) a (x) d
    d = standard_datum(typ)
    data = steinberg_data(d, cache_dir=False)
    rng = random.Random(11)
    for _ in range(8):
        a, b, c, e = (random_poly(rng, d.rank, terms=2, spread=1) for _ in range(4))
        lhs = convolve(normalize(data, a, b), normalize(data, c, e))
        assert lhs == normalize(data, pairing(d, b, c) * a, e)


@pytest.mark.parametrize("typ", ["A1", "A2"])
def test_convolution_associative_with_unit(typ):
    d = standard_datum(typ)
    data = steinberg_data(d, cache_dir=False)
    rng = random.Random(5)
    ident = identity_class(data)
    for _ in range(6):
        x, y, z = (random_class(data, rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert ident * x == x == x * ident
        assert x * (y + z) == x * y + x * z


def test_sigma_examples(a1_data):
    e, s = a1_data.elements
    w = P.monomial((-1,))
    assert sigma(a1_data, CellElement(e, (0,), e)).coeffs == {e: P.one(1)}
    assert sigma(a1_data, CellElement(s, (0,), s)).coeffs == {s: -w}
    assert sigma(a1_data, CellElement(e, (1,), s)).coeffs == {s: weyl_character(a1_data.datum, (1,))}


def test_cell_element_rejects_non_dominant(a1_data):
    e, _ = a1_data.elements
    with pytest.raises(InputError):
        CellElement(e, (-1,), e)


def test_g_basis_examples(a1, a1_data):
    e, s = a1_data.elements
    got = g_basis(a1, 1)
    assert got == sorted([CellElement(e, (0,), e), CellElement(s, (0,), s),
                          CellElement(e, (1,), s), CellElement(s, (1,), e)])
    sc = standard_datum("A2")
    data = steinberg_data(sc, cache_dir=False)
    assert len(g_basis(sc, 1)) == len(cell_elements(data, 1)) == 36 * 3


@pytest.mark.parametrize("typ", ["A1", "A2", "B2"])
def test_omega_criterion_matches_restrictions(typ):
    d = standard_datum(typ, "root")
    data = steinberg_data(d, cache_dir=False)
    for z in cell_elements(data, 1):
        assert omega_criterion(d, data, z.f, z.chi, z.f2) == is_in_KG(d, sigma(data, z))


def test_kclass_arithmetic(a1_data):
    rng = random.Random(2)
    x, y = random_class(a1_data, rng), random_class(a1_data, rng)
    assert x - x == KClass(a1_data, {})
    assert (x + y) - y == x
    assert x.scale(2) == x + x
    assert not KClass(a1_data, {})
    assert len(x.recombine()) == len(x.coeffs)
