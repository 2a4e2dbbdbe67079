import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_poly
from lowcell.characters import (
    antisymmetrize,
    decompose_character,
    pairing,
    pairing_checked,
    tensor_decompose,
    weyl_character,
    weyl_denominator,
    weyl_denominator_product,
    weyl_dim,
)
from lowcell.errors import InputError, NegativeMultiplicity
from lowcell.group_algebra import LaurentPoly, is_invariant, omega_degree, weyl_act
from lowcell.root_datum import Weight, dominant_weights_up_to, standard_datum
from lowcell.weyl_group import weyl_group

TYPES = ["A1", "A2", "B2", "G2", "A3"]


def klimyk(datum, lam, mu):
    """Brauer-Klimyk: reflect each ``lam + nu + rho`` into the dominant chamber."""
    group = weyl_group(datum)
    rho = datum.rho
    out = {}
    for nu, m in weyl_character(datum, mu).terms.items():
        v = Weight(lam) + Weight(nu) + rho
        for w in group:
            u = w.act(v)
            if all(x >= 0 for x in u):
                break
        if any(x == 0 for x in u):
            continue  # on a wall: contributes nothing
        key = u - rho
        out[key] = out.get(key, 0) + w.sign * m
    return {k: v for k, v in out.items() if v}


def test_character_examples():
    a1, a2 = standard_datum("A1"), standard_datum("A2")
    assert weyl_character(a1, (1,)) == LaurentPoly({(1,): 1, (-1,): 1})
    assert weyl_character(a2, (0, 0)) == 1
    assert weyl_character(a2, (1, 0)) == LaurentPoly({(1, 0): 1, (-1, 1): 1, (0, -1): 1})
    assert weyl_dim(a2, (1, 1)) == 8
    for m in range(6):
        assert weyl_dim(a1, (m,)) == m + 1 == weyl_character(a1, (m,)).coefficient_sum()


def test_antisymmetrize_examples():
    a1, a2 = standard_datum("A1"), standard_datum("A2")
    assert antisymmetrize(a1, (1,)) == LaurentPoly({(1,): 1, (-1,): -1})
    assert antisymmetrize(a1, (0,)) == 0
    j = antisymmetrize(a2, a2.rho)
    assert len(j) == 6
    for w in weyl_group(a2):
        assert j.coeff(w.act(a2.rho)) == w.sign
        assert antisymmetrize(a2, w.act((2, 1))) == antisymmetrize(a2, (2, 1)) * w.sign


@pytest.mark.parametrize("typ", TYPES + ["B3", "C3"])
def test_denominator_product_form(typ):
    d = standard_datum(typ)
    delta = weyl_denominator(d)
    assert delta == weyl_denominator_product(d)
    root = standard_datum(typ, "root")
    assert omega_degree(root, delta) == root.coset_of(d.rho)


@pytest.mark.parametrize("typ", TYPES)
def test_characters_invariant_with_correct_dimension(typ):
    d = standard_datum(typ)
    group = weyl_group(d)
    for chi in dominant_weights_up_to(d, 3):
        ch = weyl_character(d, chi)
        assert is_invariant(group, ch)
        assert ch.coeff(chi) == 1
        assert all(c > 0 for c in ch.terms.values())
        assert ch.coefficient_sum() == weyl_dim(d, chi)
        assert max(ch.terms, key=d.height_key) == tuple(chi)


def test_non_dominant_rejected():
    with pytest.raises(InputError):
        weyl_character(standard_datum("A2"), (-1, 0))


def test_tensor_examples():
    a1, a2 = standard_datum("A1"), standard_datum("A2")
    assert tensor_decompose(a1, (1,), (1,)).parts == {(0,): 1, (2,): 1}
    assert tensor_decompose(a2, (1, 0), (0, 1)).parts == {(0, 0): 1, (1, 1): 1}
    assert tensor_decompose(a2, (2, 1), (0, 0)).parts == {(2, 1): 1}


@pytest.mark.parametrize("typ", TYPES)
def test_tensor_matches_klimyk(typ):
    d = standard_datum(typ)
    ws = dominant_weights_up_to(d, 2)
    for lam in ws:
        for mu in ws:
            dec = tensor_decompose(d, lam, mu)
            assert dec.parts == klimyk(d, lam, mu)
            assert dec.dimension(d) == weyl_dim(d, lam) * weyl_dim(d, mu)


def test_lex_order_would_strip_a_non_highest_weight():
    # V(2 omega_2) contains omega_1, which is lex-larger than (0, 2)
    d = standard_datum("A2")
    ch = weyl_character(d, (0, 2))
    assert ch.coeff((1, 0)) == 1 and (1, 0) > (0, 2)
    assert decompose_character(d, ch).parts == {(0, 2): 1}


def test_decompose_rejects_virtual_characters():
    d = standard_datum("A1")
    with pytest.raises(NegativeMultiplicity):
        decompose_character(d, weyl_character(d, (1,)) - weyl_character(d, (3,)))


def test_pairing_examples():
    d = standard_datum("A1")
    one = LaurentPoly.one(1)
    m = LaurentPoly.monomial((-1,))
    assert pairing(d, one, one) == 1
    assert pairing(d, one, m) == 0
    assert pairing(d, m, m) == -1


@pytest.mark.parametrize("typ", ["A1", "A2", "B2"])
def test_pairing_symmetric_and_invariant_bilinear(typ):
    d = standard_datum(typ)
    rng = random.Random(7)
    group = weyl_group(d)
    for _ in range(15):
        p, q, r = (random_poly(rng, d.rank) for _ in range(3))
        c = weyl_character(d, tuple(rng.randint(0, 1) for _ in range(d.rank)))
        assert pairing(d, p, q) == pairing(d, q, p)
        assert pairing(d, p + r, q) == pairing(d, p, q) + pairing(d, r, q)
        assert pairing(d, c * p, q) == c * pairing(d, p, q)
        assert is_invariant(group, pairing_checked(d, p, q).poly)


@given(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.tuples(st.integers(0, 3), st.integers(0, 3)))
def test_dual_character_and_pairing_with_one(lam, mu):
    d = standard_datum("A2")
    dual = weyl_character(d, mu).map_exponents(lambda e: tuple(-x for x in e))
    w0 = weyl_group(d).longest
    assert dual == weyl_character(d, Weight(w0.act(mu)) * -1)
    got = pairing(d, weyl_character(d, lam), LaurentPoly.one(2))
    assert got == weyl_character(d, lam)


def test_weyl_act_on_characters_is_trivial():
    d = standard_datum("B2")
    ch = weyl_character(d, (1, 1))
    for w in weyl_group(d):
        assert weyl_act(w, ch) == ch


def pairing_by_division(d, p, q):
    from lowcell.characters import alternate
    from lowcell.group_algebra import exact_div

    return exact_div(alternate(d, (p * q).shift(d.rho)), weyl_denominator(d))


@pytest.mark.parametrize("typ", ["A1", "A2", "B2", "G2", "A3"])
def test_pairing_matches_division_oracle(typ):
    d = standard_datum(typ)
    rng = random.Random(19)
    for _ in range(25):
        p, q = random_poly(rng, d.rank, spread=3), random_poly(rng, d.rank, spread=3)
        assert pairing(d, p, q) == pairing_by_division(d, p, q)


def test_straighten():
    from lowcell.characters import straighten

    d = standard_datum("A2")
    assert straighten(d, (1, 1)) == ((1, 1), 1)
    assert straighten(d, (-1, 2)) == ((1, 1), -1)
    assert straighten(d, (0, 3)) is None
    for w in weyl_group(d):
        assert straighten(d, w.act((2, 1))) == ((2, 1), w.sign)
