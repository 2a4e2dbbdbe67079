from itertools import combinations

import pytest

from lowcell.lattice import det
from lowcell.root_datum import Weight, standard_datum
from lowcell.weyl_group import (
    ExtAffineElement,
    bruhat_leq,
    ext_length,
    inversion_count,
    is_left_descent,
    left_descents,
    longest_element,
    weyl_group,
)


def subword_interval(group, v):
    """Everything reachable as a product of a subword of one reduced word of ``v``."""
    word = v.word
    out = set()
    for r in range(len(word) + 1):
        for idx in combinations(range(len(word)), r):
            out.add(group.from_word([word[i] for i in idx]))
    return out


@pytest.mark.parametrize("typ", ["A2", "B2", "G2", "A3"])
def test_bruhat_matches_subword_oracle(typ):
    group = weyl_group(standard_datum(typ))
    for v in group:
        below = subword_interval(group, v)
        for u in group:
            assert bruhat_leq(u, v) == (u in below)


@pytest.mark.parametrize("typ", ["A2", "B2", "G2", "A3", "B3"])
def test_length_equals_inversions(typ):
    group = weyl_group(standard_datum(typ))
    for w in group:
        assert w.length == inversion_count(w) == len(w.word)
        assert w.inverse().length == w.length
        assert w.sign == det(w.matrix) == (-1) ** w.length


def test_elements_sorted_and_words_lex_least():
    group = weyl_group(standard_datum("A2"))
    assert [w.name() for w in group] == ["e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"]
    assert group.from_word([2, 1, 2]) == group.longest


def test_longest_element():
    d = standard_datum("B2")
    w0 = longest_element(d)
    assert w0.length == 4 == len(d.positive_roots)
    assert w0.act(d.rho) == -d.rho
    assert left_descents(w0) == [1, 2]


def test_descents():
    group = weyl_group(standard_datum("A2"))
    s1, s2 = group.s(1), group.s(2)
    w = s1 * s2
    assert is_left_descent(w, 1) and not is_left_descent(w, 2)
    for v in group:
        for k in (1, 2):
            assert is_left_descent(v, k) == ((group.s(k) * v).length < v.length)


def test_action_matches_reflection_formula():
    d = standard_datum("G2")
    group = weyl_group(d)
    lam = Weight((3, -2))
    for k, alpha in enumerate(d.simple_roots, start=1):
        assert group.s(k).act(lam) == lam - alpha * lam[k - 1]


def test_group_axioms():
    group = weyl_group(standard_datum("B2"))
    e = group.identity
    for u in group:
        assert u * u.inverse() == e
        for v in group:
            assert (u * v).act((1, 2)) == u.act(v.act((1, 2)))


def test_ext_length_examples():
    d = standard_datum("A2")
    group = weyl_group(d)
    t_rho = ExtAffineElement.translation_by(group, d.rho)
    assert ext_length(t_rho) == 4
    s1 = ExtAffineElement.finite_part(group.s(1))
    assert ext_length(s1 * t_rho) == 5
    for w in group:
        assert ext_length(ExtAffineElement.finite_part(w)) == w.length


def test_ext_length_identities():
    d = standard_datum("B2")
    group = weyl_group(d)
    lams = [Weight(x) for x in [(0, 0), (1, 0), (0, 1), (-1, 2), (2, -3)]]
    elems = [ExtAffineElement(lam, w) for lam in lams for w in group]
    for x in elems:
        assert ext_length(x) == ext_length(x.inverse())
        translation = ExtAffineElement.translation_by(group, x.translation)
        if x.finite == group.identity:
            # l(t_lambda) = sum over positive roots of |<lambda, beta^vee>|
            assert ext_length(translation) == sum(abs(b.pair(x.translation)) for b in d.positive_roots)
    for x in elems[::5]:
        for y in elems[::7]:
            assert ext_length(x * y) <= ext_length(x) + ext_length(y)


def test_length_zero_elements_of_a1():
    d = standard_datum("A1")
    group = weyl_group(d)
    omega = ExtAffineElement(Weight((1,)), group.s(1))
    assert ext_length(omega) == 0
    assert ext_length(omega * omega) == 0
