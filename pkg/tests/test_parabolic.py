from itertools import combinations

import pytest

from lowcell.characters import weyl_character
from lowcell.errors import IncompatibleI, InputError, NotDominantForLevi
from lowcell.group_algebra import LaurentPoly
from lowcell.parabolic import (
    coset_leq,
    double_cosets,
    hasse_edges,
    levi_character,
    levi_positive_roots,
    parabolic_subgroup,
)
from lowcell.root_datum import standard_datum
from lowcell.weyl_group import bruhat_leq, weyl_group


def test_a2_i1():
    d = standard_datum("A2")
    cosets = double_cosets(d, {1})
    assert [len(c) for c in cosets] == [2, 4]
    assert [c.min_rep.name() for c in cosets] == ["e", "s2"]
    assert coset_leq(cosets[0], cosets[1]) and not coset_leq(cosets[1], cosets[0])
    assert hasse_edges(cosets) == [(0, 1)]


@pytest.mark.parametrize("typ", ["A2", "B2", "G2", "A3", "B3"])
def test_trivial_and_full_I(typ):
    d = standard_datum(typ)
    group = weyl_group(d)
    singles = double_cosets(d, set())
    assert len(singles) == len(group.elements)
    everything = double_cosets(d, range(1, d.rank + 1))
    assert len(everything) == 1 and everything[0].min_rep == group.identity


@pytest.mark.parametrize("typ", ["A3", "B3", "C3"])
def test_cosets_partition_and_min_reps(typ):
    d = standard_datum(typ)
    group = weyl_group(d)
    for r in range(d.rank + 1):
        for I in combinations(range(1, d.rank + 1), r):
            cosets = double_cosets(d, I)
            seen = [w for c in cosets for w in c.elements]
            assert len(seen) == len(set(seen)) == len(group.elements)
            wi = parabolic_subgroup(d, I)
            for c in cosets:
                u = c.min_rep
                # minimal in its double coset: no descent on either side inside I
                for i in I:
                    s = group.s(i)
                    assert (s * u).length > u.length and (u * s).length > u.length
                assert {a * u * b for a in wi for b in wi} == set(c.elements)


def test_empty_I_is_bruhat_order():
    d = standard_datum("A2")
    cosets = double_cosets(d, [])
    for c in cosets:
        assert c in cosets
        for c2 in cosets:
            assert coset_leq(c, c2) == bruhat_leq(c.min_rep, c2.min_rep)


def test_incompatible_and_bad_I():
    d = standard_datum("A2")
    with pytest.raises(IncompatibleI):
        coset_leq(double_cosets(d, [1])[0], double_cosets(d, [2])[0])
    with pytest.raises(InputError):
        double_cosets(d, [3])


def test_levi_character_examples():
    d = standard_datum("A2")
    group = weyl_group(d)
    e = group.identity
    assert levi_character(d, [], e, (2, -1)) == LaurentPoly.monomial((2, -1))
    assert levi_character(d, [1], e, (0, 0)) == 1
    assert levi_character(d, [1], e, (1, 0)) == LaurentPoly({(1, 0): 1, (-1, 1): 1})
    # s2 moves alpha_1 to alpha_1 + alpha_2, leaving no common root
    assert levi_positive_roots(d, [1], group.s(2)) == []
    with pytest.raises(NotDominantForLevi):
        levi_character(d, [1], e, (-1, 3))


def test_levi_character_full_I_is_weyl_character():
    d = standard_datum("B2")
    group = weyl_group(d)
    for chi in [(1, 0), (0, 1), (1, 1)]:
        assert levi_character(d, [1, 2], group.identity, chi) == weyl_character(d, chi)


@pytest.mark.parametrize("typ", ["A3", "B3"])
def test_min_rep_below_coset_and_order_axioms(typ):
    d = standard_datum(typ)
    for I in [(1,), (2,), (1, 3), (2, 3)]:
        cosets = double_cosets(d, I)
        for c in cosets:
            assert all(bruhat_leq(c.min_rep, w) for w in c.elements)
        for a in cosets:
            assert coset_leq(a, a)
            for b in cosets:
                if a is not b and coset_leq(a, b):
                    assert not coset_leq(b, a)
                    assert a.min_rep.length < b.min_rep.length
                    for c in cosets:
                        if coset_leq(b, c):
                            assert coset_leq(a, c)


@pytest.mark.parametrize("typ", ["A3", "B3", "C3"])
def test_levi_characters_positive_with_top_term(typ):
    d = standard_datum(typ)
    group = weyl_group(d)
    for I in [(1,), (1, 2), (2, 3)]:
        for w in group.elements[::7]:
            roots = levi_positive_roots(d, I, w)
            for chi in [(1, 0, 0), (0, 1, 0), (1, 1, 1)]:
                if any(b.pair(chi) < 0 for b in roots):
                    continue
                ch = levi_character(d, I, w, chi)
                assert all(c > 0 for c in ch.terms.values())
                assert ch.coeff(chi) == 1
