import collections
import random

import pytest

from braidtk.braid_core import (BraidWord, Permutation, closure_component_count, enumerate_ncycle_braids,
                                staircase, word_to_permutation, writhe)
from braidtk.garside import (GarsideError, NormalForm, SimpleFactor, SummitSetCapError, are_conjugate,
                             complement, conjugate_by_simple, cycling, decycling, delta, equal_in_group,
                             find_conjugator, left_complement, normal_form, summit_element, summit_set,
                             tau)
from braidtk.invariants import burau_char_poly
from braidtk.rewrite import random_rewrite

from fixtures import BETA, GAMMA, RandomBraidStream, random_conjugator


def sigma(n, i):
    return SimpleFactor(word_to_permutation(BraidWord(n, [i])))


def test_delta():
    assert delta(2).word() == BraidWord(2, [1])
    assert delta(3).word() == BraidWord(3, [1, 2, 1])
    assert delta(6).crossings == 15
    assert delta(4).is_delta()


def test_tau():
    assert tau(sigma(6, 1)) == sigma(6, 5)
    assert tau(delta(5)) == delta(5)
    for perm, _, _ in enumerate_ncycle_braids(5):
        f = SimpleFactor(perm)
        assert tau(tau(f)) == f


def test_complement():
    assert complement(delta(4)).is_identity()
    assert complement(SimpleFactor(Permutation.identity(4))) == delta(4)
    assert complement(sigma(3, 1)).word() == BraidWord(3, [2, 1])
    assert left_complement(sigma(3, 1)).word() == BraidWord(3, [1, 2])

    for perm, word, _ in enumerate_ncycle_braids(5):
        f = SimpleFactor(perm)
        assert equal_in_group(word + complement(f).word(), delta(5).word())
        assert equal_in_group(left_complement(f).word() + word, delta(5).word())
        assert complement(f).crossings == 10 - f.crossings


def test_normal_form():
    nf = normal_form(BraidWord(3, [1, 2, 1]))
    assert (nf.inf, nf.canonical_length) == (1, 0)

    nf = normal_form(BraidWord(2, [1, 1]))
    assert (nf.inf, nf.canonical_length) == (2, 0)

    nf = normal_form(BraidWord(3, [1, 2, 1, 2]))
    assert nf.inf == 1
    assert nf.factors == (sigma(3, 2),)
    assert nf.sup == 2


def test_normal_form__negative_letters():
    nf = normal_form(BraidWord(3, [-1]))
    assert nf.inf == -1
    assert nf.factors == (left_complement(sigma(3, 1)),)

    assert normal_form(BraidWord(4, [1, -1, 3, -3])) == normal_form(BraidWord(4))
    assert normal_form(BraidWord(3, [-1, -2, -1])).inf == -1
    assert normal_form(BraidWord(3, [-1, -2, -1])).canonical_length == 0


def test_normal_form__is_left_weighted_and_group_equal():
    for w in RandomBraidStream(60, strands=5, max_length=14, seed=21):
        nf = normal_form(w)
        assert nf.is_left_weighted()
        assert normal_form(nf.to_braid_word()) == nf
        assert word_to_permutation(nf.to_braid_word()) == word_to_permutation(w)


def test_normal_form__relation_invariant():
    rng = random.Random(77)
    for w in RandomBraidStream(200, max_length=12, seed=77):
        rewritten = w
        for _ in range(4):
            rewritten = random_rewrite(rng, rewritten, allow_cancel=True)
        assert normal_form(rewritten) == normal_form(w)


def test_equal_in_group():
    assert equal_in_group(BraidWord(4, [1, 2, 3, 1, 2]), BraidWord(4, [2, 1, 3, 2, 3]))
    assert equal_in_group(BraidWord(3, [1, 2, 1]), BraidWord(3, [2, 1, 2]))
    assert not equal_in_group(BraidWord(3, [1]), BraidWord(3, [2]))

    with pytest.raises(GarsideError):
        equal_in_group(BraidWord(3, [1]), BraidWord(4, [1]))


def test_normal_form_json():
    nf = normal_form(BETA + GAMMA.inverse())
    assert NormalForm.from_json(nf.to_json()) == nf

    with pytest.raises(GarsideError):
        NormalForm.from_json({'n': 3, 'inf': 0, 'factors': [[1, 2, 3]]})


def test_cycling_and_decycling():
    nf = normal_form(BraidWord(3, [1, 2, 1, 2]))
    assert cycling(nf).inf == 1
    assert cycling(cycling(nf)).inf == 1

    power = normal_form(BraidWord(3, [1, 2, 1, 1, 2, 1]))
    assert cycling(power) == power
    assert decycling(power) == power

    for w in RandomBraidStream(50, strands=4, max_length=12, seed=8):
        nf = normal_form(w)
        assert cycling(nf).inf >= nf.inf
        assert decycling(nf).sup <= nf.sup


def test_conjugate_by_simple():
    nf = normal_form(BETA)
    s = sigma(6, 3)
    expected = normal_form(s.word().inverse() + BETA + s.word())
    assert conjugate_by_simple(nf, s) == expected


def test_summit_element_certificate():
    for w in RandomBraidStream(40, strands=4, max_length=10, seed=13):
        certificate = summit_element(w)
        u = certificate.conjugator
        assert normal_form(u.inverse() + w + u) == certificate.representative


def test_summit_set__unknot_class():
    for n in range(3, 7):
        summits = summit_set(staircase(n))
        unknots = {normal_form(word) for _, word, c in enumerate_ncycle_braids(n) if c == n - 1}

        assert unknots <= summits.elements()
        assert (summits.inf, summits.sup) == (0, 1)
        for nf in summits:
            u = summits.conjugator_to(nf)
            assert normal_form(u.inverse() + staircase(n) + u) == nf


def test_summit_set__delta_is_alone():
    summits = summit_set(delta(4).word())
    assert len(summits) == 1
    assert list(summits)[0] == normal_form(delta(4).word())


def test_summit_set__cap():
    with pytest.raises(SummitSetCapError):
        summit_set(staircase(6), summit_cap=3)


def test_summit_sets_of_the_pair_are_disjoint():
    summits_beta = summit_set(BETA)
    summits_gamma = summit_set(GAMMA)

    assert (summits_beta.inf, summits_beta.sup) == (summits_gamma.inf, summits_gamma.sup)
    assert summits_beta.isdisjoint(summits_gamma)


def test_are_conjugate():
    assert not are_conjugate(BETA, GAMMA)
    assert are_conjugate(BraidWord(3, [2, 1]), BraidWord(3, [1, 2]))

    with pytest.raises(GarsideError):
        are_conjugate(BraidWord(3, [1]), BraidWord(4, [1]))


def test_are_conjugate__random_conjugates():
    for w in RandomBraidStream(40, strands=4, max_length=8, seed=99):
        u = random_conjugator(4)
        conjugate = u.inverse() + w + u
        witness = find_conjugator(w, conjugate)

        assert witness is not None
        assert equal_in_group(witness.inverse() + w + witness, conjugate)
        assert writhe(w) == writhe(conjugate)
        assert closure_component_count(w) == closure_component_count(conjugate)


def _conjugacy_ball(w, radius):
    """
    Normal forms reachable from `w` by at most `radius` conjugations by a generator
    or its inverse.
    """
    seen = {normal_form(w)}
    frontier = [w]
    for _ in range(radius):
        following = []
        for word in frontier:
            for i in range(1, w.strands):
                for k in (i, -i):
                    u = BraidWord(w.strands, [k])
                    step = u.inverse() + word + u
                    nf = normal_form(step)
                    if nf not in seen:
                        seen.add(nf)
                        following.append(nf.to_braid_word())
        frontier = following
    return seen


def _signed_word(rng, strands, max_length=6):
    return BraidWord(strands, [rng.choice([1, -1]) * rng.randint(1, strands - 1)
                               for _ in range(rng.randint(0, max_length))])


def test_are_conjugate__agrees_with_breadth_first_search():
    ## b is reachable from a within five generator conjugations iff their balls of
    ## radius 3 and 2 meet
    rng = random.Random(62)
    pairs = []
    for strands in (3, 4):
        for _ in range(40):
            a = _signed_word(rng, strands)
            u = _signed_word(rng, strands, max_length=3)
            pairs.append((a, u.inverse() + a + u))
            pairs.append((a, _signed_word(rng, strands)))

    outer = {}
    inner = {}
    conjugate_pairs = 0
    for a, b in pairs:
        if a not in outer:
            outer[a] = _conjugacy_ball(a, 3)
        if b not in inner:
            inner[b] = _conjugacy_ball(b, 2)
        reachable = bool(outer[a] & inner[b])

        decided = are_conjugate(a, b)
        assert decided == are_conjugate(b, a)
        assert decided == reachable
        if decided:
            conjugate_pairs += 1
            assert writhe(a) == writhe(b)
            assert burau_char_poly(a) == burau_char_poly(b)

    assert conjugate_pairs >= 80


def test_are_conjugate__summit_invariants_do_not_decide():
    beta = summit_element(BETA)
    gamma = summit_element(GAMMA)

    assert (beta.summit_inf, beta.summit_sup) == (gamma.summit_inf, gamma.summit_sup)
    assert writhe(BETA) == writhe(GAMMA)
    assert word_to_permutation(BETA).cycle_type() == word_to_permutation(GAMMA).cycle_type()
    assert not are_conjugate(BETA, GAMMA)


def test_simple_factor_counts():
    counts = collections.Counter(SimpleFactor(p).crossings for p, _, _ in enumerate_ncycle_braids(4))
    assert counts == {3: 4, 5: 2}
