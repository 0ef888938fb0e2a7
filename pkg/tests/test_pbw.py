import random

import pytest

from planargca.algebra import C3, H, I, J, L, gen_key
from planargca.pbw import (
    MONOMIAL_ONE,
    EnvelopingElement,
    PBWMonomial,
    multiply,
    straighten,
)
from planargca.sampling import random_word
from planargca.scalars import ONE, sc


def mono(*factors):
    return PBWMonomial(tuple(factors))


def test_commuting_swap():
    # I and J commute, so the word I0 J1 just reorders.
    result = straighten([I(0), J(1)])
    assert result == EnvelopingElement.single(mono((J(1), 1), (I(0), 1)))


def test_single_bracket_step_ll():
    result = straighten([L(1), L(-1)])
    expected = EnvelopingElement(
        {mono((L(-1), 1), (L(1), 1)): ONE, mono((L(0), 1)): sc(-2)}
    )
    assert result == expected


def test_single_bracket_step_hh():
    result = straighten([H(1), H(-1)])
    expected = EnvelopingElement(
        {mono((H(-1), 1), (H(1), 1)): ONE, mono((C3, 1)): ONE}
    )
    assert result == expected


def test_empty_word_is_one():
    assert straighten([]) == EnvelopingElement.one()


def test_straighten_fixes_canonical_words():
    words = [
        [J(0), J(1), I(2), H(0), L(0), L(3)],
        [I(-1), I(-1), L(2)],
        [H(1)],
    ]
    for word in words:
        result = straighten(word)
        assert result == EnvelopingElement.single(PBWMonomial.from_word(word))


def test_multiply_unit():
    v = straighten([L(2), H(-1), I(0)])
    assert multiply(EnvelopingElement.one(), v) == v
    assert multiply(v, EnvelopingElement.one()) == v


def test_multiply_defining_relation():
    lhs = multiply(
        EnvelopingElement.single(mono((L(1), 1))),
        EnvelopingElement.single(mono((L(-1), 1))),
    )
    rhs = multiply(
        EnvelopingElement.single(mono((L(-1), 1))),
        EnvelopingElement.single(mono((L(1), 1))),
    )
    assert lhs - rhs == EnvelopingElement.single(mono((L(0), 1)), sc(-2))


def test_multiply_abelian_ij_block():
    product = multiply(
        EnvelopingElement.single(mono((I(0), 2))),
        EnvelopingElement.single(mono((J(0), 1))),
    )
    assert product == EnvelopingElement.single(mono((J(0), 1), (I(0), 2)))


def test_multiply_associative_sampled():
    rng = random.Random(23)
    for _ in range(12):
        u = straighten(random_word(rng, 2, 2))
        v = straighten(random_word(rng, 2, 2))
        w = straighten(random_word(rng, 2, 2))
        assert multiply(u, multiply(v, w)) == multiply(multiply(u, v), w)


def test_confluence_leftmost_vs_rightmost():
    rng = random.Random(47)
    for _ in range(60):
        word = random_word(rng, 5, 3)
        assert straighten(word, "leftmost") == straighten(word, "rightmost")


def test_filtration_bounds():
    rng = random.Random(91)
    for _ in range(40):
        word = random_word(rng, 5, 3)
        result = straighten(word)
        assert all(m.length() <= len(word) for m in result.terms)
        # The full-length component is the sorted word with coefficient 1:
        # swaps preserve the multiset and brackets strictly shorten.
        sorted_word = tuple(sorted(word, key=gen_key))
        top = PBWMonomial.from_word(sorted_word)
        assert result.terms.get(top, sc(0)) == ONE or not word


def test_monomial_validation():
    with pytest.raises(ValueError):
        PBWMonomial(((L(0), 0),))
    with pytest.raises(ValueError):
        PBWMonomial(((L(1), 1), (L(0), 1)))
    with pytest.raises(ValueError):
        PBWMonomial(((L(1), 1), (L(1), 1)))


def test_monomial_string_round_trip():
    m = mono((J(-1), 2), (H(0), 1), (L(2), 3))
    assert str(m) == "J[-1]^2 H[0] L[2]^3"
    assert PBWMonomial.parse(str(m)) == m
    assert str(MONOMIAL_ONE) == "1"
    assert PBWMonomial.parse("1") == MONOMIAL_ONE
