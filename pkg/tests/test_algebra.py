import itertools
import random
from fractions import Fraction

import pytest

from planargca.algebra import (
    C1,
    C2,
    C3,
    Element,
    Generator,
    H,
    I,
    IJTranslation,
    InvalidTranslation,
    J,
    L,
    apply_translation,
    bracket,
    bracket_basis,
    gen_str,
    grade,
    parse_gen,
    verify_jacobi,
    verify_structure,
)
from planargca.scalars import ONE, sc


def test_bracket_ll_with_central_term():
    assert bracket_basis(L(2), L(-2)) == Element(
        {L(0): sc(-4), C1: sc(Fraction(1, 2))}
    )


def test_bracket_lh_with_central_term():
    assert bracket_basis(L(1), H(-1)) == Element({H(0): sc(-1), C2: sc(1)})


def test_bracket_hh_central():
    assert bracket_basis(H(3), H(-3)) == Element({C3: sc(3)})


def test_bracket_hi_shift():
    assert bracket_basis(H(0), I(5)) == Element({I(5): ONE})


def test_bracket_ij_vanishes():
    assert bracket_basis(I(3), J(-3)) == Element.zero()
    assert bracket_basis(J(2), J(5)) == Element.zero()
    assert bracket_basis(I(1), I(-1)) == Element.zero()


def test_central_fraction_is_exact():
    # At index 2 the L/L central coefficient is (8-2)/12 = 1/2, not an int.
    assert bracket_basis(L(2), L(-2)).coeff(C1) == sc(Fraction(1, 2))


def test_bracket_bilinear_cancellation():
    x = Element({L(1): ONE, H(1): ONE})
    # [L1, I0] = -I1 and [H1, I0] = I1 cancel.
    assert bracket(x, Element.single(I(0))) == Element.zero()


def test_bracket_self_is_zero():
    x = Element({L(1): sc(2), H(-2): sc(3), I(0): ONE})
    assert bracket(x, x) == Element.zero()


def test_central_elements_are_central():
    for g in (L(3), H(-1), I(0), J(7), C2):
        assert bracket_basis(C1, g) == Element.zero()
        assert bracket_basis(g, C3) == Element.zero()


def test_grading():
    assert grade(L(5)) == 5
    assert grade(C2) == 0
    assert grade(J(-3)) == -3


def test_antisymmetry_exhaustive():
    gens = [Generator(fam, idx) for fam in "LHIJ" for idx in range(-6, 7)]
    gens += [C1, C2, C3]
    for a, b in itertools.combinations_with_replacement(gens, 2):
        assert bracket_basis(a, b) + bracket_basis(b, a) == Element.zero()


def test_grading_of_brackets():
    gens = [Generator(fam, idx) for fam in "LHIJ" for idx in range(-4, 5)]
    for a, b in itertools.combinations(gens, 2):
        result = bracket_basis(a, b)
        for g in result.terms:
            if not g.is_central:
                assert grade(g) == grade(a) + grade(b)


def test_jacobi_small_bound():
    report = verify_jacobi(3)
    assert report.ok
    assert report.violations == []


def test_jacobi_single_triple():
    a, b, c = L(1), L(2), L(3)
    total = (
        bracket(Element.single(a), bracket_basis(b, c))
        + bracket(Element.single(b), bracket_basis(c, a))
        + bracket(Element.single(c), bracket_basis(a, b))
    )
    assert total == Element.zero()


def test_jacobi_with_centrals_trivial():
    total = (
        bracket(Element.single(C1), bracket_basis(L(1), L(-1)))
        + bracket(Element.single(L(1)), bracket_basis(L(-1), C1))
        + bracket(Element.single(L(-1)), bracket_basis(C1, L(1)))
    )
    assert total == Element.zero()


def test_translation_on_l2():
    t = IJTranslation(Element({I(-1): sc(-1), J(-1): sc(-1)}))
    assert t.apply(L(2)) == Element(
        {L(2): ONE, I(1): sc(-3), J(1): sc(-3)}
    )


def test_translation_on_h2():
    t = IJTranslation(Element({I(-1): sc(-1), J(-1): sc(-1)}))
    assert t.apply(H(2)) == Element({H(2): ONE, I(1): ONE, J(1): sc(-1)})


def test_translation_fixes_centrals():
    t = IJTranslation(Element({I(2): sc(5), J(-7): ONE}))
    assert t.apply(C3) == Element.single(C3)


def test_translation_support_validated():
    with pytest.raises(InvalidTranslation):
        IJTranslation(Element({L(0): ONE}))


def test_translation_is_automorphism_sampled():
    rng = random.Random(17)
    t = IJTranslation(Element({I(-2): sc(2), J(1): sc(Fraction(-1, 3))}))
    gens = [Generator(fam, idx) for fam in "LHIJ" for idx in range(-4, 5)]
    gens += [C1, C2, C3]
    for _ in range(60):
        a = Element.single(gens[rng.randrange(len(gens))])
        b = Element.single(gens[rng.randrange(len(gens))])
        assert t.apply(bracket(a, b)) == bracket(t.apply(a), t.apply(b))


def test_ad_squared_vanishes():
    x = Element({I(-1): ONE, J(2): sc(-3)})
    for fam in "LHIJ":
        for idx in range(-4, 5):
            inner = bracket(x, Element.single(Generator(fam, idx)))
            assert bracket(x, inner) == Element.zero()


def test_verify_structure_report():
    report = verify_structure(2)
    assert report.ok
    assert report.antisymmetry_checked > 0
    assert report.jacobi_checked > 0


def test_generator_serialization():
    assert gen_str(L(5)) == "L[5]"
    assert gen_str(J(-3)) == "J[-3]"
    assert gen_str(C1) == "c1"
    assert parse_gen("L[5]") == L(5)
    assert parse_gen("c2") == C2
    with pytest.raises(ValueError):
        parse_gen("K[2]")


def test_element_json_round_trip():
    element = Element({L(2): sc(Fraction(1, 2)), C1: sc(0, 1), J(-1): sc(-3)})
    assert Element.from_json(element.to_json()) == element


def test_generator_validation():
    with pytest.raises(ValueError):
        Generator("L")
    with pytest.raises(ValueError):
        Generator("c1", 3)
