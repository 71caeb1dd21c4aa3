from fractions import Fraction

import pytest

from homoperad.linear import IncomparableLeading, LinComb, compose_linear, leading_monomial
from homoperad.orders import LEX_MA
from homoperad.terms import HOM_SIGNATURE, Permutation, TermError, parse


def t(text):
    return parse(text, HOM_SIGNATURE)


def mono(text, c=Fraction(1)):
    return LinComb.monomial(t(text), c)


def test_add_and_cancel():
    m12, m21 = mono("m 1 2"), mono("m 2 1")
    x = (m12 - m21) + (m12 + m21)
    assert x == m12.scale(2)
    assert (mono("m 1 m 2 3") - mono("m m 1 2 3")) + mono("m m 1 2 3") == mono("m 1 m 2 3")


def test_scale_zero_gives_empty():
    x = mono("m 1 2").scale(0)
    assert not x
    assert x.terms == {}


def test_no_zero_coefficients_stored():
    x = mono("m 1 2") - mono("m 1 2")
    assert x.terms == {}
    y = mono("m 1 2", Fraction(1, 2)) + mono("m 1 2", Fraction(-1, 2))
    assert y.terms == {}


def test_arity_mismatch():
    with pytest.raises(TermError):
        mono("m 1 2") + mono("a 1")
    with pytest.raises(TermError):
        LinComb(2, {t("a 1"): Fraction(1)})


def test_compose_linear_identity_inners():
    x = mono("m 1 2") - mono("m 2 1")
    ident = mono("1")
    assert compose_linear(x, [ident, ident]) == x


def test_compose_linear_examples():
    assert compose_linear(mono("m 1 2"), [mono("a 1"), mono("1")]) == mono("m a 1 2")
    x = mono("m 1 2") - mono("m 2 1")
    got = compose_linear(x, [mono("m 1 2"), mono("1")])
    assert got == mono("m m 1 2 3") - mono("m 3 m 1 2")


def test_compose_linear_agrees_with_monomial_compose():
    from homoperad.terms import compose

    outer, i1, i2 = t("m 1 2"), t("a 1"), t("m 2 1")
    got = compose_linear(mono("m 1 2"), [mono("a 1"), mono("m 2 1")])
    assert got == LinComb.monomial(compose(outer, [i1, i2]))


def test_act_extension():
    x = mono("m 1 2") - mono("m a 1 2")
    swapped = x.act(Permutation((2, 1)))
    assert swapped == mono("m 2 1") - mono("m a 2 1")


def test_leading_monomial_lex():
    x = mono("m a 1 m 2 3") - mono("m m 1 2 a 3")
    lead, c = leading_monomial(x, LEX_MA)
    assert lead == t("m a 1 m 2 3")
    assert c == 1
    x = mono("m m 1 a 2 a m 3 4") - mono("m m 1 m 2 3 a a 4")
    lead, _ = leading_monomial(x, LEX_MA)
    assert lead == t("m m 1 a 2 a m 3 4")


def test_leading_monomial_singleton():
    x = mono("a a 1", Fraction(5))
    assert leading_monomial(x, LEX_MA) == (t("a a 1"), Fraction(5))


def test_leading_monomial_incomparable():
    # same symbol skeleton, boxes in different spots: lex cannot decide
    x = mono("m 1 m 2 3") - mono("m 2 m 1 3")
    with pytest.raises(IncomparableLeading):
        leading_monomial(x, LEX_MA)


def test_leading_monomial_empty():
    with pytest.raises(ValueError):
        leading_monomial(LinComb(2), LEX_MA)
