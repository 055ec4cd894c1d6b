import pytest

from qverify.derivations import (
    partial_theta_recipe,
    rescale_a_by_q,
    rewriting_chain,
    substitute_b_minus_ac,
    substitute_c_minus_a,
)
from qverify.series import SeriesError, Window, from_terms


def test_rewriting_chain_reaches_the_corrected_form():
    report = rewriting_chain(6, 4, 6)
    assert report.passed, [c.name for c in report.checks if not c.passed]
    names = [c.name for c in report.checks]
    assert names[0] == "substituted-lhs-equals-c-form"
    assert names[-1] == "printed-shortfall-equals-plus-ac-product"


def test_partial_theta_recipe_needs_the_extra_rescaling():
    report = partial_theta_recipe(6, 5)
    status = {c.name: c.passed for c in report.checks}
    assert status["recipe-sides-agree"]
    assert not status["literal-recipe-gives-partial-theta-lhs"]
    assert not status["literal-recipe-gives-partial-theta-rhs"]
    assert status["rescaled-recipe-gives-partial-theta-lhs"]
    assert status["rescaled-recipe-gives-partial-theta-rhs"]
    assert not report.unexpected


def test_substitute_b_minus_ac_on_one_term():
    src = from_terms({(2, -1, 2, 0): 3}, Window(2, -1, 0, 2))
    out = substitute_b_minus_ac(src, Window(2, -1, 2, 0, 2))
    assert out.terms() == {(2, 1, 0, 2): 3}


def test_substitute_c_minus_a():
    src = from_terms({(1, 0, 0, 3): 2, (0, 0, 0, 0): 1}, Window(1, 0, 0, 0, 3))
    assert substitute_c_minus_a(src, Window(1, 0, 3)).terms() == {(1, 3, 0, 0): -2, (0, 0, 0, 0): 1}


def test_rescale_a_by_q():
    src = from_terms({(3, 2, 0, 0): 5, (1, 1, 0, 0): 1}, Window(4, 0, 2))
    assert rescale_a_by_q(src, Window(2, 0, 2)).terms() == {(1, 2, 0, 0): 5, (0, 1, 0, 0): 1}
    with pytest.raises(SeriesError):
        rescale_a_by_q(from_terms({(0, 1, 0, 0): 1}, Window(4, 0, 2)), Window(2, 0, 2))
