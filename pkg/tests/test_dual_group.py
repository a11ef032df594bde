import numpy as np
import pytest

from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import GROUP, L, a
from twisted_phase_space.algebra.rewrite import normal_order
from twisted_phase_space.algebra.series import DeformSeries
from twisted_phase_space.dual_group.consistency import group_consistency, jacobi_residual
from twisted_phase_space.dual_group.group_rules import (
    DualGroup, group_bracket, group_coproduct, group_counit, group_rules)
from twisted_phase_space.poincare.setup_carrier import CARRIERS, setup_carrier


def test_matrix_coproduct_shape():
    delta = group_coproduct(L(0, 1))
    assert len(delta.terms) == 4
    assert delta.terms[((L(0, 2),), (L(2, 1),))] == DeformSeries.constant(1)
    translation = group_coproduct(a(2))
    assert translation.terms[((a(2),), ())] == DeformSeries.constant(1)
    assert translation.terms[((L(2, 3),), (a(3),))] == DeformSeries.constant(1)


def test_group_counit():
    assert group_counit((L(1, 1), L(2, 2))) == DeformSeries.constant(1)
    assert group_counit((L(1, 2),)).is_zero()
    assert group_counit((a(0),)).is_zero()
    assert group_counit(()) == DeformSeries.constant(1)


def test_time_translation_commutes_with_carrier_translation():
    carrier = setup_carrier('rotation-gamma')
    assert group_bracket(a(0), a(3), carrier, 4).is_zero()
    assert not group_bracket(a(1), a(3), carrier, 4).is_zero()


def test_matrix_entries_commute():
    carrier = setup_carrier('boost')
    assert group_bracket(L(0, 1), L(2, 3), carrier, 2).is_zero()


def test_brackets_are_first_order():
    carrier = setup_carrier('boost')
    for g1 in GROUP:
        for g2 in GROUP:
            if g1 == g2 or 'a' not in (g1.kind, g2.kind):
                continue
            for coeff in group_bracket(g1, g2, carrier, 4).terms.values():
                assert coeff.lowest_power() == 1


@pytest.mark.parametrize('name', CARRIERS)
def test_translation_jacobi(name):
    rules = group_rules(setup_carrier(name), 3)
    assert jacobi_residual(a(0), a(1), a(2), rules, 3).is_zero()
    assert jacobi_residual(a(1), a(2), a(3), rules, 3).is_zero()
    assert jacobi_residual(a(0), a(3), L(1, 2), rules, 3).is_zero()


def test_coproduct_word_is_multiplicative():
    group = DualGroup(setup_carrier('rotation-zero'), 2)
    word = group.coproduct_word((a(1), a(2)))
    expr = group.coproduct_expr(NCExpr.word((a(1), a(2)), order=2))
    assert word == expr


@pytest.mark.slow
@pytest.mark.parametrize('name', CARRIERS)
def test_group_consistency(name):
    report = group_consistency(setup_carrier(name), 2)
    assert report.passed, report.failures
    assert len(report) == 4 + 6 * 16 + 6 + 4 * 16 + 2 * 20


@pytest.mark.parametrize('name', CARRIERS)
def test_group_normal_order_truncation_coherence(name):
    carrier = setup_carrier(name)
    high, low = group_rules(carrier, 3), group_rules(carrier, 1)
    rng = np.random.default_rng(6)
    for _ in range(30):
        word = tuple(GROUP[int(i)] for i in rng.integers(0, len(GROUP), 3))
        expr = NCExpr.word(word, order=3)
        assert normal_order(expr, high).truncate(1) == normal_order(expr.truncate(1), low), word
