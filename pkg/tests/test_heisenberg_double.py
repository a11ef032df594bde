from itertools import combinations

import numpy as np
import pytest

from twisted_phase_space.algebra.closed_form import ClosedForm
from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import GROUP, MOMENTA, POINCARE, M, P, L, a, p, x
from twisted_phase_space.algebra.rewrite import commutator
from twisted_phase_space.algebra.scalar import I, Scalar
from twisted_phase_space.algebra.series import DeformSeries
from twisted_phase_space.contraction.contract import contract
from twisted_phase_space.contraction.reference_galilean import GALILEAN_REFERENCE
from twisted_phase_space.contraction.setup_contraction import CASE_OF_CARRIER
from twisted_phase_space.dual_group.group_rules import group_bracket
from twisted_phase_space.heisenberg_double.cross_relations import (
    cross_relation, heisenberg_rules, lorentz_cross_relations)
from twisted_phase_space.heisenberg_double.pairing import HopfPairing, generator_pairing
from twisted_phase_space.heisenberg_double.phase_space import (
    PhaseRelation, PhaseSpaceTable, build_phase_space, jacobi_check, parity_check)
from twisted_phase_space.heisenberg_double.reference_tables import (
    DOCUMENTED_SIGN_FLIPS, RELATIVISTIC_REFERENCE, compare_with_reference, reference_form)
from twisted_phase_space.poincare.classical import classical_rules
from twisted_phase_space.poincare.setup_carrier import CARRIERS, setup_carrier


def test_generator_pairing():
    assert generator_pairing(a(2), P(2)) == I
    assert generator_pairing(a(2), P(1)) == Scalar(0)
    # <Lambda^0_1, M_01> = i(d^0_0 eta_11 - d^0_1 eta_01)
    assert generator_pairing(L(0, 1), M(0, 1)) == I
    assert generator_pairing(L(1, 0), M(0, 1)) == I
    assert generator_pairing(L(0, 1), P(1)) == Scalar(0)


def test_pairing_respects_algebra_brackets():
    carrier = setup_carrier('rotation-gamma')
    pairing = HopfPairing(carrier, 2)
    rules = classical_rules()
    for r1, r2 in combinations(POINCARE, 2):
        e1, e2 = NCExpr.generator(r1, 2), NCExpr.generator(r2, 2)
        relation = e1 * e2 - e2 * e1 - commutator(e1, e2, rules)
        for g in GROUP:
            assert pairing.pair(NCExpr.generator(g, 2), relation).is_zero(), (g, r1, r2)


@pytest.mark.parametrize('name', CARRIERS)
def test_pairing_respects_algebra_brackets_on_group_words(name):
    carrier = setup_carrier(name)
    pairing = HopfPairing(carrier, 2)
    rules = classical_rules()
    rng = np.random.default_rng(11)
    for _ in range(50):
        word = tuple(GROUP[i] for i in rng.integers(len(GROUP), size=rng.integers(1, 3)))
        r1, r2 = (POINCARE[i] for i in rng.choice(len(POINCARE), size=2, replace=False))
        e1, e2 = NCExpr.generator(r1, 2), NCExpr.generator(r2, 2)
        relation = e1 * e2 - e2 * e1 - commutator(e1, e2, rules)
        assert pairing.pair(NCExpr.word(word, order=2), relation).is_zero(), (word, r1, r2)


@pytest.mark.parametrize('name', CARRIERS)
def test_pairing_respects_translation_brackets(name):
    carrier = setup_carrier(name)
    order = 3
    pairing = HopfPairing(carrier, order)
    tests = [NCExpr.generator(m, order) for m in MOMENTA]
    tests += [NCExpr.word((m1, m2), order=order) for m1 in MOMENTA for m2 in MOMENTA]
    for mu, nu in combinations(range(4), 2):
        e1, e2 = NCExpr.generator(a(mu), order), NCExpr.generator(a(nu), order)
        relation = e1 * e2 - e2 * e1 - group_bracket(a(mu), a(nu), carrier, order)
        for u in tests:
            assert pairing.pair(relation, u).is_zero(), (mu, nu, u)


def test_translation_momentum_cross_relation_is_canonical_at_order_zero():
    carrier = setup_carrier('rotation-gamma')
    assert cross_relation(a(3), P(3), carrier, 0) == NCExpr.scalar(I, 0)
    assert cross_relation(a(1), P(2), carrier, 0).is_zero()
    with pytest.raises(ValueError):
        cross_relation(P(1), a(1), carrier, 0)


def test_heisenberg_rules_normal_order_cross_products():
    rules = heisenberg_rules(setup_carrier('rotation-gamma'), 0)
    lhs, rhs = NCExpr.word((a(3),), order=0), NCExpr.word((P(3),), order=0)
    assert commutator(lhs, rhs, rules) == NCExpr.scalar(I, 0)
    assert commutator(NCExpr.word((a(1),), order=0), NCExpr.word((P(2),), order=0), rules).is_zero()


def test_lorentz_cross_relations_block():
    relations = lorentz_cross_relations(setup_carrier('boost'), 1)
    assert len(relations) == 4 * 6 + 16 * 4
    assert all(q.kind in ('a', 'L') for q, _ in relations)


def test_rotation_gamma_spot_values():
    table = build_phase_space(setup_carrier('rotation-gamma'), 3)
    assert table.bracket(x(0), p(0)) == NCExpr.scalar(-I)
    assert table.bracket(x(3), p(3)) == NCExpr.scalar(I)
    assert table.bracket(x(1), x(3)) == NCExpr.word((x(2),), DeformSeries.monomial(Scalar(0, 2), 1))
    assert str(table.relation(x(1), x(3)).closed_form) == '2i*s*x_2'
    assert table.bracket(p(1), p(2)).is_zero()


def test_boost_spot_values():
    table = build_phase_space(setup_carrier('boost'), 4)
    assert str(table.relation(x(0), p(0)).closed_form) == '-i*cosh(s*p_2)'


def test_order_zero_is_canonical():
    for name in CARRIERS:
        table = build_phase_space(setup_carrier(name), 0)
        for relation in table.nonzero_entries():
            g1, g2 = relation.lhs
            assert g1.kind == 'x' and g2.kind == 'p' and g1.indices == g2.indices
            assert relation.series == NCExpr.scalar(-I if g1.indices == (0,) else I)


def test_jacobi_boost():
    report = jacobi_check(build_phase_space(setup_carrier('boost'), 3))
    assert len(report) == 56
    assert report.passed, report.failures


@pytest.mark.slow
@pytest.mark.parametrize('name', CARRIERS)
def test_jacobi_all_carriers(name):
    report = jacobi_check(build_phase_space(setup_carrier(name), 6))
    assert report.passed, report.failures


SIGN_FLIPS = {
    'rotation-gamma': ['[x_gamma, p_k]', '[x_gamma, p_l]', '[x_k, p_l]', '[x_l, p_k]'],
    'rotation-zero': ['[x_0, p_k]', '[x_0, p_l]', '[x_k, p_l]', '[x_l, p_k]'],
    'boost': ['[x_l, p_k]', '[x_0, p_k]', '[x_k, p_0]', '[x_l, p_0]'],
}


@pytest.mark.parametrize('name', CARRIERS)
def test_reference_ledger(name):
    table = build_phase_space(setup_carrier(name), 4)
    ledger = compare_with_reference(table, RELATIVISTIC_REFERENCE[name])
    assert len(ledger) == 28
    flips = [f'relativistic/{name}/{lhs}' for lhs in SIGN_FLIPS[name]]
    for entry in ledger:
        expected = 'sign-flip' if entry.relation in flips else 'match'
        assert entry.verdict == expected, entry
    assert ledger.passed


def test_undocumented_sign_flip_is_a_mismatch():
    table = build_phase_space(setup_carrier('rotation-gamma'), 3)
    corrupted = table.with_relation(x(3), p(3), -table.bracket(x(3), p(3)))
    ledger = compare_with_reference(corrupted, RELATIVISTIC_REFERENCE['rotation-gamma'])
    entry = [e for e in ledger if e.relation == 'relativistic/rotation-gamma/[x_gamma, p_gamma]'][0]
    assert entry.verdict == 'mismatch'
    assert entry.detail == 'undocumented sign flip'
    assert not ledger.passed


@pytest.mark.parametrize('regime, name', sorted(DOCUMENTED_SIGN_FLIPS))
def test_documented_sign_flips_are_odd_in_s(regime, name):
    carrier = setup_carrier(name)
    if regime == 'relativistic':
        rows = RELATIVISTIC_REFERENCE[name]
    else:
        rows = GALILEAN_REFERENCE[CASE_OF_CARRIER[name]]
    printed = {(lhs_a, lhs_b): rhs for lhs_a, lhs_b, rhs in rows}
    for lhs in DOCUMENTED_SIGN_FLIPS[(regime, name)]:
        series = reference_form(printed[lhs], carrier, 's').expand(4)
        assert not series.is_zero(), lhs
        assert series.reflect() == -series, lhs


def test_substituted_sign_breaks_closure():
    table = build_phase_space(setup_carrier('rotation-gamma'), 3)
    flipped = table.with_relation(x(1), x(3), -table.bracket(x(1), x(3)))
    assert not jacobi_check(flipped).passed
    assert table.with_relation(x(3), x(1), table.bracket(x(3), x(1))) == table


def test_table_truncation():
    table = build_phase_space(setup_carrier('rotation-gamma'), 3)
    assert table.truncate(0) == build_phase_space(setup_carrier('rotation-gamma'), 0)


def test_closed_form_parity():
    assert ClosedForm('cos', I, p(3)).parity() == 0
    assert ClosedForm('sinh', I, p(3)).parity() == 1
    assert ClosedForm('linear', I, p(3), s_power=1).parity() == 1
    assert ClosedForm('constant', I).parity() == 0


@pytest.mark.parametrize('name', CARRIERS)
def test_bracket_parity(name):
    relativistic = build_phase_space(setup_carrier(name), 4)
    for table in (relativistic, contract(relativistic)):
        report = parity_check(table)
        assert len(report) > 0
        assert report.passed, report.failures


def test_broken_parity_fails():
    table = build_phase_space(setup_carrier('rotation-gamma'), 3)
    cosine = table.bracket(x(1), p(1))
    mixed = cosine + NCExpr.word((p(3),), DeformSeries.monomial(I, 1, 3), 3)
    report = parity_check(table.with_relation(x(1), p(1), mixed))
    assert [row['subject'] for row in report.failures] == ['[x_1, p_1]']

    relations = dict(table.relations)
    relations[(x(1), p(1))] = PhaseRelation((x(1), p(1)), cosine, ClosedForm('sin', I, p(3)))
    relabelled = PhaseSpaceTable(table.carrier, table.order, table.regime, table.parameter,
                                 table.generators, relations)
    assert not parity_check(relabelled).passed
