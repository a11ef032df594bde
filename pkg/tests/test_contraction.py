import pytest

from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import pi, t, y
from twisted_phase_space.algebra.scalar import I, Scalar
from twisted_phase_space.algebra.series import DeformSeries
from twisted_phase_space.contraction.contract import ContractionError, contract, limit_results, rescale
from twisted_phase_space.contraction.reference_galilean import verify_contraction
from twisted_phase_space.contraction.setup_contraction import (
    CASES, setup_contraction_params, setup_contraction_scheme)
from twisted_phase_space.heisenberg_double.phase_space import build_phase_space, jacobi_check
from twisted_phase_space.poincare.setup_carrier import setup_carrier


def test_contraction_params():
    params = setup_contraction_params('iii')
    assert params['carrier'] == 'boost' and params['parameter'] == 'sbar' and params['parameter_weight'] == -1
    assert setup_contraction_scheme('ii').parameter == 'shat'
    with pytest.raises(ValueError):
        setup_contraction_params('iv')


def test_contraction_rejects_wrong_inputs():
    table = build_phase_space(setup_carrier('rotation-gamma'), 2)
    with pytest.raises(ContractionError):
        contract(table, setup_contraction_scheme('iii'))
    with pytest.raises(ContractionError):
        contract(contract(table))


def test_no_divergent_terms():
    table = build_phase_space(setup_carrier('rotation-zero'), 3)
    results = limit_results(rescale(table, setup_contraction_scheme('ii')))
    assert not any(result.divergent for result in results.values())


def test_boost_limit_drops_hyperbolic_terms():
    galilean = contract(build_phase_space(setup_carrier('boost'), 4))
    assert galilean.regime == 'galilean' and galilean.parameter == 'sbar'
    assert galilean.bracket(t(), pi(0)) == NCExpr.scalar(-I)
    assert galilean.bracket(y(1), pi(1)) == NCExpr.scalar(I)
    assert galilean.bracket(y(2), y(1)) == NCExpr.word((t(),), DeformSeries.monomial(Scalar(0, -2), 1))


def test_rotation_gamma_limit_keeps_deformation():
    galilean = contract(build_phase_space(setup_carrier('rotation-gamma'), 3))
    assert galilean.bracket(y(1), y(3)) == NCExpr.word((y(2),), DeformSeries.monomial(Scalar(0, 2), 1))
    assert str(galilean.relation(y(1), pi(1)).closed_form) == 'i*cos(s*pi_3)'


SIGN_FLIPS = {
    'i': ['[y_gamma, pi_k]', '[y_gamma, pi_l]'],
    'ii': ['[t, pi_k]', '[t, pi_l]', '[y_k, pi_l]', '[y_l, pi_k]'],
    'iii': [],
}

INCONSISTENT = {
    'i': [],
    'ii': [],
    'iii': ['[y_k, pi_0]', '[y_l, pi_0]'],
}


@pytest.mark.parametrize('case', CASES)
def test_galilean_ledger(case):
    galilean, ledger = verify_contraction(case, 3)
    carrier = galilean.carrier.case
    flips = [f'galilean/{carrier}/{lhs}' for lhs in SIGN_FLIPS[case]]
    inconsistent = [f'galilean/{carrier}/{lhs}' for lhs in INCONSISTENT[case]]
    assert len(ledger) == 28
    for entry in ledger:
        if entry.relation in flips:
            assert entry.verdict == 'sign-flip', entry
        elif entry.relation in inconsistent:
            assert entry.verdict == 'reference-inconsistent', entry
        else:
            assert entry.verdict == 'match', entry
    assert ledger.passed


@pytest.mark.parametrize('case', CASES)
def test_galilean_jacobi(case):
    galilean, _ = verify_contraction(case, 3)
    report = jacobi_check(galilean)
    assert report.passed, report.failures
