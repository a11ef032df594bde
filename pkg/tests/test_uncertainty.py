import numpy as np
import pytest

from twisted_phase_space.algebra.generators import p, x
from twisted_phase_space.contraction.contract import contract
from twisted_phase_space.contraction.reference_galilean import verify_contraction
from twisted_phase_space.heisenberg_double.phase_space import build_phase_space
from twisted_phase_space.heisenberg_double.reference_tables import RELATIVISTIC_REFERENCE, compare_with_reference
from twisted_phase_space.poincare.setup_carrier import CARRIERS, setup_carrier
from twisted_phase_space.uncertainty.bounds import bounds, classical_limit_check, minimal_momenta
from twisted_phase_space.uncertainty.numeric_check import GaussianState, SeparableWave, run_numeric_check
from twisted_phase_space.uncertainty.realization import MomentumRealization
from twisted_phase_space.uncertainty.reference_bounds import compare_bounds
from twisted_phase_space.uncertainty.setup_numeric import setup_numeric_params


@pytest.fixture(scope='module')
def tables():
    return {name: build_phase_space(setup_carrier(name), 4) for name in CARRIERS}


@pytest.mark.parametrize('name', CARRIERS)
def test_relativistic_bound_count(tables, name):
    table = tables[name]
    assert len(bounds(table)) == 10
    ledger = compare_bounds(bounds(table), table, compare_with_reference(table, RELATIVISTIC_REFERENCE[name]))
    assert ledger.counts()['match'] == 10
    assert ledger.passed


def test_galilean_bound_counts():
    counts = {}
    for case in ('i', 'ii', 'iii'):
        galilean, table_ledger = verify_contraction(case, 4)
        ledger = compare_bounds(bounds(galilean), galilean, table_ledger)
        counts[case] = len(bounds(galilean))
        assert ledger.passed
        if case == 'iii':
            assert ledger.counts()['reference-inconsistent'] == 2
            assert ledger.counts()['match'] == 5
    assert counts == {'i': 10, 'ii': 10, 'iii': 7}


def test_bound_text(tables):
    table = tables['rotation-gamma']
    by_pair = {b.lhs: b for b in bounds(table)}
    assert by_pair[(x(1), x(3))].rhs_text() == '|<x_2>|/(2xi)'
    assert by_pair[(x(0), p(0))].rhs_text() == '1/2'
    assert by_pair[(x(3), p(1))].rhs_text() == '|<p_2>|/(4xi)'
    assert by_pair[(x(1), p(1))].rhs_text() == '|<cos(p_3/(2xi))>|/2'
    assert str(by_pair[(x(0), p(0))]) == 'Delta(x_0) Delta(p_0) >= 1/2'


def test_magnitude_text_parameters(tables):
    galilean = contract(tables['boost'])
    texts = [b.rhs_text() for b in bounds(galilean)]
    assert '|<t>|/(2xi_bar)' in texts


@pytest.mark.parametrize('name', CARRIERS)
def test_classical_limit(tables, name):
    assert classical_limit_check(tables[name]).passed
    assert classical_limit_check(contract(tables[name])).passed
    assert len(bounds(tables[name].truncate(0))) == 4


def test_minimal_momenta(tables):
    df = minimal_momenta(tables['rotation-gamma'], xi=1.0, n_values=(0, 1, 2))
    assert len(df) == 4 * 3
    magnitudes = np.abs(df['value'].to_numpy())
    assert np.all((magnitudes < 1e-12) | (np.abs(magnitudes - 1.0) < 1e-12))
    assert not minimal_momenta(tables['boost']).empty


def test_realization_components(tables):
    realization = MomentumRealization(tables['rotation-gamma'])
    assert set(realization.components(x(3))) == {p(1), p(2), p(3)}
    assert realization.divergence(x(0)) == []
    assert realization.vector_field_check().passed


def test_gaussian_state_is_normalized():
    params = setup_numeric_params()
    state = GaussianState.random(np.random.default_rng(1), 4, params)
    wave = SeparableWave.from_state(state, state.grids(512))
    assert abs(wave.inner(wave).real - 1.0) < 1e-10


def test_numeric_params_validation():
    with pytest.raises(ValueError):
        setup_numeric_params(grid_points=4)
    with pytest.raises(ValueError):
        setup_numeric_params(xi=0.0)


def test_numeric_check_rotation_gamma(tables):
    params = setup_numeric_params(seed=3, grid_points=256, n_states=2)
    report = run_numeric_check(tables['rotation-gamma'], params)
    assert report.passed, report.to_frame()
    assert len(report.to_frame()) == 2 * 10


def test_numeric_check_is_seeded(tables):
    params = setup_numeric_params(seed=5, grid_points=256, n_states=1)
    first = run_numeric_check(tables['boost'], params).to_frame()
    second = run_numeric_check(tables['boost'], params).to_frame()
    assert first.equals(second)


@pytest.mark.slow
@pytest.mark.parametrize('name', CARRIERS)
def test_numeric_check_all(tables, name):
    params = setup_numeric_params(seed=0, grid_points=512, n_states=20)
    assert run_numeric_check(tables[name], params).passed
    assert run_numeric_check(contract(tables[name]), params).passed
