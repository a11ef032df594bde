from twisted_phase_space.contraction.contract import contract
from twisted_phase_space.contraction.setup_contraction import setup_contraction_scheme
from twisted_phase_space.heisenberg_double.phase_space import build_phase_space
from twisted_phase_space.heisenberg_double.reference_tables import (
    Z, PLUS_I, MINUS_I, lin, fn, momenta_commute, compare_with_reference)
from twisted_phase_space.poincare.setup_carrier import setup_carrier

GALILEAN_ROTATION_GAMMA = [
    ('t', 'y_k', Z), ('t', 'y_l', Z), ('t', 'y_gamma', Z),
    ('y_k', 'y_l', Z),
    ('y_k', 'y_gamma', lin(2, 'y_l')),
    ('y_l', 'y_gamma', lin(-2, 'y_k')),
    ('t', 'pi_k', Z), ('t', 'pi_l', Z), ('t', 'pi_gamma', Z),
    ('y_k', 'pi_0', Z), ('y_l', 'pi_0', Z), ('y_gamma', 'pi_0', Z),
    ('y_k', 'pi_gamma', Z), ('y_l', 'pi_gamma', Z),
    ('t', 'pi_0', MINUS_I), ('y_gamma', 'pi_gamma', PLUS_I),
    ('y_gamma', 'pi_k', lin(1, 'pi_l')),
    ('y_gamma', 'pi_l', lin(-1, 'pi_k')),
    ('y_l', 'pi_l', fn('cos', 1, 'pi_gamma')),
    ('y_k', 'pi_k', fn('cos', 1, 'pi_gamma')),
    ('y_k', 'pi_l', fn('sin', -1, 'pi_gamma')),
    ('y_l', 'pi_k', fn('sin', 1, 'pi_gamma')),
] + momenta_commute(['pi_0', 'pi_k', 'pi_l', 'pi_gamma'])

GALILEAN_ROTATION_ZERO = [
    ('t', 'y_a', Z), ('y_k', 'y_l', Z),
    ('t', 'y_k', lin(2, 'y_l')),
    ('t', 'y_l', lin(-2, 'y_k')),
    ('y_k', 'y_a', Z), ('y_l', 'y_a', Z),
    ('t', 'pi_a', Z), ('y_a', 'pi_0', Z), ('y_k', 'pi_a', Z), ('y_l', 'pi_a', Z),
    ('t', 'pi_0', MINUS_I), ('y_a', 'pi_a', PLUS_I),
    ('y_a', 'pi_k', Z), ('y_a', 'pi_l', Z),
    ('y_k', 'pi_0', Z), ('y_l', 'pi_0', Z),
    ('t', 'pi_k', lin(-1, 'pi_l')),
    ('t', 'pi_l', lin(1, 'pi_k')),
    ('y_l', 'pi_l', fn('cos', 1, 'pi_0')),
    ('y_k', 'pi_k', fn('cos', 1, 'pi_0')),
    ('y_k', 'pi_l', fn('sin', 1, 'pi_0')),
    ('y_l', 'pi_k', fn('sin', -1, 'pi_0')),
] + momenta_commute(['pi_0', 'pi_k', 'pi_l', 'pi_a'])

GALILEAN_BOOST = [
    ('t', 'y_a', Z), ('t', 'y_k', Z),
    ('y_k', 'y_a', Z), ('y_l', 'y_a', Z), ('t', 'y_l', Z),
    ('y_l', 'y_k', lin(-2, 't')),
    ('y_l', 'pi_k', Z), ('t', 'pi_0', MINUS_I), ('t', 'pi_k', Z), ('y_k', 'pi_k', PLUS_I),
    ('y_a', 'pi_a', PLUS_I), ('y_l', 'pi_l', PLUS_I), ('y_k', 'pi_l', Z), ('t', 'pi_l', Z),
    ('y_k', 'pi_a', Z), ('y_l', 'pi_a', Z), ('t', 'pi_a', Z), ('y_a', 'pi_l', Z), ('y_a', 'pi_k', Z),
    ('y_a', 'pi_0', Z), ('y_k', 'pi_0', Z), ('y_l', 'pi_0', Z),
] + momenta_commute(['pi_0', 'pi_k', 'pi_l', 'pi_a'])

GALILEAN_REFERENCE = {
    'i':   GALILEAN_ROTATION_GAMMA,
    'ii':  GALILEAN_ROTATION_ZERO,
    'iii': GALILEAN_BOOST,
}


def verify_contraction(case, order, k=None, l=None, gamma=None):
    """Contract the relativistic table of a case and compare with the printed Galilean table."""
    scheme = setup_contraction_scheme(case)
    carrier = setup_carrier(scheme.carrier, k, l, gamma)
    galilean = contract(build_phase_space(carrier, order), scheme)
    return galilean, compare_with_reference(galilean, GALILEAN_REFERENCE[case])
