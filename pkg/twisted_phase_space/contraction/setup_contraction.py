import os
from dataclasses import dataclass

from twisted_phase_space.algebra.generators import SPATIAL, x, p, t, y, pi
from twisted_phase_space.utils.utils_io import save_json_obj

CASES = ('i', 'ii', 'iii')

CASE_OF_CARRIER = {
    'rotation-gamma': 'i',
    'rotation-zero':  'ii',
    'boost':          'iii',
}


@dataclass(frozen=True)
class ContractionScheme:
    case: str
    carrier: str
    parameter: str
    parameter_weight: int
    variable_map: tuple

    def mapping(self):
        """{relativistic generator: (power of c, Galilean generator)}."""
        return dict(self.variable_map)


def default_variable_map():
    """x_0 = c t, x_i = y_i, p_0 = pi_0 / c, p_i = pi_i."""
    mapping = [(x(0), (1, t())), (p(0), (-1, pi(0)))]
    for i in SPATIAL:
        mapping.append((x(i), (0, y(i))))
        mapping.append((p(i), (0, pi(i))))
    return tuple(mapping)


def setup_contraction_params(case='i', save_dir=None):

    if case not in CASES:
        raise ValueError(f'Incorrect contraction case specified: {case}')

    # s = 1/(2 xi) rescales as s, c*shat or sbar/c
    parameter_dict = {
        'i':   {'carrier': 'rotation-gamma', 'parameter': 's',    'parameter_weight': 0},
        'ii':  {'carrier': 'rotation-zero',  'parameter': 'shat', 'parameter_weight': 1},
        'iii': {'carrier': 'boost',          'parameter': 'sbar', 'parameter_weight': -1},
    }

    contraction_params = {
        'case': case,
        **parameter_dict[case],
        'variable_map': {'x_0': [1, 't'], 'p_0': [-1, 'pi_0'], 'x_i': [0, 'y_i'], 'p_i': [0, 'pi_i']},
    }

    if save_dir:
        save_json_obj(contraction_params, os.path.join(save_dir, 'contraction_params'))

    return contraction_params


def setup_contraction_scheme(case='i', save_dir=None):
    params = setup_contraction_params(case, save_dir)
    return ContractionScheme(
        params['case'],
        params['carrier'],
        params['parameter'],
        params['parameter_weight'],
        default_variable_map(),
    )
