from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy.integrate import trapezoid
from tqdm import tqdm

from twisted_phase_space.algebra.generators import is_position, label
from twisted_phase_space.uncertainty.bounds import bounds
from twisted_phase_space.uncertainty.realization import realize
from twisted_phase_space.uncertainty.setup_numeric import setup_numeric_params


class QuadratureError(RuntimeError):
    pass


@dataclass
class GaussianState:
    """Product of normalized Gaussians in momentum space, one per axis.

    psi(p) = (2 pi w^2)^(-1/4) exp(-(p - m)^2 / (4 w^2)) exp(-i q p)
    """
    mean: np.ndarray
    width: np.ndarray
    offset: np.ndarray

    @classmethod
    def random(cls, rng, n_axes, params):
        return cls(
            rng.uniform(*params['mean_range'], n_axes),
            rng.uniform(*params['width_range'], n_axes),
            rng.uniform(*params['offset_range'], n_axes),
        )

    def grids(self, n_points, half_width=8.0):
        return [np.linspace(m - half_width * w, m + half_width * w, n_points)
                for m, w in zip(self.mean, self.width)]

    def factors(self, grids):
        factors = []
        for p, m, w, q in zip(grids, self.mean, self.width, self.offset):
            value = (2 * np.pi * w ** 2) ** -0.25 * np.exp(-(p - m) ** 2 / (4 * w ** 2) - 1j * q * p)
            derivative = (-(p - m) / (2 * w ** 2) - 1j * q) * value
            factors.append((value, derivative))
        return factors


class SeparableWave:
    """sum_j c_j prod_axis f_{j,axis}(p_axis); each factor keeps its first derivative when known."""

    def __init__(self, grids, terms):
        self.grids = grids
        self.terms = terms

    @classmethod
    def from_state(cls, state, grids):
        return cls(grids, [(1.0 + 0j, state.factors(grids))])

    def scale(self, c):
        return SeparableWave(self.grids, [(c * coef, factors) for coef, factors in self.terms])

    def __add__(self, other):
        return SeparableWave(self.grids, self.terms + other.terms)

    def multiply(self, axis, values, derivative=None):
        terms = []
        for coef, factors in self.terms:
            v, d = factors[axis]
            new_d = None
            if d is not None and derivative is not None:
                new_d = derivative * v + values * d
            factors = list(factors)
            factors[axis] = (values * v, new_d)
            terms.append((coef, factors))
        return SeparableWave(self.grids, terms)

    def differentiate(self, axis):
        terms = []
        for coef, factors in self.terms:
            v, d = factors[axis]
            if d is None:
                raise QuadratureError(f'Second derivative requested on axis {axis}')
            factors = list(factors)
            factors[axis] = (d, None)
            terms.append((coef, factors))
        return SeparableWave(self.grids, terms)

    def inner(self, other):
        """<self, other> by trapezoid quadrature, axis by axis."""
        total = 0j
        for c1, f1 in self.terms:
            for c2, f2 in other.terms:
                value = np.conj(c1) * c2
                for grid, (v1, _), (v2, _) in zip(self.grids, f1, f2):
                    value *= trapezoid(np.conj(v1) * v2, grid)
                total += value
        return total


class WaveOperators:
    """Action of phase-space generators and table right-hand sides on separable waves."""

    def __init__(self, realization, s_value):
        self.realization = realization
        self.s_value = s_value

    def _multiply_form(self, wave, form):
        if form.shape == 'constant':
            return wave.scale(form.evaluate({}, self.s_value))
        axis = self.realization.axis[form.generator]
        grid = {form.generator: wave.grids[axis]}
        values = form.evaluate(grid, self.s_value) * np.ones_like(wave.grids[axis])
        derivative = form.derivative(form.generator).evaluate(grid, self.s_value) * np.ones_like(wave.grids[axis])
        return wave.multiply(axis, values, derivative)

    def momentum(self, wave, g):
        axis = self.realization.axis[g]
        grid = wave.grids[axis]
        return wave.multiply(axis, grid, np.ones_like(grid))

    def position(self, wave, g):
        """X psi = i sum_m Phi_{g m} d_m psi + (i/2)(div Phi_g) psi."""
        terms = []
        for m, phi in self.realization.components(g).items():
            moved = self._multiply_form(wave.differentiate(self.realization.axis[m]), phi)
            terms.extend(moved.scale(1j).terms)
        for form in self.realization.divergence(g):
            terms.extend(self._multiply_form(wave, form).scale(0.5j).terms)
        return SeparableWave(wave.grids, terms)

    def generator(self, wave, g):
        return self.position(wave, g) if is_position(g) else self.momentum(wave, g)

    def commutator_rhs(self, wave, bound):
        """C psi for C = [A, B] in closed form when available, else from the series."""
        form = bound.closed_form
        if form is not None and (form.shape != 'linear' or not is_position(form.generator)):
            return self._multiply_form(wave, form)
        terms = []
        for word, coeff in bound.commutator.terms.items():
            image = wave.scale(coeff.evaluate(self.s_value))
            for g in reversed(word):
                image = self.generator(image, g)
            terms.extend(image.terms)
        return SeparableWave(wave.grids, terms)


def measure(operators, state, bound, n_points, half_width):
    grids = state.grids(n_points, half_width)
    psi = SeparableWave.from_state(state, grids)
    a_psi = operators.generator(psi, bound.a)
    b_psi = operators.generator(psi, bound.b)
    mean_a = psi.inner(a_psi).real
    mean_b = psi.inner(b_psi).real
    delta_a = np.sqrt(max(a_psi.inner(a_psi).real - mean_a ** 2, 0.0))
    delta_b = np.sqrt(max(b_psi.inner(b_psi).real - mean_b ** 2, 0.0))
    return {
        'norm': psi.inner(psi).real,
        'delta_a': delta_a,
        'delta_b': delta_b,
        'realized': a_psi.inner(b_psi) - b_psi.inner(a_psi),
        'symbolic': psi.inner(operators.commutator_rhs(psi, bound)),
    }


def _agrees(old, new, tol, atol=1e-13):
    keys = ('delta_a', 'delta_b', 'realized', 'symbolic')
    return all(abs(new[k] - old[k]) <= tol * max(abs(new[k]), abs(old[k])) + atol for k in keys)


def converged_measure(operators, state, bound, params):
    """Measure on a grid doubled until two successive results agree."""
    n_points = params['grid_points']
    previous = measure(operators, state, bound, n_points, params['half_width'])
    for _ in range(params['max_refinements']):
        n_points *= 2
        current = measure(operators, state, bound, n_points, params['half_width'])
        if _agrees(previous, current, params['convergence_tol']):
            current['grid_points'] = n_points
            return current
        previous = current
    raise QuadratureError(
        f'Quadrature did not converge for {bound} after {params["max_refinements"]} refinements')


class NumericReport:

    def __init__(self, table, rows, vector_fields):
        self.table = table
        self.rows = rows
        self.vector_fields = vector_fields

    @property
    def passed(self):
        return self.vector_fields.passed and all(row['passed'] for row in self.rows)

    def to_frame(self):
        return pd.DataFrame(self.rows)

    def summary(self):
        df = self.to_frame()
        if df.empty:
            return f'numeric {self.table.regime}: no bounds'
        return (f'numeric {self.table.regime} {self.table.carrier.case}: '
                f'{int(df["passed"].sum())}/{len(df)} passed, min slack {df["slack"].min():.3e}')

    def to_json(self):
        df = self.to_frame()
        return {
            'passed': self.passed,
            'vector_fields': self.vector_fields.to_json(),
            'checks': len(df),
            'failures': int((~df['passed']).sum()) if not df.empty else 0,
            'min_slack': float(df['slack'].min()) if not df.empty else None,
        }


def run_numeric_check(table, params=None, verbose=False):
    """Robertson slack and realized-versus-symbolic commutators on random Gaussian states."""
    params = params or setup_numeric_params()
    realization = realize(table)
    operators = WaveOperators(realization, 1.0 / (2.0 * params['xi']))
    rng = np.random.default_rng(params['seed'])
    table_bounds = bounds(table)

    rows = []
    states = [GaussianState.random(rng, len(realization.momenta), params) for _ in range(params['n_states'])]
    for i, state in enumerate(tqdm(states, desc='numeric', disable=not verbose)):
        for bound in table_bounds:
            result = converged_measure(operators, state, bound, params)
            product = result['delta_a'] * result['delta_b']
            slack = product - 0.5 * abs(result['realized'])
            gap = abs(result['realized'] - result['symbolic'])
            scale = max(abs(result['realized']), abs(result['symbolic']))
            consistent = gap <= params['consistency_rtol'] * scale + params['consistency_atol']
            normalized = abs(result['norm'] - 1.0) <= params['norm_tol']
            rows.append({
                'state': i,
                'bound': f'[{label(bound.a)}, {label(bound.b)}]',
                'delta_product': product,
                'rhs': 0.5 * abs(result['realized']),
                'slack': slack,
                'commutator_gap': gap,
                'grid_points': result['grid_points'],
                'passed': bool(slack >= -params['slack_tol'] and consistent and normalized),
            })

    return NumericReport(table, rows, realization.vector_field_check())
