from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import pandas as pd

from twisted_phase_space.algebra.closed_form import ClosedForm
from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import Generator, is_momentum, label, latex_label
from twisted_phase_space.algebra.scalar import I
from twisted_phase_space.utils.reports import CheckReport

PARAMETER_TEXT = {'s': 'xi', 'shat': 'xi_hat', 'sbar': 'xi_bar'}


@dataclass(frozen=True)
class UncertaintyBound:
    """Delta(A) Delta(B) >= |<[A, B]>| / 2."""
    a: Generator
    b: Generator
    commutator: NCExpr
    closed_form: ClosedForm
    regime: str
    parameter: str = 's'

    @property
    def lhs(self):
        return (self.a, self.b)

    def rhs_text(self):
        if self.closed_form is None:
            return f'|<{self.commutator.to_str(self.parameter)}>|/2'
        return magnitude_text(self.closed_form, PARAMETER_TEXT[self.parameter])

    def __str__(self):
        return f'Delta({label(self.a)}) Delta({label(self.b)}) >= {self.rhs_text()}'

    def to_latex(self):
        rhs = (f'\\tfrac{{1}}{{2}}\\left|\\langle {self.closed_form.to_latex()} \\rangle\\right|'
               if self.closed_form is not None else f'\\tfrac{{1}}{{2}}|\\langle C \\rangle|')
        return f'\\Delta({latex_label(self.a)})\\,\\Delta({latex_label(self.b)}) \\geq {rhs}'

    def to_json(self):
        return {
            'lhs': [label(self.a), label(self.b)],
            'rhs': self.rhs_text(),
            'closed_form': str(self.closed_form) if self.closed_form is not None else None,
        }


def _abs_rational(value):
    if value.is_real():
        return abs(value.re)
    if value.is_imaginary():
        return abs(value.im)
    return None


def magnitude_text(form, xi='xi'):
    """|C|/2 written with s = 1/(2 xi), e.g. |<x_2>|/(2xi)."""
    magnitude = _abs_rational(form.prefactor)
    if magnitude is None:
        return f'|<{form}>|/2'
    value = magnitude / 2 / Fraction(2) ** form.s_power
    if form.shape == 'constant':
        body = ''
    elif form.shape == 'linear':
        body = f'|<{label(form.generator)}>|'
    else:
        m = '' if form.multiple == 1 else f'{form.multiple}*'
        body = f'|<{form.shape}({m}{label(form.generator)}/(2{xi}))>|'
    numerator = body if value.numerator == 1 and body else f'{value.numerator}{body}'
    xi_part = '' if not form.s_power else (xi if form.s_power == 1 else f'{xi}^{form.s_power}')
    denominator = f'{value.denominator if value.denominator != 1 or not xi_part else ""}{xi_part}'
    if not denominator or denominator == '1':
        return numerator
    if xi_part:
        return f'{numerator}/({denominator})'
    return f'{numerator}/{denominator}'


def bounds(table):
    """One Robertson bound per non-zero position-position or position-momentum relation."""
    result = []
    for relation in table.nonzero_entries():
        g1, g2 = relation.lhs
        if is_momentum(g1) and is_momentum(g2):
            continue
        result.append(UncertaintyBound(g1, g2, relation.series, relation.closed_form,
                                       table.regime, table.parameter))
    return result


def minimal_momenta(table, xi=1.0, n_values=(0, 1, 2)):
    """Deformed [x, p] functions at momenta 2 xi n pi, where sin vanishes and cos is (-1)^n."""
    rows = []
    s_value = 1.0 / (2.0 * xi)
    for relation in table.nonzero_entries():
        form = relation.closed_form
        if form is None or form.shape not in ('sin', 'cos', 'sinh', 'cosh'):
            continue
        for n in n_values:
            momentum_value = 2.0 * xi * n * np.pi / float(form.multiple)
            rows.append({
                'relation': f'[{label(relation.lhs[0])}, {label(relation.lhs[1])}]',
                'n': n,
                'momentum': momentum_value,
                'value': form.evaluate({form.generator: momentum_value}, s_value),
            })
    return pd.DataFrame(rows, columns=['relation', 'n', 'momentum', 'value'])


def classical_limit_check(table):
    """Order-0 bounds are exactly Delta(x_mu) Delta(p_mu) >= 1/2, one per axis."""
    report = CheckReport(f'classical limit {table.regime} {table.carrier.case}')
    classical = bounds(table.truncate(0))
    momenta = [g for g in table.generators if is_momentum(g)]
    report.add('bound count', len(classical) == len(momenta), f'{len(classical)} bounds')
    for bound in classical:
        same_axis = bound.a.indices == bound.b.indices or {bound.a.kind, bound.b.kind} == {'t', 'pi'}
        unit = bound.commutator.is_scalar() and bound.commutator.scalar_part().coefficient(0) in (I, -I)
        report.add(f'Delta({label(bound.a)}) Delta({label(bound.b)})', same_axis and unit, bound.rhs_text())
    return report
