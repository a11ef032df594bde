from dataclasses import dataclass, replace
from fractions import Fraction
from math import factorial, isqrt

import numpy as np
import sympy

from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import Generator, label, latex_label, parse_label
from twisted_phase_space.algebra.scalar import Scalar, ZERO, ONE
from twisted_phase_space.algebra.series import DeformSeries

SHAPES = ('constant', 'linear', 'sin', 'cos', 'sinh', 'cosh')

PARAMETER_LATEX = {
    's': r'\xi',
    'shat': r'\hat{\xi}',
    'sbar': r'\bar{\xi}',
}

NUMPY_FUNCS = {'sin': np.sin, 'cos': np.cos, 'sinh': np.sinh, 'cosh': np.cosh}
SYMPY_FUNCS = {'sin': sympy.sin, 'cos': sympy.cos, 'sinh': sympy.sinh, 'cosh': sympy.cosh}

# d/dz f(z) = sign * g(z)
DERIVATIVES = {'sin': ('cos', 1), 'cos': ('sin', -1), 'sinh': ('cosh', 1), 'cosh': ('sinh', 1)}


@dataclass(frozen=True)
class ClosedForm:
    """prefactor * s^s_power * f(multiple * s * generator).

    f is 1 for 'constant', the generator itself for 'linear' and one of the
    trigonometric or hyperbolic functions otherwise.
    """
    shape: str
    prefactor: Scalar = ZERO
    generator: Generator = None
    multiple: Fraction = Fraction(1)
    s_power: int = 0
    parameter: str = 's'

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise ValueError(f'Incorrect closed form shape specified: {self.shape}')

    def is_zero(self):
        return not self.prefactor

    def parity(self):
        """0 if the form is even in the parameter, 1 if odd."""
        odd = 1 if self.shape in ('sin', 'sinh') else 0
        return (self.s_power + odd) % 2

    def series_coefficient(self, n):
        """Coefficient of (s g)^n in f(multiple * s * g)."""
        m = self.multiple
        if self.shape == 'cos' and n % 2 == 0:
            return Fraction((-1) ** (n // 2)) * m ** n / factorial(n)
        if self.shape == 'cosh' and n % 2 == 0:
            return m ** n / factorial(n)
        if self.shape == 'sin' and n % 2 == 1:
            return Fraction((-1) ** ((n - 1) // 2)) * m ** n / factorial(n)
        if self.shape == 'sinh' and n % 2 == 1:
            return m ** n / factorial(n)
        return Fraction(0)

    def expand(self, order):
        """Truncated NCExpr with powers of s up to `order`."""
        k = self.s_power
        if self.shape == 'constant':
            return NCExpr.scalar(DeformSeries.monomial(self.prefactor, k, order), order)
        if self.shape == 'linear':
            return NCExpr.word((self.generator,), DeformSeries.monomial(self.prefactor, k, order), order)
        terms = {}
        for n in range(0, order - k + 1):
            c = self.series_coefficient(n)
            if c:
                terms[(self.generator,) * n] = DeformSeries.monomial(self.prefactor * c, n + k, order)
        return NCExpr(terms, order)

    def derivative(self, g):
        """d/dg as another ClosedForm."""
        zero = ClosedForm('constant', ZERO, parameter=self.parameter)
        if self.shape == 'constant' or self.generator != g:
            return zero
        if self.shape == 'linear':
            return ClosedForm('constant', self.prefactor, None, Fraction(1), self.s_power, self.parameter)
        shape, sign = DERIVATIVES[self.shape]
        return replace(self, shape=shape, prefactor=self.prefactor * Scalar(sign * self.multiple),
                       s_power=self.s_power + 1)

    def evaluate(self, values, s_value):
        """Numeric value; `values` maps generators to arrays."""
        coeff = complex(self.prefactor) * s_value ** self.s_power
        if self.shape == 'constant':
            return coeff
        arg = values[self.generator]
        if self.shape == 'linear':
            return coeff * arg
        return coeff * NUMPY_FUNCS[self.shape](float(self.multiple) * s_value * arg)

    def to_sympy(self, symbols, s_symbol):
        coeff = (sympy.Rational(self.prefactor.re.numerator, self.prefactor.re.denominator)
                 + sympy.I * sympy.Rational(self.prefactor.im.numerator, self.prefactor.im.denominator))
        coeff = coeff * s_symbol ** self.s_power
        if self.shape == 'constant':
            return coeff
        arg = symbols[self.generator]
        if self.shape == 'linear':
            return coeff * arg
        m = sympy.Rational(self.multiple.numerator, self.multiple.denominator)
        return coeff * SYMPY_FUNCS[self.shape](m * s_symbol * arg)

    def __str__(self):
        factors = []
        if self.s_power:
            factors.append(self.parameter if self.s_power == 1 else f'{self.parameter}^{self.s_power}')
        if self.shape == 'linear':
            factors.append(label(self.generator))
        elif self.shape != 'constant':
            m = '' if self.multiple == 1 else f'{self.multiple}*'
            factors.append(f'{self.shape}({m}{self.parameter}*{label(self.generator)})')
        return _join(self.prefactor, factors)

    def to_latex(self):
        xi = PARAMETER_LATEX[self.parameter]
        if not self.prefactor:
            return '0'
        # s = 1/(2 xi)
        value = self.prefactor / Scalar(2 ** self.s_power)
        body = ''
        if self.shape == 'linear':
            body = ' ' + latex_label(self.generator)
        elif self.shape != 'constant':
            m = '' if self.multiple == 1 else f'{self.multiple} '
            body = (f'\\{self.shape}\\left(\\frac{{{m}{latex_label(self.generator)}}}'
                    f'{{2{xi}}}\\right)')
        return latex_coefficient(value, self.s_power, xi, bool(body)) + body

    def to_json(self):
        return {
            'shape': self.shape,
            'prefactor': self.prefactor.to_json(),
            'generator': label(self.generator) if self.generator else None,
            'multiple': str(self.multiple),
            's_power': self.s_power,
            'parameter': self.parameter,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            obj['shape'],
            Scalar.from_json(obj['prefactor']),
            parse_label(obj['generator']) if obj['generator'] else None,
            Fraction(obj['multiple']),
            obj['s_power'],
            obj['parameter'],
        )


def _join(prefactor, factors):
    if not factors:
        return str(prefactor)
    if prefactor == ONE:
        return '*'.join(factors)
    if prefactor == -ONE:
        return '-' + '*'.join(factors)
    return f'{prefactor}*' + '*'.join(factors)


def latex_coefficient(value, power, xi, has_body):
    if value.is_imaginary():
        magnitude, unit = value.im, 'i'
    elif value.is_real():
        magnitude, unit = value.re, ''
    else:
        text = f'({value.re}{"+" if value.im > 0 else "-"}{abs(value.im)}i)'
        return text + (f'/{xi}^{{{power}}}' if power else '')
    sign = '-' if magnitude < 0 else ''
    magnitude = abs(magnitude)
    numerator = unit if magnitude.numerator == 1 and unit else f'{magnitude.numerator}{unit}'
    if not power:
        if magnitude.denominator == 1:
            if numerator == '1' and has_body:
                return sign
            return sign + numerator
        return f'{sign}({numerator}/{magnitude.denominator})'
    denominator = '' if magnitude.denominator == 1 else str(magnitude.denominator)
    xi_power = xi if power == 1 else f'{xi}^{{{power}}}'
    return f'{sign}({numerator}/{denominator}{xi_power})'


def _rational_sqrt(value):
    if value <= 0:
        return None
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def recognize_closed_form(expr, parameter='s'):
    """Recognize constant, linear or trig/hyperbolic shapes, in that order.

    Returns None when no shape reproduces the truncated series exactly.
    """
    view = expr.series_view()
    entries = [(n, w, c) for n, words in view.items() for w, c in words.items()]
    if not entries:
        return ClosedForm('constant', ZERO, parameter=parameter)

    if len(entries) == 1:
        n, word, c = entries[0]
        if not word:
            return ClosedForm('constant', c, s_power=n, parameter=parameter)
        if len(word) == 1:
            return ClosedForm('linear', c, word[0], s_power=n, parameter=parameter)

    letters = {g for _, w, _ in entries for g in w}
    if len(letters) != 1:
        return None
    g = letters.pop()
    if any(set(w) - {g} for _, w, _ in entries):
        return None
    shifts = {n - len(w) for n, w, _ in entries}
    if len(shifts) != 1:
        return None
    k = shifts.pop()
    by_length = {len(w): c for _, w, c in entries}
    lowest = min(by_length)
    order = expr.order if expr.order is not None else max(n for n, _, _ in entries)

    if lowest == 0:
        candidates = (('cos', 2), ('cosh', 2))
    elif lowest == 1:
        candidates = (('sin', 6), ('sinh', 6))
    else:
        return None
    base = by_length[lowest]
    ratio = by_length.get(lowest + 2)
    if ratio is None:
        return None
    ratio = ratio / base
    if not ratio.is_real():
        return None

    for shape, scale in candidates:
        sign = -1 if shape in ('cos', 'sin') else 1
        m = _rational_sqrt(sign * scale * ratio.re)
        if m is None:
            continue
        prefactor = base if lowest == 0 else base / Scalar(m)
        form = ClosedForm(shape, prefactor, g, m, k, parameter)
        if form.expand(order) == expr.truncate(order):
            return form
    return None
