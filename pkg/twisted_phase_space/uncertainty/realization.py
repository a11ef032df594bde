from dataclasses import replace
from itertools import combinations

import sympy

from twisted_phase_space.algebra.generators import is_momentum, is_position, label
from twisted_phase_space.algebra.scalar import I
from twisted_phase_space.utils.reports import CheckReport


class RealizationError(RuntimeError):
    pass


class MomentumRealization:
    """Positions as first-order differential operators in momentum space.

    X_mu = i sum_nu Phi_{mu nu}(p) d/dp_nu, with i Phi_{mu nu} = [x_mu, p_nu]
    from the table's closed forms. Momenta act by multiplication.
    """

    def __init__(self, table):
        self.table = table
        self.positions = [g for g in table.generators if is_position(g)]
        self.momenta = [g for g in table.generators if is_momentum(g)]
        self.axis = {m: i for i, m in enumerate(self.momenta)}

        for m1, m2 in combinations(self.momenta, 2):
            if not table.bracket(m1, m2).is_zero():
                raise RealizationError(f'Momenta do not commute: [{label(m1)}, {label(m2)}]')

        self.phi = {}
        for g in self.positions:
            for m in self.momenta:
                relation = table.relation(g, m)
                if relation.series.is_zero():
                    continue
                form = relation.closed_form
                if form is None:
                    raise RealizationError(
                        f'No closed form for [{label(g)}, {label(m)}]: {relation.series.to_str(table.parameter)}')
                if form.shape != 'constant' and not is_momentum(form.generator):
                    raise RealizationError(f'[{label(g)}, {label(m)}] depends on positions')
                if relation.lhs[0] != g:
                    form = replace(form, prefactor=-form.prefactor)
                phi = replace(form, prefactor=form.prefactor / I)
                if not phi.prefactor.is_real():
                    raise RealizationError(f'[{label(g)}, {label(m)}] is not i times a real function')
                self.phi[(g, m)] = phi

    def components(self, g):
        """{momentum: Phi_{g m}} for one position generator."""
        return {m: self.phi[(g, m)] for m in self.momenta if (g, m) in self.phi}

    def divergence(self, g):
        """sum_m d Phi_{g m} / d p_m as a list of ClosedForms."""
        return [phi.derivative(m) for m, phi in self.components(g).items()
                if not phi.derivative(m).is_zero()]

    def symbols(self):
        return {m: sympy.Symbol(label(m).replace('_', ''), real=True) for m in self.momenta}

    def vector_field_check(self):
        """Symbolic [X_A, X_B] against the table's position-position relations."""
        order = self.table.order
        s = sympy.Symbol(self.table.parameter, positive=True)
        symbols = self.symbols()
        fields = {g: {m: phi.to_sympy(symbols, s) for m, phi in self.components(g).items()}
                  for g in self.positions}
        report = CheckReport(f'vector fields {self.table.regime}')

        for g1, g2 in combinations(self.positions, 2):
            rhs = self.table.bracket(g1, g2)
            expected = {m: sympy.Integer(0) for m in self.momenta}
            ok = True
            for word, coeff in rhs.terms.items():
                if len(word) != 1 or not is_position(word[0]):
                    ok = False
                    break
                c = sum((_to_sympy_scalar(v) * s ** n for n, v in coeff.items()), sympy.Integer(0))
                for m, component in fields[word[0]].items():
                    expected[m] += sympy.I * c * component
            if not ok:
                report.add(f'[{label(g1)}, {label(g2)}]', False, 'relation is not linear in positions')
                continue

            residuals = []
            for m in self.momenta:
                bracket = sympy.Integer(0)
                for n, v in fields[g1].items():
                    bracket += v * sympy.diff(fields[g2].get(m, 0), symbols[n])
                for n, v in fields[g2].items():
                    bracket -= v * sympy.diff(fields[g1].get(m, 0), symbols[n])
                # [X_A, X_B] = i^2 [V_A, V_B]
                residual = -bracket - expected[m]
                residuals.append(_truncated(residual, s, order))
            ok = all(r == 0 for r in residuals)
            report.add(f'[{label(g1)}, {label(g2)}]', ok, '' if ok else str(residuals))
        return report


def _to_sympy_scalar(value):
    return (sympy.Rational(value.re.numerator, value.re.denominator)
            + sympy.I * sympy.Rational(value.im.numerator, value.im.denominator))


def _truncated(expr, s, order):
    expr = sympy.expand(expr)
    if expr == 0:
        return 0
    return sympy.simplify(sympy.series(expr, s, 0, order + 1).removeO())


def realize(table):
    return MomentumRealization(table)
