from dataclasses import dataclass, replace
from itertools import combinations

from tqdm import tqdm

from twisted_phase_space.algebra.closed_form import ClosedForm, recognize_closed_form
from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import (
    RELATIVISTIC_PHASE, a, is_momentum, is_position, label, sort_key, x, p, P)
from twisted_phase_space.algebra.rewrite import RewriteRuleset, commutator
from twisted_phase_space.algebra.series import DEFAULT_ORDER
from twisted_phase_space.dual_group.consistency import jacobi_residual
from twisted_phase_space.dual_group.group_rules import group_bracket
from twisted_phase_space.heisenberg_double.cross_relations import CrossRelations
from twisted_phase_space.poincare.classical import classical_rules
from twisted_phase_space.poincare.setup_carrier import ETA
from twisted_phase_space.utils.reports import CheckReport

REGIMES = ('relativistic', 'galilean')


@dataclass(frozen=True)
class PhaseRelation:
    lhs: tuple
    series: NCExpr
    closed_form: ClosedForm = None

    def __str__(self):
        rhs = str(self.closed_form) if self.closed_form is not None else self.series.to_str()
        return f'[{label(self.lhs[0])}, {label(self.lhs[1])}] = {rhs}'


class PhaseSpaceTable:
    """Commutators of all canonical pairs of phase-space generators."""

    def __init__(self, carrier, order, regime, parameter, generators, relations):
        if regime not in REGIMES:
            raise ValueError(f'Incorrect regime specified: {regime}')
        self.carrier = carrier
        self.order = order
        self.regime = regime
        self.parameter = parameter
        self.generators = tuple(sorted(generators, key=sort_key))
        self.relations = {}
        for (g1, g2), relation in relations.items():
            if sort_key(g1) > sort_key(g2):
                g1, g2 = g2, g1
                relation = PhaseRelation((g1, g2), -relation.series,
                                         _negate(relation.closed_form))
            self.relations[(g1, g2)] = relation
        self._rules = None

    @classmethod
    def from_series(cls, carrier, order, regime, parameter, generators, brackets):
        relations = {}
        for (g1, g2), series in brackets.items():
            relations[(g1, g2)] = PhaseRelation((g1, g2), series, recognize_closed_form(series, parameter))
        return cls(carrier, order, regime, parameter, generators, relations)

    def pairs(self):
        return list(combinations(self.generators, 2))

    def relation(self, g1, g2):
        if sort_key(g1) > sort_key(g2):
            g1, g2 = g2, g1
        return self.relations[(g1, g2)]

    def bracket(self, g1, g2):
        if g1 == g2:
            return NCExpr.zero(self.order)
        if sort_key(g1) > sort_key(g2):
            return -self.relations[(g2, g1)].series
        return self.relations[(g1, g2)].series

    def entries(self):
        return [self.relations[pair] for pair in self.pairs()]

    def nonzero_entries(self):
        return [relation for relation in self.entries() if not relation.series.is_zero()]

    def rules(self):
        if self._rules is None:
            self._rules = RewriteRuleset(
                {(g2, g1): -self.bracket(g1, g2) for g1, g2 in self.pairs()},
                name=f'{self.regime} phase space').freeze()
        return self._rules

    def with_relation(self, g1, g2, series):
        """Copy with one relation replaced."""
        relations = dict(self.relations)
        if sort_key(g1) > sort_key(g2):
            g1, g2, series = g2, g1, -series
        relations[(g1, g2)] = PhaseRelation((g1, g2), series, recognize_closed_form(series, self.parameter))
        return PhaseSpaceTable(self.carrier, self.order, self.regime, self.parameter, self.generators, relations)

    def truncate(self, order):
        brackets = {pair: rel.series.truncate(order).with_order(order) for pair, rel in self.relations.items()}
        return PhaseSpaceTable.from_series(self.carrier, order, self.regime, self.parameter,
                                           self.generators, brackets)

    def __eq__(self, other):
        if not isinstance(other, PhaseSpaceTable):
            return NotImplemented
        return (self.regime == other.regime and self.generators == other.generators
                and all(self.bracket(*pair) == other.bracket(*pair) for pair in self.pairs()))

    def __str__(self):
        return '\n'.join(str(relation) for relation in self.entries())


def _negate(form):
    if form is None:
        return None
    return replace(form, prefactor=-form.prefactor)


def _to_phase(g):
    """a^mu -> eta_{mu mu} x_mu and P_mu -> p_mu as (sign, Generator)."""
    if g.kind == 'a':
        return ETA.sign(g.indices[0]), x(g.indices[0])
    if g.kind == 'P':
        return 1, p(g.indices[0])
    raise ValueError(f'Relation leaves the phase-space alphabet: {label(g)}')


def to_phase_expr(expr):
    terms = {}
    for word, coeff in expr.terms.items():
        sign, new = 1, []
        for g in word:
            s, image = _to_phase(g)
            sign *= s
            new.append(image)
        new = tuple(new)
        value = coeff * sign
        terms[new] = terms[new] + value if new in terms else value
    return NCExpr(terms, expr.order)


def _position_bracket(mu, nu, carrier, order):
    return to_phase_expr(group_bracket(a(mu), a(nu), carrier, order)).scale(ETA.sign(mu) * ETA.sign(nu))


def build_phase_space(carrier, order=DEFAULT_ORDER):
    """Relativistic phase space: x_mu = eta_{mu mu} a^mu, p_mu = P_mu."""
    cross = CrossRelations(carrier, order)
    rules = classical_rules()
    brackets = {}
    for g1, g2 in combinations(RELATIVISTIC_PHASE, 2):
        (mu,), (nu,) = g1.indices, g2.indices
        if g1.kind == 'x' and g2.kind == 'x':
            series = _position_bracket(mu, nu, carrier, order)
        elif g1.kind == 'x' and g2.kind == 'p':
            series = to_phase_expr(cross.bracket(a(mu), P(nu))).scale(ETA.sign(mu))
        else:
            series = to_phase_expr(commutator(NCExpr.generator(P(mu)), NCExpr.generator(P(nu)), rules))
        brackets[(g1, g2)] = series.with_order(order)
    return PhaseSpaceTable.from_series(carrier, order, 'relativistic', 's', RELATIVISTIC_PHASE, brackets)


def jacobi_check(table, verbose=False):
    """Closure of all 56 generator triples under the table's own rules."""
    rules = table.rules()
    report = CheckReport(f'jacobi {table.regime}')
    triples = list(combinations(table.generators, 3))
    for triple in tqdm(triples, desc='jacobi', disable=not verbose):
        residual = jacobi_residual(*triple, rules, table.order)
        report.add('{' + ', '.join(label(g) for g in triple) + '}', residual.is_zero(),
                   '' if residual.is_zero() else residual.to_str(table.parameter))
    return report


def parity_check(table):
    """[position, momentum] brackets are even or odd in the parameter, as their closed forms say.

    A bracket with no recognized closed form must still have a definite parity.
    """
    report = CheckReport(f'parity {table.regime} {table.carrier.case}')
    for g1, g2 in table.pairs():
        if not (is_position(g1) and is_momentum(g2)):
            continue
        relation = table.relation(g1, g2)
        series = relation.series
        if series.is_zero():
            continue
        reflected = series.reflect()
        if relation.closed_form is not None:
            passed = reflected == (-series if relation.closed_form.parity() else series)
        else:
            passed = reflected == series or reflected == -series
        report.add(f'[{label(g1)}, {label(g2)}]', passed,
                   '' if passed else f'{series.to_str(table.parameter)} against {relation.closed_form}')
    return report
