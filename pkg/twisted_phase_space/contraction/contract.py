from dataclasses import dataclass

from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import GALILEAN_PHASE, label
from twisted_phase_space.algebra.substitute import GradedExpr, substitute
from twisted_phase_space.contraction.setup_contraction import CASE_OF_CARRIER, setup_contraction_scheme
from twisted_phase_space.heisenberg_double.phase_space import PhaseSpaceTable


class ContractionError(ValueError):
    pass


@dataclass
class ScaledTable:
    """Relations after x_0 = c t, p_0 = pi_0/c and the parameter rescaling, graded by c."""
    table: PhaseSpaceTable
    scheme: object
    relations: dict


@dataclass
class LimitResult:
    lhs: tuple
    graded: GradedExpr
    limit: NCExpr
    divergent: bool

    @property
    def leading_power(self):
        return self.graded.leading_power()


def rescale(table, scheme):
    """Substitute the Galilean variables into every relation and divide by the LHS scale."""
    if table.regime != 'relativistic':
        raise ContractionError(f'Only relativistic tables contract, got {table.regime}')
    if table.carrier.case != scheme.carrier:
        raise ContractionError(
            f'Contraction case {scheme.case} expects carrier {scheme.carrier}, got {table.carrier.case}')
    mapping = scheme.mapping()
    relations = {}
    for (g1, g2), relation in table.relations.items():
        k1, h1 = mapping[g1]
        k2, h2 = mapping[g2]
        graded = substitute(relation.series, mapping, scheme.parameter_weight).shift(-(k1 + k2))
        relations[(h1, h2)] = graded
    return ScaledTable(table, scheme, relations)


def limit_results(scaled):
    """c -> infinity relation by relation: keep c^0, drop negative powers, flag positive ones."""
    results = {}
    order = scaled.table.order
    for lhs, graded in scaled.relations.items():
        leading = graded.leading_power()
        divergent = leading is not None and leading > 0
        results[lhs] = LimitResult(lhs, graded, graded.component(0).with_order(order), divergent)
    return results


def take_limit(scaled):
    results = limit_results(scaled)
    divergent = [r for r in results.values() if r.divergent]
    if divergent:
        names = ', '.join(f'[{label(r.lhs[0])}, {label(r.lhs[1])}] ~ c^{r.leading_power}' for r in divergent)
        raise ContractionError(f'Contraction diverges: {names}')
    table = scaled.table
    brackets = {lhs: r.limit for lhs, r in results.items()}
    return PhaseSpaceTable.from_series(table.carrier, table.order, 'galilean', scaled.scheme.parameter,
                                       GALILEAN_PHASE, brackets)


def contract(table, scheme=None):
    """Galilean table of a relativistic one; the scheme defaults to the carrier's case."""
    if scheme is None:
        scheme = setup_contraction_scheme(CASE_OF_CARRIER[table.carrier.case])
    return take_limit(rescale(table, scheme))
