from functools import lru_cache

from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import GROUP, POINCARE
from twisted_phase_space.algebra.series import DEFAULT_ORDER
from twisted_phase_space.dual_group.group_rules import group_coproduct, group_rules
from twisted_phase_space.heisenberg_double.pairing import HopfPairing
from twisted_phase_space.poincare.classical import classical_rules


class CrossRelations:
    """[Q, R] for Q in the dual group and R in the twisted algebra.

    Q R = sum R_(1) <Q_(1), R_(2)> Q_(2); the result has algebra words to the
    left of group words.
    """

    def __init__(self, carrier, order=DEFAULT_ORDER):
        self.carrier = carrier
        self.order = order
        self.pairing = HopfPairing(carrier, order)
        self._memo = {}

    def product(self, q, r):
        """Q R rewritten with R on the left."""
        result = {}
        r_coproduct = self.pairing.hopf.coproduct(r)
        for (q1, q2), qc in group_coproduct(q, self.order).terms.items():
            for (r1, r2), rc in r_coproduct.terms.items():
                weight = self.pairing.pair_words(q1, r2)
                if not weight:
                    continue
                value = qc * rc * weight
                word = r1 + q2
                result[word] = result[word] + value if word in result else value
        return NCExpr(result, self.order)

    def bracket(self, q, r):
        if (q, r) not in self._memo:
            self._memo[(q, r)] = self.product(q, r) - NCExpr.word((r, q), order=self.order)
        return self._memo[(q, r)]


def cross_relation(q, r, carrier, order=DEFAULT_ORDER):
    """[Q, R] in the Heisenberg double."""
    if q.kind not in ('L', 'a') or r.kind not in ('M', 'P'):
        raise ValueError(f'cross_relation takes a group and an algebra generator, got {q}, {r}')
    return CrossRelations(carrier, order).bracket(q, r)


@lru_cache(maxsize=8)
def heisenberg_rules(carrier, order=DEFAULT_ORDER):
    """Full ruleset of the Heisenberg double: algebra, group and cross relations."""
    cross = CrossRelations(carrier, order)
    rules = classical_rules().union(group_rules(carrier, order), name=f'heisenberg {carrier}')
    for q in GROUP:
        for r in POINCARE:
            rules.add(q, r, cross.bracket(q, r))
    return rules.freeze()


def lorentz_cross_relations(carrier, order=DEFAULT_ORDER):
    """[a^mu, M_{rho sigma}] and [Lambda^mu_nu, P_rho]; these stay outside the phase-space table."""
    cross = CrossRelations(carrier, order)
    relations = {}
    for q in GROUP:
        for r in POINCARE:
            if (q.kind, r.kind) in (('a', 'M'), ('L', 'P')):
                relations[(q, r)] = cross.bracket(q, r)
    return relations
