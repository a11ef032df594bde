from itertools import combinations

from tqdm import tqdm

from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import GROUP, label
from twisted_phase_space.algebra.rewrite import commutator
from twisted_phase_space.algebra.series import DEFAULT_ORDER
from twisted_phase_space.algebra.tensor import tensor_commutator
from twisted_phase_space.dual_group.group_rules import DualGroup
from twisted_phase_space.utils.reports import CheckReport

TRANSLATIONS = tuple(g for g in GROUP if g.kind == 'a')
MATRICES = tuple(g for g in GROUP if g.kind == 'L')


def jacobi_residual(g1, g2, g3, rules, order=None):
    e1, e2, e3 = (NCExpr.generator(g, order) for g in (g1, g2, g3))
    return (commutator(commutator(e1, e2, rules), e3, rules)
            + commutator(commutator(e2, e3, rules), e1, rules)
            + commutator(commutator(e3, e1, rules), e2, rules))


def group_consistency(carrier, order=DEFAULT_ORDER, verbose=False):
    """Jacobi closure, coproduct homomorphism, coassociativity and counit of the dual group."""
    group = DualGroup(carrier, order)
    rules = group.rules
    report = CheckReport('group')

    triples = list(combinations(TRANSLATIONS, 3))
    triples += [(a1, a2, m) for a1, a2 in combinations(TRANSLATIONS, 2) for m in MATRICES]
    for triple in tqdm(triples, desc='group jacobi', disable=not verbose):
        residual = jacobi_residual(*triple, rules, order)
        report.add('jacobi {' + ', '.join(label(g) for g in triple) + '}', residual.is_zero(),
                   '' if residual.is_zero() else str(residual))

    pairs = list(combinations(TRANSLATIONS, 2))
    pairs += [(t, m) for t in TRANSLATIONS for m in MATRICES]
    for g1, g2 in tqdm(pairs, desc='group homomorphism', disable=not verbose):
        bracket = commutator(NCExpr.generator(g1, order), NCExpr.generator(g2, order), rules)
        lhs = group.coproduct_expr(bracket)
        rhs = tensor_commutator(group.coproduct_word((g1,)), group.coproduct_word((g2,)), rules)
        report.add(f'homomorphism [{label(g1)}, {label(g2)}]', (lhs - rhs).is_zero())

    for g in GROUP:
        delta = group.coproduct(g)
        left = delta.expand_leg(0, group.coproduct_word)
        right = delta.expand_leg(1, group.coproduct_word)
        report.add(f'coassociativity {label(g)}', (left - right).is_zero())
        gen = NCExpr.generator(g, order)
        counit_left = delta.contract_leg(0, group.counit).to_expr()
        counit_right = delta.contract_leg(1, group.counit).to_expr()
        report.add(f'counit {label(g)}', counit_left == gen and counit_right == gen)

    return report
