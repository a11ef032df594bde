from itertools import combinations

from tqdm import tqdm

from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import POINCARE, label
from twisted_phase_space.algebra.rewrite import commutator
from twisted_phase_space.algebra.series import DEFAULT_ORDER
from twisted_phase_space.algebra.tensor import TensorExpr, tensor_mul, tensor_commutator, normal_order_tensor
from twisted_phase_space.poincare.classical import classical_rules, primitive_coproduct_word
from twisted_phase_space.poincare.twist import twisted_poincare
from twisted_phase_space.utils.reports import CheckReport


def coassociativity_residual(hopf, g):
    delta = hopf.coproduct(g)
    left = delta.expand_leg(0, hopf.coproduct_word)
    right = delta.expand_leg(1, hopf.coproduct_word)
    return left - right


def counit_residuals(hopf, g):
    gen = NCExpr.generator(g, hopf.order)
    delta = hopf.coproduct(g)
    left = delta.contract_leg(0, hopf.counit).to_expr()
    right = delta.contract_leg(1, hopf.counit).to_expr()
    return left - gen, right - gen


def homomorphism_residual(hopf, g1, g2):
    rules = hopf.rules
    bracket = commutator(NCExpr.generator(g1, hopf.order), NCExpr.generator(g2, hopf.order), rules)
    lhs = hopf.coproduct_expr(bracket)
    rhs = tensor_commutator(hopf.coproduct(g1), hopf.coproduct(g2), rules)
    return lhs - rhs


def two_cocycle_residual(hopf):
    """(F (x) 1)(Delta_0 (x) id)F - (1 (x) F)(id (x) Delta_0)F."""
    rules = classical_rules()
    twist = hopf.twist

    def primitive(word):
        return normal_order_tensor(primitive_coproduct_word(word, hopf.order), rules)

    left = tensor_mul(twist.append_unit(2), twist.expand_leg(0, primitive), rules)
    right = tensor_mul(twist.append_unit(0), twist.expand_leg(1, primitive), rules)
    return left - right


def twist_inverse_residual(hopf):
    product = tensor_mul(hopf.twist, hopf.twist_inv, hopf.rules)
    return product - TensorExpr.unit(2, hopf.order)


def hopf_report(carrier, order=DEFAULT_ORDER, generators=POINCARE, homomorphism=True, verbose=False):
    """Coassociativity, counit, homomorphism, 2-cocycle and F F^{-1} = 1 (x) 1."""
    hopf = twisted_poincare(carrier, order)
    report = CheckReport('hopf')

    report.add('F F^-1 = 1', twist_inverse_residual(hopf).is_zero())
    report.add('2-cocycle', two_cocycle_residual(hopf).is_zero())

    for g in tqdm(generators, desc='coassociativity', disable=not verbose):
        residual = coassociativity_residual(hopf, g)
        report.add(f'coassociativity {label(g)}', residual.is_zero(), '' if residual.is_zero() else str(residual))
        left, right = counit_residuals(hopf, g)
        report.add(f'counit {label(g)}', left.is_zero() and right.is_zero())

    if homomorphism:
        pairs = list(combinations(generators, 2))
        for g1, g2 in tqdm(pairs, desc='homomorphism', disable=not verbose):
            residual = homomorphism_residual(hopf, g1, g2)
            report.add(f'homomorphism [{label(g1)}, {label(g2)}]', residual.is_zero())

    return report
