from functools import lru_cache
from itertools import combinations

from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import POINCARE
from twisted_phase_space.algebra.rewrite import RewriteRuleset
from twisted_phase_space.algebra.scalar import I
from twisted_phase_space.algebra.tensor import TensorExpr
from twisted_phase_space.poincare.setup_carrier import ETA, lorentz, momentum


def lorentz_momentum_bracket(mu, nu, rho):
    """[M_{mu nu}, P_rho] = i(eta_{nu rho} P_mu - eta_{mu rho} P_nu)."""
    expr = momentum(mu).scale(ETA(nu, rho)) - momentum(nu).scale(ETA(mu, rho))
    return expr.scale(I)


def lorentz_lorentz_bracket(mu, nu, rho, sigma):
    """[M_{mu nu}, M_{rho sigma}] = i(eta_{mu sigma} M_{nu rho} - eta_{nu sigma} M_{mu rho}
    + eta_{nu rho} M_{mu sigma} - eta_{mu rho} M_{nu sigma})."""
    expr = (lorentz(nu, rho).scale(ETA(mu, sigma))
            - lorentz(mu, rho).scale(ETA(nu, sigma))
            + lorentz(mu, sigma).scale(ETA(nu, rho))
            - lorentz(nu, sigma).scale(ETA(mu, rho)))
    return expr.scale(I)


def poincare_bracket(g1, g2):
    """Classical bracket of two Poincare generators."""
    if g1.kind == 'M' and g2.kind == 'M':
        return lorentz_lorentz_bracket(*g1.indices, *g2.indices)
    if g1.kind == 'M' and g2.kind == 'P':
        return lorentz_momentum_bracket(*g1.indices, *g2.indices)
    if g1.kind == 'P' and g2.kind == 'M':
        return -lorentz_momentum_bracket(*g2.indices, *g1.indices)
    if g1.kind == 'P' and g2.kind == 'P':
        return NCExpr.zero()
    raise ValueError(f'Not a Poincare generator pair: {g1}, {g2}')


@lru_cache(maxsize=None)
def classical_rules():
    """Undeformed Poincare relations (shared, memoized ruleset)."""
    rules = RewriteRuleset(name='poincare')
    for g1, g2 in combinations(POINCARE, 2):
        rules.add(g1, g2, poincare_bracket(g1, g2))
    return rules.freeze()


def primitive_coproduct(g, order=None):
    """Delta_0(g) = g (x) 1 + 1 (x) g."""
    gen = NCExpr.generator(g, order)
    unit = NCExpr.unit(order)
    return TensorExpr.product(gen, unit) + TensorExpr.product(unit, gen)


def primitive_coproduct_word(word, order=None):
    """Delta_0 extended multiplicatively to a word (not normal ordered)."""
    result = TensorExpr.unit(2, order)
    for g in word:
        step = primitive_coproduct(g, order)
        terms = {}
        for k1, c1 in result.terms.items():
            for k2, c2 in step.terms.items():
                key = (k1[0] + k2[0], k1[1] + k2[1])
                value = c1 * c2
                terms[key] = terms[key] + value if key in terms else value
        result = TensorExpr(terms, 2, order)
    return result
