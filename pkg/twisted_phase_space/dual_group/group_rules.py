from functools import lru_cache
from itertools import combinations

from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import GROUP, SPACETIME, L, a
from twisted_phase_space.algebra.rewrite import RewriteRuleset, normal_order
from twisted_phase_space.algebra.scalar import Scalar, ONE
from twisted_phase_space.algebra.series import DeformSeries, DEFAULT_ORDER
from twisted_phase_space.algebra.tensor import TensorExpr, tensor_mul
from twisted_phase_space.poincare.setup_carrier import ETA, delta

# Lorentz matrix entries commute among themselves
COMMUTING = RewriteRuleset(name='commuting').freeze()


def _lowered_translation(beta):
    """a_beta = eta_{beta beta} a^beta."""
    return NCExpr.generator(a(beta)).scale(ETA(beta, beta))


def _lowered_matrix(alpha, rho):
    """Lambda_{alpha rho} = eta_{alpha alpha} Lambda^alpha_rho."""
    return NCExpr.generator(L(alpha, rho)).scale(ETA(alpha, alpha))


def translation_bracket(mu, nu, carrier, order=DEFAULT_ORDER):
    """[a^mu, a^nu] = 2is[zeta^nu(d^mu_al a_be - d^mu_be a_al) + zeta^mu(d^nu_be a_al - d^nu_al a_be)]."""
    al, be = carrier.alpha, carrier.beta
    zeta = carrier.zeta
    expr = (
        (_lowered_translation(be).scale(delta(mu, al)) - _lowered_translation(al).scale(delta(mu, be)))
        .scale(Scalar(zeta[nu]))
        + (_lowered_translation(al).scale(delta(nu, be)) - _lowered_translation(be).scale(delta(nu, al)))
        .scale(Scalar(zeta[mu]))
    )
    return expr.scale(DeformSeries.monomial(Scalar(0, 2), 1, order))


def translation_matrix_bracket(mu, nu, rho, carrier, order=DEFAULT_ORDER):
    """[a^mu, Lambda^nu_rho]
    = 2is zeta^lam Lambda^mu_lam (eta_{be rho} Lambda^nu_al - eta_{al rho} Lambda^nu_be)
    + 2is zeta^mu (d^nu_be Lambda_{al rho} - d^nu_al Lambda_{be rho}).
    """
    al, be = carrier.alpha, carrier.beta
    zeta = carrier.zeta
    rotated = NCExpr.zero()
    for lam in SPACETIME:
        if zeta[lam]:
            rotated = rotated + NCExpr.generator(L(mu, lam)).scale(Scalar(zeta[lam]))
    plane = (NCExpr.generator(L(nu, al)).scale(ETA(be, rho))
             - NCExpr.generator(L(nu, be)).scale(ETA(al, rho)))
    expr = rotated * plane
    expr = expr + (_lowered_matrix(al, rho).scale(delta(nu, be))
                   - _lowered_matrix(be, rho).scale(delta(nu, al))).scale(Scalar(zeta[mu]))
    return normal_order(expr.scale(DeformSeries.monomial(Scalar(0, 2), 1, order)), COMMUTING)


def group_bracket(g1, g2, carrier, order=DEFAULT_ORDER):
    if g1.kind == 'a' and g2.kind == 'a':
        return translation_bracket(g1.indices[0], g2.indices[0], carrier, order)
    if g1.kind == 'a' and g2.kind == 'L':
        return translation_matrix_bracket(g1.indices[0], *g2.indices, carrier, order)
    if g1.kind == 'L' and g2.kind == 'a':
        return -translation_matrix_bracket(g2.indices[0], *g1.indices, carrier, order)
    if g1.kind == 'L' and g2.kind == 'L':
        return NCExpr.zero(order)
    raise ValueError(f'Not a group generator pair: {g1}, {g2}')


@lru_cache(maxsize=32)
def group_rules(carrier, order=DEFAULT_ORDER):
    """Commutation rules of the dual group algebra for one twist carrier."""
    rules = RewriteRuleset(name=f'group {carrier}')
    for g1, g2 in combinations(GROUP, 2):
        if 'a' in (g1.kind, g2.kind):
            rules.add(g1, g2, group_bracket(g1, g2, carrier, order))
    return rules.freeze()


def group_coproduct(g, order=None):
    """Delta(Lambda^mu_nu) = Lambda^mu_rho (x) Lambda^rho_nu, Delta(a^mu) = Lambda^mu_nu (x) a^nu + a^mu (x) 1."""
    if g.kind == 'L':
        mu, nu = g.indices
        terms = {((L(mu, rho),), (L(rho, nu),)): DeformSeries.constant(ONE, order) for rho in SPACETIME}
        return TensorExpr(terms, 2, order)
    if g.kind == 'a':
        mu = g.indices[0]
        terms = {((L(mu, nu),), (a(nu),)): DeformSeries.constant(ONE, order) for nu in SPACETIME}
        terms[((a(mu),), ())] = DeformSeries.constant(ONE, order)
        return TensorExpr(terms, 2, order)
    raise ValueError(f'Not a group generator: {g}')


def group_counit(word, order=None):
    """epsilon(Lambda^mu_nu) = delta^mu_nu, epsilon(a^mu) = 0, multiplicative on words."""
    for g in word:
        if g.kind == 'a' or (g.kind == 'L' and g.indices[0] != g.indices[1]):
            return DeformSeries((), order)
    return DeformSeries.constant(ONE, order)


class DualGroup:
    """Coproducts of words in the dual group algebra, memoized."""

    def __init__(self, carrier, order=DEFAULT_ORDER):
        self.carrier = carrier
        self.order = order
        self.rules = group_rules(carrier, order)
        self._words = {(): TensorExpr.unit(2, order)}

    def coproduct(self, g):
        return group_coproduct(g, self.order)

    def coproduct_word(self, word):
        word = tuple(word)
        if word not in self._words:
            head = self.coproduct_word(word[:-1])
            self._words[word] = tensor_mul(head, self.coproduct(word[-1]), self.rules)
        return self._words[word]

    def coproduct_expr(self, expr):
        result = TensorExpr.zero(2, self.order)
        for word, coeff in expr.terms.items():
            result = result + self.coproduct_word(word).scale(coeff)
        return result

    def counit(self, word):
        return group_counit(word, self.order)
