from twisted_phase_space.algebra.scalar import Scalar
from twisted_phase_space.algebra.series import DeformSeries, DEFAULT_ORDER
from twisted_phase_space.dual_group.group_rules import group_coproduct, group_counit
from twisted_phase_space.poincare.setup_carrier import ETA, delta
from twisted_phase_space.poincare.twist import twisted_poincare


def generator_pairing(g, u):
    """<Lambda^mu_nu, M_{ab}> = i(d^mu_a eta_{b nu} - d^mu_b eta_{a nu}), <a^mu, P_nu> = i d^mu_nu."""
    if g.kind == 'L' and u.kind == 'M':
        mu, nu = g.indices
        a_, b_ = u.indices
        return Scalar(0, delta(mu, a_) * ETA(b_, nu) - delta(mu, b_) * ETA(a_, nu))
    if g.kind == 'a' and u.kind == 'P':
        return Scalar(0, delta(g.indices[0], u.indices[0]))
    return Scalar(0)


class HopfPairing:
    """Duality between the dual group algebra G and the twisted algebra U.

    <g, u u'> = sum <g_(1), u><g_(2), u'> uses the group coproduct and
    <g g', u> = sum <g, u_(1)><g', u_(2)> uses the twisted coproduct.
    """

    def __init__(self, carrier, order=DEFAULT_ORDER):
        self.carrier = carrier
        self.order = order
        self.hopf = twisted_poincare(carrier, order)
        self._memo = {}

    def _zero(self):
        return DeformSeries((), self.order)

    def pair_words(self, group_word, algebra_word):
        key = (tuple(group_word), tuple(algebra_word))
        if key in self._memo:
            return self._memo[key]
        group_word, algebra_word = key

        if not group_word:
            value = self.hopf.counit(algebra_word)
        elif not algebra_word:
            value = group_counit(group_word, self.order)
        elif len(group_word) == 1 and len(algebra_word) == 1:
            value = DeformSeries.constant(generator_pairing(group_word[0], algebra_word[0]), self.order)
        elif len(group_word) == 1:
            value = self._zero()
            first, rest = algebra_word[:1], algebra_word[1:]
            for (left, right), coeff in group_coproduct(group_word[0], self.order).terms.items():
                value = value + coeff * self.pair_words(left, first) * self.pair_words(right, rest)
        else:
            value = self._zero()
            first, rest = group_word[:1], group_word[1:]
            for (left, right), coeff in self.hopf.coproduct_word(algebra_word).terms.items():
                term = self.pair_words(first, left)
                if term:
                    value = value + coeff * term * self.pair_words(rest, right)

        self._memo[key] = value
        return value

    def pair(self, group_expr, algebra_expr):
        """Bilinear extension to NCExprs."""
        value = self._zero()
        for gw, gc in group_expr.terms.items():
            for uw, uc in algebra_expr.terms.items():
                value = value + gc * uc * self.pair_words(gw, uw)
        return value


def pairing(group_expr, algebra_expr, carrier, order=DEFAULT_ORDER):
    return HopfPairing(carrier, order).pair(group_expr, algebra_expr)
