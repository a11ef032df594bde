from fractions import Fraction
from functools import lru_cache
from math import factorial

from twisted_phase_space.algebra.scalar import Scalar, i_power
from twisted_phase_space.algebra.series import DeformSeries, DEFAULT_ORDER
from twisted_phase_space.algebra.tensor import TensorExpr, tensor_mul
from twisted_phase_space.poincare.classical import classical_rules, primitive_coproduct
from twisted_phase_space.poincare.setup_carrier import carrier_momentum, carrier_rotation

# coproducts of words kept per twisted algebra before the memo is dropped
WORD_MEMO_LIMIT = 4096


def twist_generator(carrier):
    """zeta^lambda P_lambda ^ M_{alpha beta}."""
    return TensorExpr.wedge(carrier_momentum(carrier), carrier_rotation(carrier))


def twist_factor(carrier, order=DEFAULT_ORDER):
    """F = exp(i s zeta.P ^ M_{alpha beta}) truncated at s^order."""
    rules = classical_rules()
    generator = twist_generator(carrier)
    power = TensorExpr.unit(2)
    twist = TensorExpr.zero(2, order)
    for n in range(order + 1):
        weight = i_power(n) * Scalar(Fraction(1, factorial(n)))
        twist = twist + power.scale(DeformSeries.monomial(weight, n, order))
        power = tensor_mul(power, generator, rules)
    return twist


class TwistedPoincare:
    """Twisted Hopf structure of U: Delta_xi(g) = F Delta_0(g) F^{-1}."""

    def __init__(self, carrier, order=DEFAULT_ORDER):
        self.carrier = carrier
        self.order = order
        self.rules = classical_rules()
        self.twist = twist_factor(carrier, order)
        self.twist_inv = self.twist.reflect()
        self._generators = {}
        self._words = {(): TensorExpr.unit(2, order)}

    def coproduct(self, g):
        if g not in self._generators:
            conjugated = tensor_mul(self.twist, primitive_coproduct(g, self.order), self.rules)
            self._generators[g] = tensor_mul(conjugated, self.twist_inv, self.rules)
        return self._generators[g]

    def coproduct_word(self, word):
        word = tuple(word)
        if word not in self._words:
            head = self.coproduct_word(word[:-1])
            value = tensor_mul(head, self.coproduct(word[-1]), self.rules)
            if len(self._words) >= WORD_MEMO_LIMIT:
                self._words = {(): TensorExpr.unit(2, self.order)}
            self._words[word] = value
            return value
        return self._words[word]

    def coproduct_expr(self, expr):
        result = TensorExpr.zero(2, self.order)
        for word, coeff in expr.terms.items():
            result = result + self.coproduct_word(word).scale(coeff)
        return result

    def counit(self, word):
        return DeformSeries.constant(1, self.order) if not word else DeformSeries((), self.order)


@lru_cache(maxsize=32)
def twisted_poincare(carrier, order=DEFAULT_ORDER):
    return TwistedPoincare(carrier, order)


def twisted_coproduct(g, carrier, order=DEFAULT_ORDER):
    return twisted_poincare(carrier, order).coproduct(g)
