from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.scalar import ONE, Scalar
from twisted_phase_space.algebra.series import DeformSeries


class GradedExpr:
    """NCExpr components indexed by the power of a formal commuting symbol c."""

    __slots__ = ('components', 'order')

    def __init__(self, components=None, order=None):
        self.order = order
        self.components = {k: e for k, e in (components or {}).items() if e}

    def component(self, power):
        return self.components.get(power, NCExpr.zero(self.order))

    def powers(self):
        return sorted(self.components)

    def leading_power(self):
        return max(self.components) if self.components else None

    def is_zero(self):
        return not self.components

    def shift(self, power):
        """Multiply by c^power."""
        return GradedExpr({k + power: e for k, e in self.components.items()}, self.order)

    def __add__(self, other):
        components = dict(self.components)
        for k, e in other.components.items():
            components[k] = components[k] + e if k in components else e
        return GradedExpr(components, self.order)

    def __repr__(self):
        body = ', '.join(f'c^{k}: {self.components[k]}' for k in self.powers())
        return f'GradedExpr({body})'


def _image(g, mapping):
    entry = mapping.get(g, (0, g))
    if len(entry) == 2:
        return entry[0], entry[1], ONE
    k, image, factor = entry
    return k, image, Scalar.coerce(factor)


def substitute(expr, mapping, parameter_weight=0):
    """Replace generators g -> a c^k g' and s^n -> c^(parameter_weight*n) s^n.

    `mapping` sends a Generator to (k, Generator) or (k, Generator, a) with an
    exact constant a; unmapped generators keep grade 0. The result is graded
    by the total power of c.
    """
    buckets = {}
    for word, coeff in expr.terms.items():
        grade, factor = 0, ONE
        new_word = []
        for g in word:
            k, image, a = _image(g, mapping)
            grade += k
            factor = factor * a
            new_word.append(image)
        new_word = tuple(new_word)
        for n, c in coeff.items():
            power = grade + parameter_weight * n
            bucket = buckets.setdefault(power, {})
            value = DeformSeries.monomial(c * factor, n, expr.order)
            bucket[new_word] = bucket[new_word] + value if new_word in bucket else value
    return GradedExpr({k: NCExpr(terms, expr.order) for k, terms in buckets.items()}, expr.order)
