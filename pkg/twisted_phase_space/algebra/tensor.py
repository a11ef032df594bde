from itertools import product as cartesian

from twisted_phase_space.algebra.expression import NCExpr, word_str
from twisted_phase_space.algebra.scalar import ONE
from twisted_phase_space.algebra.series import DeformSeries, min_order


class TensorExpr:
    """Sum of pure tensors w_1 (x) ... (x) w_n with DeformSeries coefficients.

    Terms are keyed by tuples of words (one word per leg).
    """

    __slots__ = ('terms', 'arity', 'order')

    def __init__(self, terms=None, arity=2, order=None):
        self.arity = arity
        self.order = order
        self.terms = {}
        for key, coeff in (terms or {}).items():
            if len(key) != arity:
                raise ValueError(f'Tensor term {key} does not have {arity} legs')
            if order is not None:
                coeff = coeff.truncate(order)
            if coeff:
                self.terms[tuple(key)] = coeff

    @classmethod
    def zero(cls, arity=2, order=None):
        return cls({}, arity, order)

    @classmethod
    def unit(cls, arity=2, order=None):
        return cls({((),) * arity: DeformSeries.constant(ONE, order)}, arity, order)

    @classmethod
    def product(cls, *exprs):
        """Outer product e_1 (x) ... (x) e_n of NCExprs."""
        order = min_order(*(e.order for e in exprs))
        terms = {}
        for combo in cartesian(*(list(e.terms.items()) for e in exprs)):
            coeff = combo[0][1]
            for _, c in combo[1:]:
                coeff = coeff * c
            key = tuple(w for w, _ in combo)
            terms[key] = terms[key] + coeff if key in terms else coeff
        return cls(terms, len(exprs), order)

    @classmethod
    def wedge(cls, lhs, rhs):
        return cls.product(lhs, rhs) - cls.product(rhs, lhs)

    @classmethod
    def perp(cls, lhs, rhs):
        return cls.product(lhs, rhs) + cls.product(rhs, lhs)

    @property
    def legs(self):
        """List of (coefficient, (NCExpr, ...)) pure tensors."""
        return [(coeff, tuple(NCExpr.word(w, ONE, self.order) for w in key))
                for key, coeff in self.terms.items()]

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if other.arity != self.arity:
            raise ValueError(f'Tensor arity mismatch: {self.arity} vs {other.arity}')

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms[key] + coeff if key in terms else coeff
        return TensorExpr(terms, self.arity, min_order(self.order, other.order))

    def __neg__(self):
        return TensorExpr({k: -c for k, c in self.terms.items()}, self.arity, self.order)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        order = self.order
        if isinstance(factor, DeformSeries):
            order = min_order(order, factor.order)
        return TensorExpr({k: c * factor for k, c in self.terms.items()}, self.arity, order)

    def truncate(self, order):
        return TensorExpr(self.terms, self.arity, min_order(self.order, order))

    def reflect(self):
        return TensorExpr({k: c.reflect() for k, c in self.terms.items()}, self.arity, self.order)

    def append_unit(self, position=None):
        """Insert an empty leg, e.g. F -> F (x) 1 or 1 (x) F."""
        position = self.arity if position is None else position
        terms = {k[:position] + ((),) + k[position:]: c for k, c in self.terms.items()}
        return TensorExpr(terms, self.arity + 1, self.order)

    def expand_leg(self, index, fn):
        """Replace leg `index` by fn(word) -> TensorExpr, raising the arity."""
        terms = {}
        order = self.order
        arity = None
        for key, coeff in self.terms.items():
            image = fn(key[index])
            arity = image.arity
            order = min_order(order, image.order)
            for sub, c in image.terms.items():
                new = key[:index] + sub + key[index + 1:]
                value = coeff * c
                terms[new] = terms[new] + value if new in terms else value
        if arity is None:
            return TensorExpr.zero(self.arity + 1, order)
        return TensorExpr(terms, self.arity + arity - 1, order)

    def contract_leg(self, index, fn):
        """Drop leg `index` after pairing it with fn(word) -> DeformSeries."""
        terms = {}
        for key, coeff in self.terms.items():
            value = coeff * fn(key[index])
            if not value:
                continue
            new = key[:index] + key[index + 1:]
            terms[new] = terms[new] + value if new in terms else value
        return TensorExpr(terms, self.arity - 1, self.order)

    def to_expr(self):
        if self.arity != 1:
            raise ValueError(f'Only a single-leg tensor converts to NCExpr, arity is {self.arity}')
        return NCExpr({k[0]: c for k, c in self.terms.items()}, self.order)

    def __eq__(self, other):
        if not isinstance(other, TensorExpr):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def to_str(self, parameter='s'):
        if not self.terms:
            return '0'
        parts = []
        for key in sorted(self.terms, key=lambda k: tuple(word_str(w) for w in k)):
            legs = ' (x) '.join(word_str(w) for w in key)
            parts.append(f'({self.terms[key].to_str(parameter)})*{legs}')
        return ' + '.join(parts)

    __str__ = to_str

    def __repr__(self):
        return f'TensorExpr({self.to_str()}, arity={self.arity})'


def normal_order_tensor(tensor, rules):
    """Normal order each leg; `rules` is one ruleset or one per leg."""
    per_leg = rules if isinstance(rules, (list, tuple)) else [rules] * tensor.arity
    order = tensor.order
    terms = {}
    for key, coeff in tensor.terms.items():
        forms = [per_leg[i].normal_word(w, order) for i, w in enumerate(key)]
        for combo in cartesian(*(list(f.items()) for f in forms)):
            value = coeff
            for _, c in combo:
                value = value * c
            if not value:
                continue
            new = tuple(w for w, _ in combo)
            terms[new] = terms[new] + value if new in terms else value
    return TensorExpr(terms, tensor.arity, order)


def tensor_mul(lhs, rhs, rules):
    """Leg-wise product, normal ordered: (a (x) b)(c (x) d) = ac (x) bd."""
    lhs._check(rhs)
    order = min_order(lhs.order, rhs.order)
    raw = {}
    for k1, c1 in lhs.terms.items():
        low1 = c1.lowest_power()
        for k2, c2 in rhs.terms.items():
            if order is not None and low1 + c2.lowest_power() > order:
                continue
            value = c1 * c2
            if order is not None:
                value = value.truncate(order)
            if not value:
                continue
            key = tuple(w1 + w2 for w1, w2 in zip(k1, k2))
            raw[key] = raw[key] + value if key in raw else value
    return normal_order_tensor(TensorExpr(raw, lhs.arity, order), rules)


def tensor_commutator(lhs, rhs, rules):
    return tensor_mul(lhs, rhs, rules) - tensor_mul(rhs, lhs, rules)
