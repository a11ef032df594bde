from twisted_phase_space.algebra.generators import make_generator, label, latex_label, sort_key
from twisted_phase_space.algebra.scalar import Scalar, ONE
from twisted_phase_space.algebra.series import DeformSeries, min_order


class NCExpr:
    """Finite sum of words in non-commuting generators with DeformSeries coefficients.

    Words are tuples of Generators; the empty word is the unit. Products made
    with `*` are concatenations in the free algebra, canonical forms come
    from `normal_order` with a RewriteRuleset.
    """

    __slots__ = ('terms', 'order')

    def __init__(self, terms=None, order=None):
        self.order = order
        self.terms = {}
        for word, coeff in (terms or {}).items():
            if order is not None:
                coeff = coeff.truncate(order)
            if coeff:
                self.terms[tuple(word)] = coeff

    @classmethod
    def zero(cls, order=None):
        return cls({}, order)

    @classmethod
    def scalar(cls, value, order=None):
        if isinstance(value, DeformSeries):
            return cls({(): value}, min_order(order, value.order))
        return cls({(): DeformSeries.constant(value, order)}, order)

    @classmethod
    def unit(cls, order=None):
        return cls.scalar(ONE, order)

    @classmethod
    def word(cls, word, coeff=ONE, order=None):
        if not isinstance(coeff, DeformSeries):
            coeff = DeformSeries.constant(coeff, order)
        return cls({tuple(word): coeff}, min_order(order, coeff.order))

    @classmethod
    def generator(cls, g, order=None):
        return cls.word((g,), ONE, order)

    @classmethod
    def named(cls, kind, *indices, order=None):
        """Generator by kind and indices, honoring M antisymmetry."""
        sign, g = make_generator(kind, *indices)
        if not sign:
            return cls.zero(order)
        return cls.word((g,), Scalar(sign), order)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def words(self):
        return list(self.terms)

    def coefficient(self, word):
        return self.terms.get(tuple(word), DeformSeries((), self.order))

    def items(self):
        return self.terms.items()

    def __add__(self, other):
        if not isinstance(other, NCExpr):
            other = NCExpr.scalar(other)
        order = min_order(self.order, other.order)
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            terms[word] = terms[word] + coeff if word in terms else coeff
        return NCExpr(terms, order)

    __radd__ = __add__

    def __neg__(self):
        return NCExpr({w: -c for w, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor):
        order = self.order
        if isinstance(factor, DeformSeries):
            order = min_order(order, factor.order)
        return NCExpr({w: c * factor for w, c in self.terms.items()}, order)

    def __mul__(self, other):
        if not isinstance(other, NCExpr):
            return self.scale(other)
        order = min_order(self.order, other.order)
        terms = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                coeff = c1 * c2
                if order is not None:
                    coeff = coeff.truncate(order)
                if not coeff:
                    continue
                word = w1 + w2
                terms[word] = terms[word] + coeff if word in terms else coeff
        return NCExpr(terms, order)

    def __rmul__(self, other):
        return self.scale(other)

    def truncate(self, order):
        return NCExpr(self.terms, min_order(self.order, order))

    def with_order(self, order):
        return NCExpr({w: c.with_order(order) for w, c in self.terms.items()}, order)

    def reflect(self):
        return NCExpr({w: c.reflect() for w, c in self.terms.items()}, self.order)

    def series_view(self):
        """{power: {word: Scalar}} with only non-zero entries."""
        view = {}
        for word, coeff in self.terms.items():
            for n, c in coeff.items():
                view.setdefault(n, {})[word] = c
        return view

    def generators(self):
        return {g for word in self.terms for g in word}

    def degree(self):
        return max((len(w) for w in self.terms), default=0)

    def is_scalar(self):
        return all(not w for w in self.terms)

    def scalar_part(self):
        return self.terms.get((), DeformSeries((), self.order))

    def __eq__(self, other):
        if not isinstance(other, NCExpr):
            if isinstance(other, (int, Scalar, DeformSeries)):
                other = NCExpr.scalar(other)
            else:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f'NCExpr({self.to_str()}, order={self.order})'

    def to_str(self, parameter='s'):
        if not self.terms:
            return '0'
        parts = []
        for word in sorted(self.terms, key=word_key):
            coeff = self.terms[word].to_str(parameter)
            body = word_str(word)
            if not word:
                parts.append(coeff)
            elif coeff == '1':
                parts.append(body)
            else:
                parts.append(f'({coeff})*{body}')
        return ' + '.join(parts)

    __str__ = to_str


def word_key(word):
    return (len(word), tuple(sort_key(g) for g in word))


def word_str(word):
    return '*'.join(label(g) for g in word) if word else '1'


def word_latex(word):
    if not word:
        return '1'
    out = []
    prev, count = None, 0
    for g in word + (None,):
        if g == prev:
            count += 1
            continue
        if prev is not None:
            out.append(latex_label(prev) + (f'^{{{count}}}' if count > 1 else ''))
        prev, count = g, 1
    return ' '.join(out)
