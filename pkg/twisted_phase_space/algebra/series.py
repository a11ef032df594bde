from twisted_phase_space.algebra.scalar import Scalar, ZERO, ONE

DEFAULT_ORDER = 8


def min_order(*orders):
    """Combine truncation orders; None means exact (untruncated)."""
    finite = [order for order in orders if order is not None]
    return min(finite) if finite else None


class DeformSeries:
    """Truncated power series sum_n c_n s^n with exact coefficients.

    `order` is the truncation order N (powers above N are discarded), or
    None for an exact polynomial such as a classical structure constant.
    """

    __slots__ = ('coeffs', 'order')

    def __init__(self, coeffs=(), order=None):
        coeffs = [Scalar.coerce(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError(f'Truncation order must be non-negative, got {order}')
            del coeffs[order + 1:]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def constant(cls, value, order=None):
        return cls((value,), order)

    @classmethod
    def monomial(cls, value, power, order=None):
        return cls([ZERO] * power + [Scalar.coerce(value)], order)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def items(self):
        return [(n, c) for n, c in enumerate(self.coeffs) if c]

    def coefficient(self, power):
        return self.coeffs[power] if power < len(self.coeffs) else ZERO

    def lowest_power(self):
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None

    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        other = _as_series(other)
        n = max(len(self.coeffs), len(other.coeffs))
        coeffs = [self.coefficient(k) + other.coefficient(k) for k in range(n)]
        return DeformSeries(coeffs, min_order(self.order, other.order))

    __radd__ = __add__

    def __neg__(self):
        return DeformSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-_as_series(other))

    def __rsub__(self, other):
        return _as_series(other) - self

    def __mul__(self, other):
        if not isinstance(other, DeformSeries):
            other = Scalar.coerce(other)
            return DeformSeries([c * other for c in self.coeffs], self.order)
        order = min_order(self.order, other.order)
        if not self.coeffs or not other.coeffs:
            return DeformSeries((), order)
        n = len(self.coeffs) + len(other.coeffs) - 1
        if order is not None:
            n = min(n, order + 1)
        out = [ZERO] * n
        for i, a in enumerate(self.coeffs):
            if i >= n:
                break
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= n:
                    break
                if b:
                    out[i + j] = out[i + j] + a * b
        return DeformSeries(out, order)

    __rmul__ = __mul__

    def truncate(self, order):
        return DeformSeries(self.coeffs, min_order(self.order, order))

    def with_order(self, order):
        return DeformSeries(self.coeffs, order)

    def reflect(self):
        """Substitute s -> -s."""
        return DeformSeries([c if n % 2 == 0 else -c for n, c in enumerate(self.coeffs)], self.order)

    def shift(self, power):
        """Multiply by s^power."""
        return DeformSeries([ZERO] * power + list(self.coeffs), self.order)

    def evaluate(self, s_value):
        return sum(complex(c) * s_value ** n for n, c in self.items())

    def __eq__(self, other):
        if isinstance(other, DeformSeries):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == _as_series(other).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f'DeformSeries({list(self.coeffs)}, order={self.order})'

    def to_str(self, parameter='s'):
        if not self.coeffs:
            return '0'
        parts = []
        for n, c in self.items():
            if n == 0:
                parts.append(str(c))
            else:
                power = parameter if n == 1 else f'{parameter}^{n}'
                parts.append(power if c == ONE else f'-{power}' if c == -ONE else f'{c}*{power}')
        return ' + '.join(parts).replace('+ -', '- ')

    __str__ = to_str


def _as_series(value):
    if isinstance(value, DeformSeries):
        return value
    return DeformSeries.constant(Scalar.coerce(value))

