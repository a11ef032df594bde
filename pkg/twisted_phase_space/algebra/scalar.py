from fractions import Fraction
from numbers import Rational


class Scalar:
    """Exact Gaussian rational re + i*im."""

    __slots__ = ('re', 'im')

    def __init__(self, re=0, im=0):
        if isinstance(re, (float, complex)) or isinstance(im, (float, complex)):
            raise TypeError(f'Scalar takes exact rationals, got {re!r}, {im!r}')
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (Rational, int)):
            return cls(value)
        raise TypeError(f'Cannot coerce {value!r} to Scalar')

    def __add__(self, other):
        other = Scalar.coerce(other)
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = Scalar.coerce(other)
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __mul__(self, other):
        other = Scalar.coerce(other)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Scalar.coerce(other)
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError('Scalar division by zero')
        return self * Scalar(other.re / norm, -other.im / norm)

    def __pow__(self, n):
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def is_real(self):
        return self.im == 0

    def is_imaginary(self):
        return self.re == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f'Scalar({self.re}, {self.im})'

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            if self.im == 1:
                return 'i'
            if self.im == -1:
                return '-i'
            return f'{self.im}i'
        sign = '+' if self.im > 0 else '-'
        im = abs(self.im)
        im_str = 'i' if im == 1 else f'{im}i'
        return f'({self.re}{sign}{im_str})'

    def to_json(self):
        return {'re': str(self.re), 'im': str(self.im)}

    @classmethod
    def from_json(cls, obj):
        return cls(Fraction(obj['re']), Fraction(obj['im']))


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def i_power(n):
    return [ONE, I, -ONE, -I][n % 4]
