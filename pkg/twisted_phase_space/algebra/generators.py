import re
from functools import lru_cache
from typing import NamedTuple

# alphabets: Poincare algebra U (M, P), dual group G (L, a),
# relativistic phase space (x, p), Galilean phase space (t, y, pi)
KINDS = ('M', 'P', 'L', 'a', 'x', 'p', 't', 'y', 'pi')

# canonical order: M before P, L before a, positions before momenta,
# algebra words left of group words
KIND_RANK = {
    'M': (0, 0), 'P': (1, 0),
    'L': (2, 0), 'a': (3, 0),
    'x': (4, 0), 't': (4, 0), 'y': (4, 1),
    'p': (5, 0), 'pi': (5, 0),
}

ARITY = {'M': 2, 'P': 1, 'L': 2, 'a': 1, 'x': 1, 'p': 1, 't': 0, 'y': 1, 'pi': 1}

SPACETIME = (0, 1, 2, 3)
SPATIAL = (1, 2, 3)


class Generator(NamedTuple):
    kind: str
    indices: tuple = ()

    def __str__(self):
        return label(self)


def make_generator(kind, *indices):
    """Return (sign, generator); M_{nu mu} normalizes to -M_{mu nu}, M_{mu mu} to sign 0."""
    if kind not in KINDS:
        raise ValueError(f'Incorrect generator kind specified: {kind}')
    if len(indices) != ARITY[kind]:
        raise ValueError(f'Generator {kind} takes {ARITY[kind]} indices, got {indices}')
    for index in indices:
        if index not in SPACETIME:
            raise ValueError(f'Index out of range for {kind}: {index}')
    if kind == 'y' and indices[0] == 0:
        raise ValueError('Galilean positions y_i are spatial')
    if kind == 'M':
        mu, nu = indices
        if mu == nu:
            return 0, None
        if mu > nu:
            return -1, Generator('M', (nu, mu))
    return 1, Generator(kind, tuple(indices))


def M(mu, nu):
    sign, g = make_generator('M', mu, nu)
    if sign != 1:
        raise ValueError(f'M_{mu}{nu} is not in canonical form')
    return g


def P(mu):
    return Generator('P', (mu,))


def L(mu, nu):
    return Generator('L', (mu, nu))


def a(mu):
    return Generator('a', (mu,))


def x(mu):
    return Generator('x', (mu,))


def p(mu):
    return Generator('p', (mu,))


def t():
    return Generator('t', ())


def y(i):
    return make_generator('y', i)[1]


def pi(mu):
    return Generator('pi', (mu,))


LORENTZ = tuple(M(mu, nu) for mu in SPACETIME for nu in SPACETIME if mu < nu)
MOMENTA = tuple(P(mu) for mu in SPACETIME)
POINCARE = LORENTZ + MOMENTA
GROUP = tuple(L(mu, nu) for mu in SPACETIME for nu in SPACETIME) + tuple(a(mu) for mu in SPACETIME)
RELATIVISTIC_PHASE = tuple(x(mu) for mu in SPACETIME) + tuple(p(mu) for mu in SPACETIME)
GALILEAN_PHASE = (t(),) + tuple(y(i) for i in SPATIAL) + tuple(pi(mu) for mu in SPACETIME)


@lru_cache(maxsize=None)
def sort_key(g):
    return KIND_RANK[g.kind] + (g.indices,)


def is_position(g):
    return g.kind in ('x', 't', 'y', 'a')


def is_momentum(g):
    return g.kind in ('p', 'pi', 'P')


def label(g):
    if g.kind == 't':
        return 't'
    if g.kind in ('L',):
        return f'L^{g.indices[0]}_{g.indices[1]}'
    if g.kind == 'a':
        return f'a^{g.indices[0]}'
    return f'{g.kind}_' + ''.join(str(i) for i in g.indices)


def latex_label(g):
    if g.kind == 't':
        return 't'
    if g.kind == 'L':
        return f'\\Lambda^{{{g.indices[0]}}}_{{{g.indices[1]}}}'
    if g.kind == 'a':
        return f'a^{{{g.indices[0]}}}'
    if g.kind == 'pi':
        return f'\\pi_{g.indices[0]}'
    if g.kind == 'M':
        return f'M_{{{g.indices[0]}{g.indices[1]}}}'
    return f'{g.kind}_{g.indices[0]}'


_LABEL_RE = re.compile(r'^(?:(t)|(L)\^(\d)_(\d)|(a)\^(\d)|(M|P|x|p|y|pi)_(\d+))$')


def parse_label(text):
    match = _LABEL_RE.match(text.strip())
    if not match:
        raise ValueError(f'Incorrect generator label specified: {text}')
    if match.group(1):
        return t()
    if match.group(2):
        return L(int(match.group(3)), int(match.group(4)))
    if match.group(5):
        return a(int(match.group(6)))
    kind, digits = match.group(7), match.group(8)
    sign, g = make_generator(kind, *(int(d) for d in digits))
    if sign != 1:
        raise ValueError(f'Generator label not canonical: {text}')
    return g
