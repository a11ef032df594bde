import os
from dataclasses import dataclass
from fractions import Fraction

from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import SPATIAL, SPACETIME
from twisted_phase_space.algebra.scalar import Scalar
from twisted_phase_space.utils.utils_io import save_json_obj

CARRIERS = ('rotation-gamma', 'rotation-zero', 'boost')

# exponent gamma in (-i)^gamma sinh(i^gamma s zeta.P): 1 for rotations, 0 for the boost
GAMMA_EXPONENT = {
    'rotation-gamma': 1,
    'rotation-zero':  1,
    'boost':          0,
}

DEFAULT_INDICES = {
    'rotation-gamma': {'k': 1, 'l': 2, 'gamma': 3},
    'rotation-zero':  {'k': 1, 'l': 2, 'gamma': None},
    'boost':          {'k': 1, 'l': 2, 'gamma': None},
}


class InvalidCarrierError(ValueError):
    pass


@dataclass(frozen=True)
class Metric:
    diagonal: tuple = (-1, 1, 1, 1)

    def __call__(self, mu, nu):
        return self.diagonal[mu] if mu == nu else 0

    def sign(self, mu):
        return self.diagonal[mu]


ETA = Metric()


def delta(mu, nu):
    return 1 if mu == nu else 0


@dataclass(frozen=True)
class TwistCarrier:
    case: str
    alpha: int
    beta: int
    lam: int
    gamma: int
    zeta: tuple
    k: int
    l: int
    g: int = None

    @property
    def spectator(self):
        """Spatial index outside {k, l} (rotation-zero and boost)."""
        rest = [i for i in SPATIAL if i not in (self.k, self.l)]
        return rest[0] if len(rest) == 1 else None

    def index_map(self):
        indices = {'0': 0, 'k': self.k, 'l': self.l}
        if self.case == 'rotation-gamma':
            indices['gamma'] = self.g
        else:
            indices['a'] = self.spectator
        return indices

    def zeta_scalar(self, rho):
        return Scalar(self.zeta[rho])

    def has_unit_zeta(self):
        return self.zeta == unit_zeta(self.lam)

    def to_params(self):
        return {
            'carrier': self.case,
            'k': self.k,
            'l': self.l,
            'gamma': self.g,
            'zeta': [str(z) for z in self.zeta],
        }

    def __str__(self):
        if self.case == 'rotation-gamma':
            return f'{self.case}(k={self.k}, l={self.l}, gamma={self.g})'
        return f'{self.case}(k={self.k}, l={self.l})'


def unit_zeta(lam):
    return tuple(Fraction(1) if rho == lam else Fraction(0) for rho in SPACETIME)


def setup_carrier_params(carrier='rotation-gamma', k=None, l=None, gamma=None, zeta=None, save_dir=None):

    if carrier not in CARRIERS:
        raise InvalidCarrierError(f'Incorrect carrier specified: {carrier}')

    defaults = DEFAULT_INDICES[carrier]
    carrier_params = {
        'carrier': carrier,
        'k': defaults['k'] if k is None else k,
        'l': defaults['l'] if l is None else l,
        'gamma': defaults['gamma'] if gamma is None else gamma,
        'zeta': None if zeta is None else [str(Fraction(str(z))) for z in zeta],
    }
    if carrier != 'rotation-gamma' and gamma is not None:
        raise InvalidCarrierError(f'gamma is only used by rotation-gamma, got gamma={gamma} for {carrier}')

    if save_dir:
        save_json_obj(carrier_params, os.path.join(save_dir, 'carrier_params'))

    return carrier_params


def setup_carrier(carrier='rotation-gamma', k=None, l=None, gamma=None, zeta=None):
    """Validated TwistCarrier for one of the three abelian twist cases."""
    params = setup_carrier_params(carrier, k, l, gamma, zeta)
    return carrier_from_params(params)


def carrier_from_params(params):
    case, k, l, g = params['carrier'], params['k'], params['l'], params['gamma']

    indices = [k, l] + ([g] if case == 'rotation-gamma' else [])
    for index in indices:
        if index not in SPATIAL:
            raise InvalidCarrierError(f'Carrier indices must be spatial (1, 2, 3), got {indices} for {case}')
    if len(set(indices)) != len(indices):
        raise InvalidCarrierError(f'Carrier indices must be distinct, got {indices} for {case}')

    if case == 'rotation-gamma':
        alpha, beta, lam = k, l, g
    elif case == 'rotation-zero':
        alpha, beta, lam = k, l, 0
    else:
        alpha, beta, lam = k, 0, l

    zeta = unit_zeta(lam)
    if params.get('zeta') is not None:
        zeta = tuple(Fraction(z) for z in params['zeta'])
        if len(zeta) != 4:
            raise InvalidCarrierError(f'zeta must have four components, got {params["zeta"]}')
        if zeta[alpha] or zeta[beta]:
            raise InvalidCarrierError(
                f'zeta must vanish on the rotation plane ({alpha}, {beta}) for an abelian twist, got {params["zeta"]}')
        if not any(zeta):
            raise InvalidCarrierError('zeta must be non-zero')

    return TwistCarrier(case, alpha, beta, lam, GAMMA_EXPONENT[case], zeta, k, l, g)


def lorentz(mu, nu, order=None):
    """M_{mu nu} as an NCExpr (antisymmetric, zero on the diagonal)."""
    return NCExpr.named('M', mu, nu, order=order)


def momentum(mu, order=None):
    return NCExpr.named('P', mu, order=order)


def carrier_momentum(carrier, order=None):
    """zeta^lambda P_lambda."""
    expr = NCExpr.zero(order)
    for rho in SPACETIME:
        if carrier.zeta[rho]:
            expr = expr + momentum(rho, order).scale(carrier.zeta_scalar(rho))
    return expr


def carrier_rotation(carrier, order=None):
    return lorentz(carrier.alpha, carrier.beta, order)
