from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from twisted_phase_space.algebra.expression import NCExpr
from twisted_phase_space.algebra.generators import POINCARE, SPACETIME, M, P, label
from twisted_phase_space.algebra.rewrite import commutator, multiply
from twisted_phase_space.algebra.scalar import Scalar, I, ONE, i_power
from twisted_phase_space.algebra.series import DeformSeries, DEFAULT_ORDER
from twisted_phase_space.algebra.tensor import TensorExpr
from twisted_phase_space.poincare.classical import classical_rules, primitive_coproduct
from twisted_phase_space.poincare.setup_carrier import ETA, carrier_momentum, carrier_rotation, lorentz, momentum
from twisted_phase_space.poincare.twist import twisted_poincare
from twisted_phase_space.utils.ledger import DiscrepancyLedger

# index assignments (i, j, k, l) tried for the carrier constants psi and chi
READINGS = {
    'mu-nu/alpha-beta': lambda mu, nu, al, be: (mu, nu, al, be),
    'alpha-beta/mu-nu': lambda mu, nu, al, be: (al, be, mu, nu),
    'nu-mu/alpha-beta': lambda mu, nu, al, be: (nu, mu, al, be),
    'mu-nu/beta-alpha': lambda mu, nu, al, be: (mu, nu, be, al),
}


@dataclass
class ReferenceCoproduct:
    generator: object
    base: TensorExpr
    readings: dict = field(default_factory=dict)

    @property
    def ambiguous(self):
        return any(full != self.base for full in self.readings.values())


def carrier_constants(i, j, k, l):
    """psi_lambda and chi_lambda as tuples over lambda."""
    psi = tuple(ETA(j, lam) * ETA(l, i) - ETA(i, lam) * ETA(l, j) for lam in SPACETIME)
    chi = tuple(ETA(j, lam) * ETA(k, i) - ETA(i, lam) * ETA(k, j) for lam in SPACETIME)
    return psi, chi


def deformation_functions(carrier, order=DEFAULT_ORDER):
    """(-i)^gamma sinh(i^gamma s zeta.P) and cosh(i^gamma s zeta.P) - 1 as truncated series."""
    rules = classical_rules()
    z = carrier_momentum(carrier)
    gamma = carrier.gamma
    sinh_part = NCExpr.zero(order)
    cosh_part = NCExpr.zero(order)
    power = NCExpr.unit()
    for n in range(1, order + 1):
        power = multiply(power, z, rules)
        weight = i_power(gamma * n) * Scalar(Fraction(1, factorial(n)))
        if n % 2:
            weight = weight * i_power(3 * gamma)
            sinh_part = sinh_part + power.scale(DeformSeries.monomial(weight, n, order))
        else:
            cosh_part = cosh_part + power.scale(DeformSeries.monomial(weight, n, order))
    return sinh_part, cosh_part


def reference_momentum_coproduct(mu, carrier, order=DEFAULT_ORDER):
    al, be = carrier.alpha, carrier.beta
    sinh_part, cosh_part = deformation_functions(carrier, order)
    antisym = momentum(be).scale(ETA(al, mu)) - momentum(al).scale(ETA(be, mu))
    sym = (momentum(al).scale(ETA(al, al) * ETA(al, mu))
           + momentum(be).scale(ETA(be, be) * ETA(be, mu)))
    return (primitive_coproduct(P(mu), order)
            + TensorExpr.wedge(sinh_part, antisym)
            + TensorExpr.perp(cosh_part, sym)).truncate(order)


def _s_times(expr, order):
    return expr.scale(DeformSeries.monomial(ONE, 1, order))


def reference_lorentz_coproduct(mu, nu, carrier, order=DEFAULT_ORDER):
    rules = classical_rules()
    al, be = carrier.alpha, carrier.beta
    sinh_part, cosh_part = deformation_functions(carrier, order)
    m_mn = lorentz(mu, nu)
    m_ab = carrier_rotation(carrier)
    sign = -1 if carrier.gamma % 2 == 0 else 1

    bracket = commutator(m_mn, m_ab, rules)
    double = commutator(bracket, m_ab, rules)
    zeta_p = NCExpr.zero()
    for rho in SPACETIME:
        if carrier.zeta[rho]:
            zeta_p = zeta_p + (momentum(nu).scale(ETA(mu, rho)) - momentum(mu).scale(ETA(nu, rho))).scale(
                carrier.zeta_scalar(rho))

    base = (primitive_coproduct(M(mu, nu), order)
            + TensorExpr.wedge(m_ab, _s_times(zeta_p, order))
            + TensorExpr.wedge(bracket.scale(I), sinh_part)
            + TensorExpr.perp(double, cosh_part.scale(Scalar(sign)))).truncate(order)

    rotated_sinh = multiply(m_ab, sinh_part, rules)
    rotated_cosh = multiply(m_ab, cosh_part.scale(Scalar(sign)), rules)
    readings = {}
    for name, assign in READINGS.items():
        psi, chi = carrier_constants(*assign(mu, nu, al, be))
        psi_z = sum((carrier.zeta[r] * psi[r] for r in SPACETIME), Fraction(0))
        chi_z = sum((carrier.zeta[r] * chi[r] for r in SPACETIME), Fraction(0))
        left = momentum(al).scale(Scalar(psi_z)) - momentum(be).scale(Scalar(chi_z))
        right = (momentum(be).scale(Scalar(psi_z * ETA(al, al)))
                 + momentum(al).scale(Scalar(chi_z * ETA(be, be))))
        extra = (TensorExpr.perp(rotated_sinh, _s_times(left, order))
                 + TensorExpr.wedge(_s_times(right, order), rotated_cosh))
        readings[name] = (base + extra).truncate(order)
    return base, readings


def reference_coproduct(g, carrier, order=DEFAULT_ORDER):
    """Printed closed-form coproduct of a Poincare generator."""
    if g.kind == 'P':
        full = reference_momentum_coproduct(g.indices[0], carrier, order)
        return ReferenceCoproduct(g, full, {'closed form': full})
    if g.kind == 'M':
        base, readings = reference_lorentz_coproduct(*g.indices, carrier, order)
        return ReferenceCoproduct(g, base, readings)
    raise ValueError(f'Not a Poincare generator: {g}')


def _flipped(engine, reference, primitive):
    deformation = engine - primitive
    return not deformation.is_zero() and deformation == -(reference - primitive)


def verify_coproducts(carrier, order=DEFAULT_ORDER, generators=POINCARE):
    """Compare F Delta_0 F^{-1} with the printed closed forms, generator by generator."""
    hopf = twisted_poincare(carrier, order)
    ledger = DiscrepancyLedger(f'coproducts {carrier}')
    for g in generators:
        engine = hopf.coproduct(g)
        reference = reference_coproduct(g, carrier, order)
        primitive = primitive_coproduct(g, order)
        relation = f'{carrier.case}/Delta({label(g)})'

        matched = [name for name, full in reference.readings.items() if full == engine]
        if matched:
            ledger.add(relation, engine, reference.readings[matched[0]], 'match', f'reading {matched[0]}')
            continue
        flipped = [name for name, full in reference.readings.items() if _flipped(engine, full, primitive)]
        if flipped and reference.ambiguous:
            # the index readings differ from each other by exactly such signs
            ledger.add(relation, engine, reference.readings[flipped[0]], 'reference-ambiguous',
                       f'sign-flipped reading {flipped[0]}')
        elif flipped:
            ledger.add(relation, engine, reference.readings[flipped[0]], 'mismatch', 'undocumented sign flip')
        elif reference.ambiguous:
            ledger.add(relation, engine, reference.base, 'reference-ambiguous',
                       f"residual against the sign-definite terms: {engine - reference.base}")
        else:
            ledger.add(relation, engine, reference.base, 'mismatch', f'residual: {engine - reference.base}')
    return ledger
