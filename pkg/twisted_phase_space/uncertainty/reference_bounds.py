from twisted_phase_space.algebra.generators import label
from twisted_phase_space.heisenberg_double.reference_tables import (
    PLUS_I, lin, fn, reference_form, resolve)
from twisted_phase_space.utils.ledger import DiscrepancyLedger

# printed bounds as (A, B, C) with Delta(A) Delta(B) >= |<C>|/2; C is compared up to sign
BOUNDS_ROTATION_GAMMA = [
    ('x_k', 'x_gamma', lin(2, 'x_l')),
    ('x_l', 'x_gamma', lin(2, 'x_k')),
    ('x_k', 'p_k', fn('cos', 1, 'p_gamma')),
    ('x_l', 'p_l', fn('cos', 1, 'p_gamma')),
    ('x_0', 'p_0', PLUS_I),
    ('x_gamma', 'p_gamma', PLUS_I),
    ('x_gamma', 'p_k', lin(1, 'p_l')),
    ('x_gamma', 'p_l', lin(1, 'p_k')),
    ('x_k', 'p_l', fn('sin', 1, 'p_gamma')),
    ('x_l', 'p_k', fn('sin', 1, 'p_gamma')),
]

BOUNDS_ROTATION_ZERO = [
    ('x_k', 'x_0', lin(2, 'x_l')),
    ('x_l', 'x_0', lin(2, 'x_k')),
    ('x_k', 'p_k', fn('cos', 1, 'p_0')),
    ('x_l', 'p_l', fn('cos', 1, 'p_0')),
    ('x_0', 'p_0', PLUS_I),
    ('x_a', 'p_a', PLUS_I),
    ('x_0', 'p_k', lin(1, 'p_l')),
    ('x_0', 'p_l', lin(1, 'p_k')),
    ('x_k', 'p_l', fn('sin', 1, 'p_0')),
    ('x_l', 'p_k', fn('sin', 1, 'p_0')),
]

BOUNDS_BOOST = [
    ('x_k', 'x_l', lin(2, 'x_0')),
    ('x_l', 'x_0', lin(2, 'x_k')),
    ('x_l', 'p_k', lin(1, 'p_0')),
    ('x_0', 'p_0', fn('cosh', 1, 'p_l')),
    ('x_l', 'p_l', PLUS_I),
    ('x_a', 'p_a', PLUS_I),
    ('x_0', 'p_k', fn('sinh', 1, 'p_l')),
    ('x_k', 'p_k', fn('cosh', 1, 'p_l')),
    ('x_k', 'p_0', fn('sinh', 1, 'p_l')),
    ('x_l', 'p_0', lin(1, 'p_k')),
]

GALILEAN_BOUNDS_BOOST = [
    ('y_k', 'y_l', lin(2, 't')),
    ('t', 'pi_0', PLUS_I),
    ('y_l', 'pi_l', PLUS_I),
    ('y_a', 'pi_a', PLUS_I),
    ('y_k', 'pi_k', PLUS_I),
]


def galilean_names(rows):
    """x_0 -> t, x_i -> y_i, p_mu -> pi_mu in every name of a row."""
    def rename(name):
        if name == 'x_0':
            return 't'
        kind, index = name.split('_')
        return {'x': 'y', 'p': 'pi'}[kind] + '_' + index

    renamed = []
    for a, b, rhs in rows:
        rhs = rhs[:2] + (rename(rhs[2]),) + rhs[3:] if len(rhs) > 2 else rhs
        renamed.append((rename(a), rename(b), rhs))
    return renamed


REFERENCE_BOUNDS = {
    ('relativistic', 'rotation-gamma'): BOUNDS_ROTATION_GAMMA,
    ('relativistic', 'rotation-zero'):  BOUNDS_ROTATION_ZERO,
    ('relativistic', 'boost'):          BOUNDS_BOOST,
    ('galilean', 'rotation-gamma'):     galilean_names(BOUNDS_ROTATION_GAMMA),
    ('galilean', 'rotation-zero'):      galilean_names(BOUNDS_ROTATION_ZERO),
    ('galilean', 'boost'):              GALILEAN_BOUNDS_BOOST,
}


def compare_bounds(engine_bounds, table, table_ledger=None):
    """Ledger of engine bounds against the printed ones, pair by pair.

    An engine bound without a printed counterpart is reference-inconsistent
    when the table ledger traced its relation to a reference-inconsistent row.
    """
    carrier = table.carrier
    rows = REFERENCE_BOUNDS[(table.regime, carrier.case)]
    inconsistent = set()
    if table_ledger is not None:
        inconsistent = {e.lhs for e in table_ledger if e.verdict == 'reference-inconsistent'}

    engine = {frozenset(b.lhs): b for b in engine_bounds}
    ledger = DiscrepancyLedger(f'bounds {table.regime} {carrier.case}')
    seen = set()
    for name_a, name_b, rhs in rows:
        g1, g2 = resolve(name_a, carrier), resolve(name_b, carrier)
        key = frozenset((g1, g2))
        seen.add(key)
        form = reference_form(rhs, carrier, table.parameter)
        reference = form.expand(table.order)
        relation = f'{table.regime}/{carrier.case}/Delta({name_a})Delta({name_b})'
        bound = engine.get(key)
        if bound is None:
            verdict = 'match' if reference.is_zero() else 'mismatch'
            ledger.add(relation, 'no bound', str(form), verdict)
            continue
        same = bound.commutator in (reference, -reference)
        ledger.add(relation, bound.rhs_text(), str(form), 'match' if same else 'mismatch')

    for key, bound in engine.items():
        if key in seen:
            continue
        lhs = f'[{label(bound.a)}, {label(bound.b)}]'
        verdict = 'reference-inconsistent' if lhs in inconsistent else 'mismatch'
        ledger.add(f'{table.regime}/{carrier.case}/Delta({label(bound.a)})Delta({label(bound.b)})',
                   bound.rhs_text(), 'not printed', verdict)
    return ledger
