"""
python -m twisted_phase_space verify --all -n 6
python -m twisted_phase_space verify --jacobi -c boost
"""
import sys

from twisted_phase_space.contraction.contract import contract
from twisted_phase_space.contraction.reference_galilean import GALILEAN_REFERENCE
from twisted_phase_space.contraction.setup_contraction import CASE_OF_CARRIER
from twisted_phase_space.dual_group.consistency import group_consistency
from twisted_phase_space.heisenberg_double.phase_space import build_phase_space, jacobi_check, parity_check
from twisted_phase_space.heisenberg_double.reference_tables import RELATIVISTIC_REFERENCE, compare_with_reference
from twisted_phase_space.poincare.hopf_checks import hopf_report
from twisted_phase_space.poincare.reference_coproducts import verify_coproducts
from twisted_phase_space.poincare.setup_carrier import CARRIERS, carrier_from_params, setup_carrier_params
from twisted_phase_space.uncertainty.bounds import bounds, classical_limit_check
from twisted_phase_space.uncertainty.numeric_check import run_numeric_check
from twisted_phase_space.uncertainty.reference_bounds import compare_bounds
from twisted_phase_space.uncertainty.setup_numeric import setup_numeric_params
from twisted_phase_space.utils.emitters import setup_emitter
from twisted_phase_space.utils.parse_args import parse_args, selected_checks
from twisted_phase_space.utils.utils_io import write_output


def verify_carrier(carrier, order, checks, numeric_params=None):
    """Sections and pass flag of every selected check on one carrier."""
    sections = []
    printed = carrier.has_unit_zeta()

    if 'coproducts' in checks and printed:
        sections.append(('ledger', verify_coproducts(carrier, order)))
    if 'hopf' in checks:
        sections.append(('report', hopf_report(carrier, order, verbose=True)))
    if 'group' in checks:
        sections.append(('report', group_consistency(carrier, order, verbose=True)))

    needs_tables = {'tables', 'jacobi', 'contraction', 'bounds', 'numeric'} & set(checks)
    if not needs_tables:
        return sections

    case = CASE_OF_CARRIER[carrier.case]
    relativistic = build_phase_space(carrier, order)
    galilean = contract(relativistic)
    tables = [
        (relativistic, RELATIVISTIC_REFERENCE[carrier.case]),
        (galilean, GALILEAN_REFERENCE[case]),
    ]

    for table, reference in tables:
        table_ledger = None
        if printed and ({'tables', 'contraction', 'bounds'} & set(checks)):
            table_ledger = compare_with_reference(table, reference)
            wanted = 'tables' if table.regime == 'relativistic' else 'contraction'
            if wanted in checks:
                sections.append(('ledger', table_ledger))
        if 'jacobi' in checks:
            sections.append(('report', jacobi_check(table, verbose=True)))
            sections.append(('report', parity_check(table)))
        if 'bounds' in checks:
            if printed:
                sections.append(('ledger', compare_bounds(bounds(table), table, table_ledger)))
            sections.append(('report', classical_limit_check(table)))
        if 'numeric' in checks:
            sections.append(('numeric', run_numeric_check(table, numeric_params, verbose=True)))

    return sections


def run_verify(args):
    """Run the selected checks over one carrier, or all three when none is given."""
    checks = selected_checks(args)
    names = [args.carrier] if args.carrier else list(CARRIERS)
    numeric_params = None
    if 'numeric' in checks:
        numeric_params = setup_numeric_params(
            args.seed, args.grid_points, args.states, args.xi, save_dir=args.save_dir
        )

    sections = []
    for name in names:
        carrier_params = setup_carrier_params(
            name, args.k, args.l, args.gamma if name == 'rotation-gamma' else None, args.zeta,
            save_dir=args.save_dir
        )
        carrier = carrier_from_params(carrier_params)
        print(f'verifying {carrier}, order {args.order}: {", ".join(checks)}', file=sys.stderr)
        sections += verify_carrier(carrier, args.order, checks, numeric_params)

    failed = []
    for kind, payload in sections:
        if kind == 'ledger':
            print(f'{payload.name}: {payload.counts()}', file=sys.stderr)
        else:
            print(payload.summary(), file=sys.stderr)
        if not payload.passed:
            failed.append(payload.name if kind != 'numeric' else payload.summary())

    if failed:
        print(f'FAILED: {"; ".join(failed)}', file=sys.stderr)
    return (1 if failed else 0), sections


def launch(args):
    code, sections = run_verify(args)
    write_output(setup_emitter(args.format).emit(sections), args.out)
    return code


if __name__ == '__main__':

    args = parse_args(
        command='verify',
        order=6,
    )

    sys.exit(launch(args))
