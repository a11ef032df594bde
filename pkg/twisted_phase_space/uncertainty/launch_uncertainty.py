"""
python -m twisted_phase_space uncertainty -c boost --galilean --numeric --states 20
"""
import sys

from twisted_phase_space.contraction.contract import contract
from twisted_phase_space.contraction.reference_galilean import GALILEAN_REFERENCE
from twisted_phase_space.contraction.setup_contraction import CASE_OF_CARRIER
from twisted_phase_space.heisenberg_double.phase_space import build_phase_space
from twisted_phase_space.heisenberg_double.reference_tables import RELATIVISTIC_REFERENCE, compare_with_reference
from twisted_phase_space.poincare.setup_carrier import carrier_from_params, setup_carrier_params
from twisted_phase_space.uncertainty.bounds import bounds, minimal_momenta
from twisted_phase_space.uncertainty.numeric_check import run_numeric_check
from twisted_phase_space.uncertainty.reference_bounds import compare_bounds
from twisted_phase_space.uncertainty.setup_numeric import setup_numeric_params
from twisted_phase_space.utils.emitters import setup_emitter
from twisted_phase_space.utils.parse_args import parse_args
from twisted_phase_space.utils.utils_io import write_output


def launch(args):

    carrier_params = setup_carrier_params(
        args.carrier or 'rotation-gamma', args.k, args.l, args.gamma, args.zeta, save_dir=args.save_dir
    )
    carrier = carrier_from_params(carrier_params)

    table = build_phase_space(carrier, args.order)
    reference = RELATIVISTIC_REFERENCE[carrier.case]
    if args.galilean:
        case = CASE_OF_CARRIER[carrier.case]
        table = contract(table)
        reference = GALILEAN_REFERENCE[case]
    print(f'{table.regime} uncertainty bounds for {carrier}, order {args.order}', file=sys.stderr)

    table_bounds = bounds(table)
    sections = [('bounds', table_bounds)]

    if carrier.has_unit_zeta():
        table_ledger = compare_with_reference(table, reference)
        ledger = compare_bounds(table_bounds, table, table_ledger)
        print(ledger.to_frame()['verdict'].value_counts().to_string(), file=sys.stderr)
        sections.append(('ledger', ledger))

    momenta = minimal_momenta(table, xi=args.xi)
    if not momenta.empty:
        sections.append(('frame', ('minimal_momenta', momenta)))

    passed = True
    if args.numeric:
        numeric_params = setup_numeric_params(
            args.seed, args.grid_points, args.states, args.xi, save_dir=args.save_dir
        )
        report = run_numeric_check(table, numeric_params, verbose=True)
        print(report.summary(), file=sys.stderr)
        sections.append(('numeric', report))
        passed = report.passed

    write_output(setup_emitter(args.format).emit(sections), args.out)
    return 0 if passed else 1


if __name__ == '__main__':

    args = parse_args(
        command='uncertainty',
        carrier='rotation-gamma',
        order=8,
    )

    sys.exit(launch(args))
