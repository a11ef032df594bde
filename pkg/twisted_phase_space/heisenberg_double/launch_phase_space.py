"""
python -m twisted_phase_space phase-space -c boost -n 8 -f latex
"""
import sys

from twisted_phase_space.heisenberg_double.cross_relations import lorentz_cross_relations
from twisted_phase_space.heisenberg_double.phase_space import build_phase_space, jacobi_check
from twisted_phase_space.heisenberg_double.reference_tables import RELATIVISTIC_REFERENCE, compare_with_reference
from twisted_phase_space.poincare.setup_carrier import carrier_from_params, setup_carrier_params
from twisted_phase_space.utils.emitters import setup_emitter
from twisted_phase_space.utils.parse_args import parse_args
from twisted_phase_space.utils.utils_io import write_output


def launch(args):

    carrier_params = setup_carrier_params(
        args.carrier or 'rotation-gamma', args.k, args.l, args.gamma, args.zeta, save_dir=args.save_dir
    )
    carrier = carrier_from_params(carrier_params)
    print(f'phase space for {carrier}, order {args.order}', file=sys.stderr)

    table = build_phase_space(carrier, args.order)
    sections = [('table', table)]

    jacobi = jacobi_check(table)
    print(jacobi.summary(), file=sys.stderr)
    sections.append(('report', jacobi))

    if carrier.has_unit_zeta():
        ledger = compare_with_reference(table, RELATIVISTIC_REFERENCE[carrier.case])
        print(ledger.to_frame()['verdict'].value_counts().to_string(), file=sys.stderr)
        sections.append(('ledger', ledger))

    if args.lorentz:
        sections.append(('cross', lorentz_cross_relations(carrier, args.order)))

    write_output(setup_emitter(args.format).emit(sections), args.out)
    return 0


if __name__ == '__main__':

    args = parse_args(
        command='phase-space',
        carrier='rotation-gamma',
        order=8,
    )

    sys.exit(launch(args))
