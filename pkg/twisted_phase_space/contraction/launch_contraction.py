"""
python -m twisted_phase_space contract -c rotation-zero -n 8
"""
import sys

from twisted_phase_space.contraction.contract import contract
from twisted_phase_space.contraction.reference_galilean import GALILEAN_REFERENCE
from twisted_phase_space.contraction.setup_contraction import CASE_OF_CARRIER, setup_contraction_scheme
from twisted_phase_space.heisenberg_double.phase_space import build_phase_space, jacobi_check
from twisted_phase_space.heisenberg_double.reference_tables import compare_with_reference
from twisted_phase_space.poincare.setup_carrier import carrier_from_params, setup_carrier_params
from twisted_phase_space.utils.emitters import setup_emitter
from twisted_phase_space.utils.parse_args import parse_args
from twisted_phase_space.utils.utils_io import write_output


def launch(args):

    carrier_params = setup_carrier_params(
        args.carrier or 'rotation-gamma', args.k, args.l, args.gamma, args.zeta, save_dir=args.save_dir
    )
    carrier = carrier_from_params(carrier_params)
    case = CASE_OF_CARRIER[carrier.case]
    scheme = setup_contraction_scheme(case, save_dir=args.save_dir)
    print(f'Galilean contraction case {case} for {carrier}, order {args.order}', file=sys.stderr)

    galilean = contract(build_phase_space(carrier, args.order), scheme)
    sections = [('table', galilean)]

    jacobi = jacobi_check(galilean)
    print(jacobi.summary(), file=sys.stderr)
    sections.append(('report', jacobi))

    if carrier.has_unit_zeta():
        ledger = compare_with_reference(galilean, GALILEAN_REFERENCE[case])
        print(ledger.to_frame()['verdict'].value_counts().to_string(), file=sys.stderr)
        sections.append(('ledger', ledger))

    write_output(setup_emitter(args.format).emit(sections), args.out)
    return 0


if __name__ == '__main__':

    args = parse_args(
        command='contract',
        carrier='rotation-zero',
        order=8,
    )

    sys.exit(launch(args))
