"""
python -m twisted_phase_space coproducts -c rotation-gamma -n 4
"""
import sys

from tqdm import tqdm

from twisted_phase_space.algebra.generators import POINCARE
from twisted_phase_space.poincare.reference_coproducts import verify_coproducts
from twisted_phase_space.poincare.setup_carrier import carrier_from_params, setup_carrier_params
from twisted_phase_space.poincare.twist import twisted_poincare
from twisted_phase_space.utils.emitters import setup_emitter
from twisted_phase_space.utils.parse_args import parse_args
from twisted_phase_space.utils.utils_io import write_output


def launch(args):

    carrier_params = setup_carrier_params(
        args.carrier or 'rotation-gamma', args.k, args.l, args.gamma, args.zeta, save_dir=args.save_dir
    )
    carrier = carrier_from_params(carrier_params)
    print(f'twisted coproducts for {carrier}, order {args.order}', file=sys.stderr)

    hopf = twisted_poincare(carrier, args.order)
    coproducts = {g: hopf.coproduct(g) for g in tqdm(POINCARE, desc='coproducts', file=sys.stderr)}
    sections = [('coproducts', (carrier, args.order, coproducts))]

    if carrier.has_unit_zeta():
        ledger = verify_coproducts(carrier, args.order)
        print(ledger.to_frame()['verdict'].value_counts().to_string(), file=sys.stderr)
        sections.append(('ledger', ledger))

    write_output(setup_emitter(args.format).emit(sections), args.out)
    return 0


if __name__ == '__main__':

    args = parse_args(
        command='coproducts',
        carrier='rotation-gamma',
        order=4,
    )

    sys.exit(launch(args))
