"""
python -m twisted_phase_space <command> [options]

Exit codes: 0 pass, 1 verification failure, 2 usage or configuration error.
"""
import sys

from twisted_phase_space.contraction import launch_contraction
from twisted_phase_space.heisenberg_double import launch_phase_space
from twisted_phase_space.poincare import launch_coproducts
from twisted_phase_space.uncertainty import launch_uncertainty
from twisted_phase_space.utils.parse_args import parse_args
from twisted_phase_space.verify import launch_verify

LAUNCHERS = {
    'coproducts': launch_coproducts.launch,
    'phase-space': launch_phase_space.launch,
    'contract': launch_contraction.launch,
    'uncertainty': launch_uncertainty.launch,
    'verify': launch_verify.launch,
}


def main(argv=None):
    try:
        args = parse_args(argv=argv)
        return LAUNCHERS[args.command](args)
    except ValueError as error:
        print(f'error: {error}', file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
