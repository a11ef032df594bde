import argparse
import json

from twisted_phase_space.utils.utils_io import load_json_obj

COMMANDS = ['coproducts', 'phase-space', 'contract', 'uncertainty', 'verify']
CHECKS = ['coproducts', 'hopf', 'group', 'tables', 'jacobi', 'contraction', 'bounds', 'numeric']


class ConfigError(ValueError):
    pass


def load_config(path):
    try:
        config = load_json_obj(path)
    except (OSError, json.JSONDecodeError) as error:
        raise ConfigError(f'Cannot read config {path}: {error}') from error
    if not isinstance(config, dict):
        raise ConfigError(f'Config {path} must hold a JSON object, got {type(config).__name__}')
    return config


def parse_args(
        command='phase-space',
        carrier=None,
        k=None,
        l=None,
        gamma=None,
        order=8,
        format='text',
        out=None,
        seed=0,
        grid_points=2048,
        states=100,
        xi=1.0,
        zeta=None,
        save_dir=None,
        argv=None,
):
    parser = argparse.ArgumentParser(prog='twisted_phase_space')

    parser.add_argument(
        'command',
        nargs='?',
        choices=COMMANDS,
        help=f"Choose command from {COMMANDS}",
        default=command
    )
    parser.add_argument(
        '--config',
        type=str,
        help="JSON file whose keys override these defaults (explicit flags still win).",
        default=None
    )
    parser.add_argument(
        '-c', '--carrier',
        type=str,
        help="Choose carrier from ['rotation-gamma', 'rotation-zero', 'boost'] (verify: all when omitted).",
        default=carrier
    )
    parser.add_argument(
        '-k', '--k',
        type=int,
        help="Spatial index k of the carrier (default 1).",
        default=k
    )
    parser.add_argument(
        '-l', '--l',
        type=int,
        help="Spatial index l of the carrier (default 2).",
        default=l
    )
    parser.add_argument(
        '-g', '--gamma',
        type=int,
        help="Spatial index gamma, rotation-gamma only (default 3).",
        default=gamma
    )
    parser.add_argument(
        '-n', '--order',
        type=int,
        help="Truncation order in s = 1/(2 xi) (default 8).",
        default=order
    )
    parser.add_argument(
        '-f', '--format',
        type=str,
        choices=['text', 'json', 'latex'],
        help="Choose output format from ['text', 'json', 'latex'].",
        default=format
    )
    parser.add_argument(
        '-o', '--out',
        type=str,
        help="Output file (default stdout).",
        default=out
    )
    parser.add_argument(
        '--seed',
        type=int,
        help="Seed for the random states of the numeric check (default 0).",
        default=seed
    )
    parser.add_argument(
        '--grid-points',
        dest='grid_points',
        type=int,
        help="Quadrature points per axis before refinement (default 2048).",
        default=grid_points
    )
    parser.add_argument(
        '--states',
        type=int,
        help="Random Gaussian states per table in the numeric check (default 100).",
        default=states
    )
    parser.add_argument(
        '--xi',
        type=float,
        help="Numeric deformation scale used by the momentum realization (default 1.0).",
        default=xi
    )
    parser.add_argument(
        '--zeta',
        nargs=4,
        type=str,
        help="Twist fourvector zeta^0..zeta^3 as rationals (default: unit vector on the carrier index).",
        default=zeta
    )
    parser.add_argument(
        '-sd', '--save_dir',
        type=str,
        help="Directory for the parameter dumps (default none).",
        default=save_dir
    )
    parser.add_argument(
        '--galilean',
        action='store_true',
        help="uncertainty: use the contracted Galilean table.",
    )
    parser.add_argument(
        '--numeric',
        action='store_true',
        help="uncertainty/verify: run the numeric Robertson check.",
    )
    parser.add_argument(
        '--lorentz',
        action='store_true',
        help="phase-space: also emit [a, M] and [Lambda, P] cross relations.",
    )
    parser.add_argument(
        '--all',
        action='store_true',
        help="verify: run every check (default when no check is selected).",
    )
    for check in CHECKS:
        if check == 'numeric':
            continue
        parser.add_argument(
            f'--{check}',
            action='store_true',
            help=f"verify: run the {check} checks.",
        )

    pre_args, _ = parser.parse_known_args(argv)
    if pre_args.config:
        parser.set_defaults(**load_config(pre_args.config))

    return parser.parse_args(argv)


def selected_checks(args):
    chosen = [check for check in CHECKS if getattr(args, check, False)]
    if args.all or not chosen:
        return list(CHECKS)
    return chosen
