import argparse
import logging
import sys

import singer

from braidtk import commands
from braidtk.braid_core import BraidError
from braidtk.classify import THEOREMS, ClassifyError
from braidtk.config import ConfigError, load_config
from braidtk.garside import GarsideError, SummitSetCapError
from braidtk.invariants import InvariantError
from braidtk.json_schema import JSONSchemaError
from braidtk.laurent import LaurentPolyError

LOGGER = singer.get_logger()

USAGE_ERRORS = (BraidError, ClassifyError, ConfigError, GarsideError, InvariantError,
                JSONSchemaError, LaurentPolyError)


def _common_options():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--n', type=int, default=None, help='strand count')
    common.add_argument('--format', choices=['text', 'json', 'markdown'], default=None)
    common.add_argument('--max-n', dest='max_n', type=int, default=None)
    common.add_argument('--summit-cap', dest='summit_cap', type=int, default=None)
    common.add_argument('--seed', type=int, default=None)
    common.add_argument('--config', default=None, help='path to a JSON config file')
    common.add_argument('--log-level', dest='log_level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'])
    return common


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(prog='braidtk',
                                     description='Positive permutation braids: normal forms, '
                                                 'conjugacy and knot census.')
    sub = parser.add_subparsers(dest='command')

    p = sub.add_parser('perm2braid', parents=[common], help='permutation to positive braid word')
    p.add_argument('permutation')

    p = sub.add_parser('braid2perm', parents=[common], help='braid word to permutation')
    p.add_argument('word')

    p = sub.add_parser('nf', parents=[common], help='Garside left normal form')
    p.add_argument('word')

    p = sub.add_parser('conj', parents=[common], help='decide conjugacy of two braids')
    p.add_argument('a')
    p.add_argument('b')

    p = sub.add_parser('invariants', parents=[common], help='Burau and knot invariants')
    p.add_argument('word')

    p = sub.add_parser('enumerate', parents=[common], help='list n-cycle permutation braids')
    p.add_argument('size', type=int)

    p = sub.add_parser('classify', parents=[common], help='conjugacy classes of n-cycle braids')
    p.add_argument('size', type=int)

    p = sub.add_parser('verify', parents=[common], help='check a theorem at one strand count')
    p.add_argument('theorem', choices=THEOREMS)
    p.add_argument('size', type=int)

    sub.add_parser('demo-nonconj', parents=[common], help='the non-conjugate (2,5) torus knot pair')

    p = sub.add_parser('selftest', parents=[common], help='randomized braid relation rewrites')
    p.add_argument('--trials', type=int, default=1000)

    return parser


def main(argv=None, out=None):
    """
    Run one subcommand.
    :param argv: [optional] arguments, defaults to sys.argv[1:]
    :param out: [optional] text stream for results, defaults to stdout
    :return: exit code
    """
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else commands.EXIT_USAGE

    if not args.command:
        parser.print_usage(sys.stderr)
        return commands.EXIT_USAGE

    try:
        config = load_config(config_path=args.config, flags=vars(args))
        LOGGER.setLevel(logging.getLevelName(config['logging_level']))
        result = commands.COMMANDS[args.command](args, config)
    except SummitSetCapError as e:
        LOGGER.error(e)
        return commands.EXIT_CAP
    except USAGE_ERRORS as e:
        LOGGER.error(e)
        return commands.EXIT_USAGE
    except Exception as e:
        LOGGER.critical(e)
        raise e

    out.write(result.render(config['output_format']) + '\n')
    return result.code


def cli():
    sys.exit(main())
