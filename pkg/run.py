import os, sys, yaml, logging, argparse

from kummer import KummerError, UsageError

from module import (
    Hodge,
    Euler,
    ToricVerifier,
    InvariantChecker,
    emit
)


ROOT = os.path.dirname(os.path.abspath(__file__))
CONFIG_PATH = os.path.join(ROOT, 'config.yaml')

logging.basicConfig(format='%(name)s:%(levelname)s:%(message)s')
logger = logging.getLogger('kummer')



class Config(object):
    def __init__(self, args):

        with open(CONFIG_PATH, 'r') as f:
            params = yaml.load(f, Loader=yaml.FullLoader)
            for group in params.keys():
                for key, val in params[group].items():
                    setattr(self, key, val)

        self.charts = os.path.join(ROOT, self.charts)
        self.quotients = os.path.join(ROOT, self.quotients)

        #Command line flags override the yaml defaults
        for key, val in vars(args).items():
            if val is not None or not hasattr(self, key):
                setattr(self, key, val)

        self.subcommand = args.subcommand
        for key in ('action', 'file', 'r', 'weights'):
            if not hasattr(self, key):
                setattr(self, key, None)

        #Dimension and group order start at 1
        for key in ('n', 'r'):
            val = getattr(self, key, None)
            if val is not None and val < 1:
                raise UsageError(f"--{key} must be at least 1, got {val}")

        if self.format not in ('json', 'table'):
            raise UsageError(f"unknown format {self.format!r}")


    def print_attr(self):
        for attribute, value in self.__dict__.items():
            logger.debug(f"* {attribute}: {value}")




class ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")



def int_list(text):
    try:
        return [int(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")



def build_parser():
    common = ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['json', 'table'])
    common.add_argument('--out')
    common.add_argument('--budget', type=int)
    common.add_argument('--workers', type=int)
    common.add_argument('-v', '--verbose', action='store_true')

    parser = ArgumentParser(prog='run.py')
    sub = parser.add_subparsers(dest='subcommand', parser_class=ArgumentParser, required=True)

    for name in ('hodge', 'diamond', 'euler'):
        cmd = sub.add_parser(name, parents=[common])
        cmd.add_argument('--d', type=int, required=True, choices=[2, 3, 4, 6])
        cmd.add_argument('--n', type=int, required=True)
        cmd.add_argument('--method', choices=['brute', 'closed', 'both'], default='closed')

    toric = sub.add_parser('toric')
    toric_sub = toric.add_subparsers(dest='action', parser_class=ArgumentParser, required=True)
    juniors = toric_sub.add_parser('juniors', parents=[common])
    juniors.add_argument('--r', type=int, required=True)
    juniors.add_argument('--weights', type=int_list, required=True)
    verify = toric_sub.add_parser('verify', parents=[common])
    verify.add_argument('--file')

    invariants = sub.add_parser('invariants')
    inv_sub = invariants.add_subparsers(dest='action', parser_class=ArgumentParser, required=True)
    for name in ('gens', 'verify', 'identity', 'twist'):
        cmd = inv_sub.add_parser(name, parents=[common])
        cmd.add_argument('--n', type=int, required=True)
        cmd.add_argument('--d', type=int, choices=[3, 4])
        cmd.add_argument('--family', choices=['g1', 'g2', 'h1', 'h3'])
        cmd.add_argument('--vars', choices=['x', 'xy'])
        cmd.add_argument('--max-degree', dest='max_degree', type=int)
        cmd.add_argument('--twist', type=int)
        cmd.add_argument('--file')

    return parser



def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            logging.getLogger('kummer').setLevel(logging.DEBUG)

        config = Config(args)
        config.print_attr()

        if config.subcommand in ('hodge', 'diamond'):
            runner = Hodge(config)
        elif config.subcommand == 'euler':
            runner = Euler(config)
        elif config.subcommand == 'toric':
            runner = ToricVerifier(config)
        else:
            runner = InvariantChecker(config)

        return emit(runner.run(), config)

    except KummerError as exc:
        logger.error(str(exc))
        return exc.exit_code



if __name__ == '__main__':
    sys.exit(main())
