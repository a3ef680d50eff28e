import argparse
import logging
import sys
from pathlib import Path

# Make the src package importable when run as a script
project_root = Path(__file__).parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

from pydantic import ValidationError

from src.commands.envelope import EXIT_MISMATCH, EXIT_USAGE, OutputEnvelope
from src.commands.handlers import COMMANDS, COUNT_METHODS
from src.commands.verify import PROFILES
from src.core.config import get_settings
from src.core.exceptions import InconsistencyError, KDyckError
from src.utils.helpers import format_error_message


class UsageError(Exception):
    pass


class KDyckArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; 2 is reserved for mismatches here."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json", help="Output format")
    common.add_argument("--verbose", action="store_true", help="Log debug output to stderr")

    parser = KDyckArgumentParser(
        prog="kdyck", description=get_settings().APP_NAME
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=KDyckArgumentParser)

    p = sub.add_parser("count", parents=[common], help="Number of k_t-Dyck paths of length (k+1)n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=COUNT_METHODS, default="formula")

    p = sub.add_parser("table", parents=[common], help="Counts for n = 0..nmax")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)

    p = sub.add_parser("dpoly", parents=[common], help="Determinant polynomial D_m")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("ratio", parents=[common], help="Bounded / unbounded count quotients and their limit")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)

    p = sub.add_parser("dist", parents=[common], help="Distribution of J for k = 1")
    p.add_argument("--t", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--n", type=int, help="Finite half-length n")
    group.add_argument("--limit", action="store_true", help="Limiting law")
    p.add_argument("--M", type=int, default=None, help="Truncation for --limit (default: automatic)")

    p = sub.add_parser("strip", parents=[common], help="Strip-confined counts by three methods")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--len", type=int, required=True, help="Largest path length")

    p = sub.add_parser("biject", parents=[common], help="k_t-path <-> (t+1)-tuple of k-Dyck paths")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--path", type=str, default=None, help="U/D text of a k_t-path")
    p.add_argument("--tuple", type=str, default=None, help='JSON array of U/D texts, e.g. ["UD",""]')

    p = sub.add_parser("split-fg", parents=[common], help="F/G split of a non-negative path ending on level t")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--path", type=str, required=True)
    p.add_argument("--lift", action="store_true", help="Treat --path as a k_t-path and lift it first")

    p = sub.add_parser("levels", parents=[common], help="Coordinates of a path")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--path", type=str, required=True)

    p = sub.add_parser("verify", parents=[common], help="Run the oracle grid")
    p.add_argument("--profile", choices=PROFILES, default="quick")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE

    settings = get_settings()
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.LOG_LEVEL.upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        envelope = COMMANDS[args.command](args)
    except InconsistencyError as e:
        logging.error("Internal cross-check failed: %s", e)
        envelope = OutputEnvelope(command=args.command, result=format_error_message(e), exit_code=EXIT_MISMATCH)
    except (KDyckError, ValidationError, ValueError) as e:
        logging.debug("Rejected parameters: %s", e)
        envelope = OutputEnvelope(command=args.command, result=format_error_message(e), exit_code=EXIT_USAGE)

    fmt = args.format if envelope.rows is not None else "json"
    sys.stdout.write(envelope.render(fmt))
    if fmt == "json":
        sys.stdout.write("\n")
    return envelope.exit_code


if __name__ == "__main__":
    sys.exit(main())
