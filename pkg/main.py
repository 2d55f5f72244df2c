import argparse
import sys
from typing import List, Optional

from src.commands import CommandContext, CommandResult, get_command_registry
from src.config.settings import configure_logging
from src.qseries import serialize_form
from src.reporting import render_report


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=int, default=None, help="precision (constructions) or truncation (inputs)")
    common.add_argument("--field", default=None, help="coefficient field p^d")
    common.add_argument("--in", dest="inputs", action="append", default=[], metavar="FILE")
    common.add_argument("--out", default=None, metavar="FILE")
    common.add_argument("--format", choices=("text", "report"), default=None)

    parser = argparse.ArgumentParser(
        prog="kats",
        description="Kats - exact mod-p Katz modular form toolkit",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  kats eisenstein -k 4 --chi1 triv --chi2 triv -p 7 --prec 50
  kats check-cor37 --in F.form --newform f.form --prec 100
  kats compare --in a.form --in b.form --bad 2,3 --bound 200
  kats corpus delta -p 691 --prec 200 --out delta.form
        """,
    )
    sub = parser.add_subparsers(dest="cmd", required=True)
    for name, command in get_command_registry().get_all_commands().items():
        command.configure(sub.add_parser(name, help=command.description, parents=[common]))
    return parser


def emit(result: CommandResult, context: CommandContext) -> None:
    """Forms and exact expansions go to --out (or stdout in text format); reports go to stdout."""
    if result.text is not None:
        if context.out:
            with open(context.out, "w", encoding="utf-8") as handle:
                handle.write(result.text)
        elif context.format == "text":
            sys.stdout.write(result.text)
            return
    if result.form is not None and context.out:
        with open(context.out, "w", encoding="utf-8") as handle:
            handle.write(serialize_form(result.form))
    if result.form is not None and context.format == "text" and not context.out:
        sys.stdout.write(serialize_form(result.form))
        return
    if context.format == "text":
        sys.stdout.write(f"[{result.status.value}] {result.message}\n")
    sys.stdout.write(render_report(result.to_dict()))


def run_command(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    configure_logging()
    command = get_command_registry().get_command(args.cmd)
    try:
        context = CommandContext.from_args(args)
    except Exception as e:
        sys.stderr.write(f"kats: {e}\n")
        return 2
    result = command.safe_execute(context, args)
    if not result.success:
        sys.stderr.write(f"kats {command.name}: {result.message}\n")
    emit(result, context)
    return result.exit_code


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run_command(argv))


if __name__ == "__main__":
    main()
