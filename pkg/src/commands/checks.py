"""
Commands that check identities between forms and report witnesses.
"""

import argparse

from ..newform import check_cor37, check_prop24, companion_check, compare_eigensystems
from .base import BaseCommand, CommandContext, CommandResult, CommandStatus, parse_int_list


def _status(holds: bool) -> CommandStatus:
    return CommandStatus.VERIFIED if holds else CommandStatus.FAILED


class CheckCor37Command(BaseCommand):
    @property
    def name(self) -> str:
        return "check-cor37"

    @property
    def description(self) -> str:
        return "Classify primes and check eigenvalue identities of F against a newform"

    @property
    def category(self) -> str:
        return "check"

    @property
    def required_parameters(self) -> list[str]:
        return ["newform"]

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--newform", default=None)

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        (F,) = context.load_inputs(1, self.name)
        report = check_cor37(F, context.load(args.newform))
        message = "all classified primes satisfied" if report.holds else f"violations at {report.violations}"
        return self.result(_status(report.holds), message, report.to_dict())


class CheckCor47Command(BaseCommand):
    """--in F --in G: companion identity, then comparison with --newform."""

    @property
    def name(self) -> str:
        return "check-cor47"

    @property
    def description(self) -> str:
        return "Check n^k b_n = n a_n for a companion pair and compare with a newform"

    @property
    def category(self) -> str:
        return "check"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--newform", default=None)
        parser.add_argument("--reducible", action="store_true", help="compare with theta^(p-1) f")

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        F, G = context.load_inputs(2, self.name)
        f = context.load(args.newform) if args.newform else None
        report = companion_check(F, G, f, reducible=args.reducible)
        message = "companion identities hold" if report.holds else "companion comparison violated"
        return self.result(_status(report.holds), message, report.to_dict())


class CheckProp24Command(BaseCommand):
    @property
    def name(self) -> str:
        return "check-prop24"

    @property
    def description(self) -> str:
        return "Weights congruent mod p-1 and equal characters for two forms"

    @property
    def category(self) -> str:
        return "check"

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        f, g = context.load_inputs(2, self.name)
        report = check_prop24(f, g)
        message = "weights and characters compatible" if report.consistent else "weights or characters differ"
        return self.result(_status(report.consistent), message, report.to_dict())


class CompareCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "compare"

    @property
    def description(self) -> str:
        return "Compare the eigensystems of two eigenforms away from bad primes"

    @property
    def category(self) -> str:
        return "check"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--bad", default="", help="comma separated primes to skip")
        parser.add_argument("--bound", type=int, default=None)

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        f, g = context.load_inputs(2, self.name)
        bound = args.bound if args.bound is not None else min(f.prec, g.prec)
        result = compare_eigensystems(f, g, parse_int_list(args.bad), bound)
        if result.equal:
            message = f"equal up to {result.bound}"
        else:
            message = f"first divergence at l={result.divergence[0]}"
        return self.result(_status(result.equal), message, result.to_dict())
