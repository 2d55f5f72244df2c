"""
Commands on old spaces and newform decompositions.
"""

import argparse

from ..newform import (
    Verdict,
    combined_old_generators,
    lemma31_kill,
    level_old_generators,
    membership,
    theorem13_decompose,
    theta_kernel_decompose,
    weight_old_generators,
)
from .base import BaseCommand, CommandContext, CommandResult, CommandStatus, parse_int_list

_MODES = ("combined", "weight", "level")


def _basis(f, mode: str, level: int, weight: int):
    if mode == "weight":
        return weight_old_generators(f, weight)
    if mode == "level":
        return level_old_generators(f, level)
    return combined_old_generators(f, level, weight)


class KillCommand(BaseCommand):
    """Kill a_{l^m} for l in S: prod (1 - a_l B_l) f."""

    @property
    def name(self) -> str:
        return "kill"

    @property
    def description(self) -> str:
        return "Kill the coefficients at primes S dividing the level"

    @property
    def category(self) -> str:
        return "newform"

    @property
    def required_parameters(self) -> list[str]:
        return ["primes"]

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--primes", dest="primes", help="comma separated primes, e.g. 2,3")

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        (f,) = context.load_inputs(1, self.name)
        primes = parse_int_list(args.primes)
        g = lemma31_kill(f, primes)
        data = {"primes": primes, "level": g.level, "prec": g.prec}
        return self.result(CommandStatus.VERIFIED, f"killed at {primes}", data, g)


class DecomposeThetaCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "decompose-theta"

    @property
    def description(self) -> str:
        return "Write a form killed by theta as A^r g(q^p)"

    @property
    def category(self) -> str:
        return "newform"

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        (f,) = context.load_inputs(1, self.name)
        r, g = theta_kernel_decompose(f)
        data = {"r": r, "weight": g.weight, "prec": g.prec}
        return self.result(CommandStatus.VERIFIED, f"f = A^{r} g(q^p)", data, g)


class OldSpaceCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "oldspace"

    @property
    def description(self) -> str:
        return "List the old space generators f(q^{d p^j}) of a form"

    @property
    def category(self) -> str:
        return "newform"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--level", type=int, default=None)
        parser.add_argument("--weight", type=int, default=None)
        parser.add_argument("--mode", choices=_MODES, default="combined")

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        (f,) = context.load_inputs(1, self.name)
        level = args.level if args.level is not None else f.level
        weight = args.weight if args.weight is not None else f.weight
        basis = _basis(f, args.mode, level, weight)
        data = {
            "mode": args.mode,
            "level": level,
            "weight": weight,
            "generators": [str(label) for label in basis.labels],
            "count": len(basis),
        }
        return self.result(CommandStatus.VERIFIED, f"{len(basis)} generators", data)


class MemberCommand(BaseCommand):
    """--in F --in f: is F in the old space of f?"""

    @property
    def name(self) -> str:
        return "member"

    @property
    def description(self) -> str:
        return "Decide membership of the first form in the old space of the second"

    @property
    def category(self) -> str:
        return "newform"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--mode", choices=_MODES, default="combined")

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        F, f = context.load_inputs(2, self.name)
        result = membership(F, _basis(f, args.mode, F.level, F.weight))
        status = CommandStatus.FAILED if result.verdict is Verdict.NON_MEMBER else CommandStatus.VERIFIED
        return self.result(status, result.label, result.to_dict())


class DecomposeCommand(BaseCommand):
    """F = sum_d gamma_d B_d F1 with F1 in the weight old space of the newform."""

    @property
    def name(self) -> str:
        return "decompose"

    @property
    def description(self) -> str:
        return "Two-stage old space decomposition of a form against a newform"

    @property
    def category(self) -> str:
        return "newform"

    @property
    def required_parameters(self) -> list[str]:
        return ["newform"]

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--newform", default=None)

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        (F,) = context.load_inputs(1, self.name)
        f = context.load(args.newform)
        certificate = theorem13_decompose(F, f)
        return self.result(
            CommandStatus.VERIFIED,
            f"decomposed to precision {certificate.certified_precision}",
            certificate.to_dict(),
        )
