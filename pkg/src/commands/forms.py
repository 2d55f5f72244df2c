"""
Commands that construct or transform a single form.
"""

import argparse

from ..corpus import corpus_get, list_entries
from ..eisenstein import exact_eisenstein, is_new_eisenstein_candidate, katz_eisenstein
from ..newform import lemma45_construct
from ..qseries import degeneracy_Bd, frobenius, hecke_Tn, theta_power
from .base import BaseCommand, CommandContext, CommandResult, CommandStatus, parse_character_option


def _form_data(f) -> dict:
    return {"level": f.level, "weight": f.weight, "prec": f.prec, "character": f.character.token()}


class EisensteinCommand(BaseCommand):
    """Reduce a Katz Eisenstein series E_k^{chi1,chi2}(q^t) mod p."""

    @property
    def name(self) -> str:
        return "eisenstein"

    @property
    def description(self) -> str:
        return "Katz Eisenstein series E_k^{chi1,chi2} reduced mod p"

    @property
    def category(self) -> str:
        return "construction"

    @property
    def required_parameters(self) -> list[str]:
        return ["weight", "p"]

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("-k", dest="weight", type=int)
        parser.add_argument("-p", dest="p", type=int)
        parser.add_argument("-t", dest="t", type=int, default=1)
        parser.add_argument("--chi1", default="triv", help="chi(N; g:v, ...) or triv")
        parser.add_argument("--chi2", default="triv", help="chi(N; g:v, ...) or triv")
        parser.add_argument("--exact", action="store_true", help="write the unreduced expansion as cyc(...) tokens")

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        base = context.base_for(args.p)
        chi1 = parse_character_option(args.chi1, base)
        chi2 = parse_character_option(args.chi2, base)
        if args.exact:
            exact = exact_eisenstein(args.weight, chi1, chi2, args.t, context.precision)
            data = {"level": exact.level, "weight": exact.weight, "prec": exact.prec}
            result = self.result(CommandStatus.VERIFIED, f"exact E_{args.weight} at level {exact.level}", data)
            result.text = exact.to_text()
            return result
        f = katz_eisenstein(args.weight, chi1, chi2, args.t, args.p, context.precision)
        check = is_new_eisenstein_candidate(args.weight, chi1, chi2, args.p)
        data = {**_form_data(f), "rep": f.rep.describe(), "new_eisenstein": check.holds}
        return self.result(CommandStatus.VERIFIED, f"E_{args.weight} at level {f.level}", data, f)


class HeckeCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "hecke"

    @property
    def description(self) -> str:
        return "Apply the Hecke operator T_n"

    @property
    def category(self) -> str:
        return "operator"

    @property
    def required_parameters(self) -> list[str]:
        return ["n"]

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("-n", dest="n", type=int)

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        (f,) = context.load_inputs(1, self.name)
        g = hecke_Tn(f, args.n)
        return self.result(CommandStatus.VERIFIED, f"T_{args.n} applied", _form_data(g), g)


class ThetaCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "theta"

    @property
    def description(self) -> str:
        return "Apply theta = q d/dq, optionally a times"

    @property
    def category(self) -> str:
        return "operator"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--power", dest="power", type=int, default=1)

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        (f,) = context.load_inputs(1, self.name)
        g = theta_power(f, args.power)
        return self.result(CommandStatus.VERIFIED, f"theta^{args.power} applied", _form_data(g), g)


class FrobeniusCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "frobenius"

    @property
    def description(self) -> str:
        return "f(q) -> f(q^p), weight multiplied by p"

    @property
    def category(self) -> str:
        return "operator"

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        (f,) = context.load_inputs(1, self.name)
        g = frobenius(f)
        return self.result(CommandStatus.VERIFIED, "Frobenius applied", _form_data(g), g)


class DegeneracyCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "degeneracy"

    @property
    def description(self) -> str:
        return "B_d: f(q) -> f(q^d) at level M (default dN)"

    @property
    def category(self) -> str:
        return "operator"

    @property
    def required_parameters(self) -> list[str]:
        return ["d"]

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("-d", dest="d", type=int)
        parser.add_argument("--level", dest="level", type=int, default=None)

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        (f,) = context.load_inputs(1, self.name)
        level = args.level if args.level is not None else args.d * f.level
        g = degeneracy_Bd(f, args.d, level)
        return self.result(CommandStatus.VERIFIED, f"B_{args.d} into level {level}", _form_data(g), g)


class Lemma45Command(BaseCommand):
    """theta^a of an Eisenstein series with a prescribed reducible representation."""

    @property
    def name(self) -> str:
        return "lemma45"

    @property
    def description(self) -> str:
        return "Eigenform realizing eps' chi_p^a + eps chi_p^b (cases i-iv)"

    @property
    def category(self) -> str:
        return "construction"

    @property
    def required_parameters(self) -> list[str]:
        return ["case", "a", "weight", "p"]

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("--case", choices=("i", "ii", "iii", "iv"))
        parser.add_argument("-a", dest="a", type=int)
        parser.add_argument("-b", dest="b", type=int, default=None)
        parser.add_argument("-k", dest="weight", type=int)
        parser.add_argument("-p", dest="p", type=int)
        parser.add_argument("--eps", default="triv")
        parser.add_argument("--eps-prime", dest="eps_prime", default="triv")

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        base = context.base_for(args.p)
        eps = parse_character_option(args.eps, base)
        eps_prime = parse_character_option(args.eps_prime, base)
        g = lemma45_construct(args.case, args.a, args.weight, eps, eps_prime, args.p, context.precision, args.b)
        data = {**_form_data(g), "case": args.case, "rep": g.rep.describe()}
        return self.result(CommandStatus.VERIFIED, f"case {args.case} eigenform of weight {g.weight}", data, g)


class CorpusCommand(BaseCommand):
    @property
    def name(self) -> str:
        return "corpus"

    @property
    def description(self) -> str:
        return "Reduce a built-in integer form mod p, or list the entries"

    @property
    def category(self) -> str:
        return "construction"

    def configure(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("entry", nargs="?", default=None)
        parser.add_argument("-p", dest="p", type=int, default=None)
        parser.add_argument("--list", dest="list_entries", action="store_true")

    def validate_parameters(self, args: argparse.Namespace) -> tuple[bool, str]:
        if args.list_entries:
            return True, ""
        if args.entry is None or args.p is None:
            return False, "Missing required parameters: entry, p"
        return True, ""

    def execute(self, context: CommandContext, args: argparse.Namespace) -> CommandResult:
        if args.list_entries:
            entries = list_entries()
            return self.result(CommandStatus.VERIFIED, f"{len(entries)} corpus entries", {"entries": entries})
        f = corpus_get(args.entry, args.p, context.precision, context.base_for(args.p))
        return self.result(CommandStatus.VERIFIED, f"{args.entry} mod {args.p}", _form_data(f), f)
