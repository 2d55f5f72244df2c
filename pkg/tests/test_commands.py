"""
Tests for the kats command line: exit codes, form files and reports.
"""

from fractions import Fraction

import pytest

from main import run_command
from src.characters import parse_cyclo
from src.commands import CommandStatus, get_command_by_name, get_command_registry
from src.corpus import corpus_get
from src.eisenstein import katz_eisenstein
from src.qseries import parse_form, read_form, write_form


@pytest.fixture
def form_file(tmp_path):
    def write(name, f):
        path = tmp_path / f"{name}.form"
        write_form(f, path)
        return str(path)

    return write


class TestRegistry:
    def test_all_commands_registered(self):
        registry = get_command_registry()
        assert len(registry.list_command_names()) == 16
        assert "check-cor37" in registry.list_command_names()
        assert set(registry.list_categories()) == {"check", "construction", "newform", "operator"}

    def test_command_lookup(self):
        command = get_command_by_name("eisenstein")
        assert command.get_schema()["required_parameters"] == ["weight", "p"]
        assert get_command_by_name("missing") is None

    def test_status_exit_codes(self):
        assert [s.exit_code for s in CommandStatus] == [0, 1, 2]


class TestConstructions:
    def test_eisenstein_to_file(self, tmp_path, capsys):
        out = tmp_path / "e4.form"
        code = run_command(["eisenstein", "-k", "4", "-p", "7", "--prec", "20", "--out", str(out)])
        assert code == 0
        f = read_form(out)
        assert f.prec == 20
        assert f.a(0) == 4
        stdout = capsys.readouterr().out
        assert stdout.startswith("[verified] E_4 at level 1")
        assert "new_eisenstein=true" in stdout

    def test_eisenstein_to_stdout(self, capsys):
        code = run_command(["eisenstein", "-k", "3", "--chi1", "chi(4; 3:-1)", "-p", "7", "--prec", "10"])
        assert code == 0
        f = parse_form(capsys.readouterr().out)
        assert f.level == 4
        assert f.a(3) == 6

    def test_extension_field(self, tmp_path):
        out = tmp_path / "e4.form"
        assert run_command(["eisenstein", "-k", "4", "-p", "7", "--field", "7^2", "--prec", "5", "--out", str(out)]) == 0
        assert read_form(out).base.d == 2

    def test_exact_expansion_tokens(self, tmp_path, capsys):
        out = tmp_path / "e4.exact"
        assert run_command(["eisenstein", "-k", "4", "-p", "7", "--prec", "6", "--exact", "--out", str(out)]) == 0
        assert capsys.readouterr().out.startswith("[verified] exact E_4 at level 1")
        lines = out.read_text().splitlines()
        assert lines[:2] == ["exact N=1 k=4", "prec=6"]
        coeffs = dict(line.split("=", 1) for line in lines[2:])
        assert parse_cyclo(coeffs["a0"]) == Fraction(1, 240)
        assert parse_cyclo(coeffs["a2"]) == 9
        assert parse_cyclo(coeffs["a6"]) == 252

    def test_exact_expansion_with_character(self, capsys):
        assert run_command(["eisenstein", "-k", "3", "--chi1", "chi(4; 3:-1)", "-p", "7", "--prec", "4", "--exact"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "exact N=4 k=3"
        coeffs = dict(line.split("=", 1) for line in lines[2:])
        assert "a2" in coeffs
        assert parse_cyclo(coeffs["a3"]) == -8

    def test_report_format(self, capsys):
        assert run_command(["eisenstein", "-k", "4", "-p", "7", "--prec", "5", "--format", "report"]) == 0
        stdout = capsys.readouterr().out
        assert "status=verified\n" in stdout
        assert stdout.startswith("character=")

    def test_parity_violation_exits_two(self, capsys):
        assert run_command(["eisenstein", "-k", "3", "-p", "7"]) == 2
        captured = capsys.readouterr()
        assert "kats eisenstein:" in captured.err
        assert "error_type=ParityViolation" in captured.out

    def test_usage_errors(self, capsys):
        assert run_command(["eisenstein", "--bogus"]) == 2
        assert run_command(["eisenstein", "-p", "7"]) == 2
        assert "Parameter validation failed" in capsys.readouterr().err

    def test_lemma45(self, capsys):
        code = run_command(["lemma45", "--case", "iii", "-a", "1", "-k", "4", "-p", "7", "--prec", "10", "--format", "report"])
        assert code == 0
        assert "weight=12\n" in capsys.readouterr().out

    def test_corpus(self, tmp_path, capsys):
        assert run_command(["corpus", "--list"]) == 0
        assert "delta" in capsys.readouterr().out
        out = tmp_path / "delta.form"
        assert run_command(["corpus", "delta", "-p", "7", "--prec", "10", "--out", str(out)]) == 0
        assert read_form(out).a(2) == 4
        assert run_command(["corpus", "delta"]) == 2


class TestOperators:
    def test_hecke_and_theta(self, form_file, tmp_path, e4):
        path = form_file("e4", e4)
        out = tmp_path / "t2.form"
        assert run_command(["hecke", "--in", path, "-n", "2", "--out", str(out)]) == 0
        assert read_form(out).qexp == e4.qexp.scale(9).truncate(75)
        assert run_command(["theta", "--in", path, "--power", "2", "--out", str(out)]) == 0
        assert read_form(out).weight == 4 + 2 * 8

    def test_prec_truncates_inputs(self, form_file, tmp_path, e4):
        out = tmp_path / "f.form"
        assert run_command(["frobenius", "--in", form_file("e4", e4), "--prec", "10", "--out", str(out)]) == 0
        assert read_form(out).prec == 70

    def test_degeneracy(self, form_file, tmp_path, e4):
        out = tmp_path / "b2.form"
        assert run_command(["degeneracy", "--in", form_file("e4", e4), "-d", "2", "--prec", "10", "--out", str(out)]) == 0
        assert read_form(out).level == 2
        assert run_command(["degeneracy", "--in", form_file("e4", e4), "-d", "7"]) == 2

    def test_wrong_number_of_inputs(self, form_file, e4, capsys):
        assert run_command(["frobenius"]) == 2
        assert "expected 1 --in file(s)" in capsys.readouterr().err


class TestNewformCommands:
    def test_kill(self, form_file, tmp_path, chi4, chi3):
        f = katz_eisenstein(4, chi4, chi3, 1, 7, 60)
        out = tmp_path / "killed.form"
        assert run_command(["kill", "--in", form_file("f", f), "--primes", "2,3", "--out", str(out)]) == 0
        g = read_form(out)
        assert g.level == 72
        assert g.a(2) == 0 and g.a(3) == 0 and g.a(5) == f.a(5)

    def test_decompose_theta_failure_exits_one(self, form_file, e4):
        assert run_command(["decompose-theta", "--in", form_file("e4", e4)]) == 1

    def test_oldspace(self, form_file, e4, capsys):
        assert run_command(["oldspace", "--in", form_file("e4", e4), "--level", "2", "--weight", "28"]) == 0
        assert "count=4\n" in capsys.readouterr().out

    def test_member(self, form_file, e4, capsys):
        from src.qseries import hasse_mult

        F = form_file("F", hasse_mult(e4, 4))
        f = form_file("f", e4)
        assert run_command(["member", "--in", F, "--in", f, "--mode", "weight"]) == 0
        assert "verdict=member\n" in capsys.readouterr().out
        assert run_command(["member", "--in", f, "--in", f, "--prec", "1"]) == 0
        assert "verdict=member up to precision 1" in capsys.readouterr().out

    def test_decompose(self, form_file, e4, capsys):
        from src.newform import weight_old_generators
        from src.qseries import degeneracy_Bd

        F1 = weight_old_generators(e4, 28).combination([1, 2])
        F = form_file("F", degeneracy_Bd(F1, 2, 2))
        assert run_command(["decompose", "--in", F, "--newform", form_file("f", e4)]) == 0
        stdout = capsys.readouterr().out
        assert "stage1=member\n" in stdout
        assert "gamma_d00001=[0]\n" in stdout


class TestCheckCommands:
    def test_compare_divergence_exits_one(self, form_file, e4, capsys):
        delta = corpus_get("delta", 7, 30)
        code = run_command(["compare", "--in", form_file("e4", e4), "--in", form_file("delta", delta)])
        assert code == 1
        assert "first divergence at l=2" in capsys.readouterr().out

    def test_compare_equal(self, form_file, e4):
        E4 = corpus_get("E4", 7, 50)
        assert run_command(["compare", "--in", form_file("e4", e4), "--in", form_file("E4", E4), "--bound", "40"]) == 0

    def test_check_prop24(self, form_file, e4):
        from src.qseries import hasse_mult, theta

        assert run_command(["check-prop24", "--in", form_file("a", e4), "--in", form_file("b", hasse_mult(e4, 1))]) == 0
        assert run_command(["check-prop24", "--in", form_file("a", e4), "--in", form_file("b", theta(e4))]) == 1

    def test_check_cor37(self, form_file, e4, F7):
        from src.newform import oldform_eigenform_at_l

        g = oldform_eigenform_at_l(e4, 2, F7(1))
        assert run_command(["check-cor37", "--in", form_file("g", g), "--newform", form_file("f", e4)]) == 0
        assert run_command(["check-cor37", "--in", form_file("g", g)]) == 2
