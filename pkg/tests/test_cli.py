"""Tests of the apal command line interface."""
import pytest
from click.testing import CliRunner

from apaltools.cli import cli
from apaltools.loaders.corpus.load_corpus import CORPUS_DIR

M1 = str(CORPUS_DIR / "models" / "m1.json")
M2 = str(CORPUS_DIR / "models" / "m2.json")
DERIVATIONS = CORPUS_DIR / "derivations"


@pytest.fixture
def runner():
    return CliRunner()


def test_parse(runner):
    result = runner.invoke(cli, ["parse", "[p] (q & r)"])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "[p] (q & r)",
        "box_free=true announcement_free=false epistemic=false",
    ]


def test_size(runner):
    result = runner.invoke(cli, ["size", "[p] q"])
    assert result.exit_code == 0
    assert result.output.strip() == "Size=4 d_box=0"
    result = runner.invoke(cli, ["size", "box [box p] q"])
    assert result.output.strip() == "Size=6 d_box=2"


@pytest.mark.parametrize(
    "world,text,output,exit_code",
    [
        ("w", "dia K a p", "true", 0),
        ("v", "dia K a p", "false", 1),
        ("v", "[p] false", "true", 0),
    ],
)
def test_check(runner, world, text, output, exit_code):
    result = runner.invoke(cli, ["check", M1, world, text])
    assert result.exit_code == exit_code
    assert result.output.strip() == output


def test_check_unknown_world(runner):
    result = runner.invoke(cli, ["check", M1, "u", "p"])
    assert result.exit_code == 2
    assert "UnknownWorldError" in result.output


def test_truthset(runner):
    result = runner.invoke(cli, ["truthset", M2, "M a ~p"])
    assert result.exit_code == 0
    assert result.output.strip() == "w1 w2 v"
    result = runner.invoke(cli, ["truthset", M1, "K a p"])
    assert result.output.strip() == ""


def test_bisim(runner):
    result = runner.invoke(cli, ["bisim", M2])
    assert result.exit_code == 0
    assert result.output.splitlines() == ["w1 w2", "v"]


def test_reduce(runner):
    result = runner.invoke(cli, ["reduce", "[p] K a q"])
    assert result.exit_code == 0
    assert result.output.splitlines()[-1] == "p -> K a (p -> q)"
    assert len(result.output.splitlines()) == 3


def test_reduce_rejects_box(runner):
    result = runner.invoke(cli, ["reduce", "[p] box q"])
    assert result.exit_code == 2
    assert "NotBoxFreeError" in result.output


def test_formula_from_file(runner, tmp_path):
    path = tmp_path / "formula.txt"
    path.write_text("<p> K a p\n", encoding="utf-8")
    result = runner.invoke(cli, ["truthset", M1, "--file", str(path)])
    assert result.exit_code == 0
    assert result.output.strip() == "w"


def test_formula_inline_and_file(runner, tmp_path):
    path = tmp_path / "formula.txt"
    path.write_text("p", encoding="utf-8")
    result = runner.invoke(cli, ["size", "p", "--file", str(path)])
    assert result.exit_code == 2
    result = runner.invoke(cli, ["size"])
    assert result.exit_code == 2


def test_prove_accept(runner):
    result = runner.invoke(cli, ["prove", str(DERIVATIONS / "box_tautology.prf")])
    assert result.exit_code == 0
    assert result.output.strip() == "accept (3 steps)"


def test_prove_reject(runner):
    result = runner.invoke(cli, ["prove", str(DERIVATIONS / "rejected" / "no_implication_premise.prf")])
    assert result.exit_code == 1
    assert result.output.strip() == (
        "reject at step 2: no implication premise: step 1 is not an implication from step 1"
    )


def test_prove_malformed(runner, tmp_path):
    path = tmp_path / "bad.prf"
    path.write_text("1. p -> p ; A0\n3. p ; A0\n", encoding="utf-8")
    result = runner.invoke(cli, ["prove", str(path)])
    assert result.exit_code == 2
    assert "line 2" in result.output


@pytest.mark.parametrize(
    "args",
    [
        ["parse", "p |"],
        ["check", "missing.json", "w", "p"],
        ["bisim", "missing.json"],
        ["prove", "missing.prf"],
    ],
)
def test_input_errors_exit_2(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 2


def test_randtest(runner):
    result = runner.invoke(cli, ["randtest", "--seed", "1", "--cases", "3", "--max-worlds", "3", "--no-progress"])
    assert result.exit_code == 0
    assert "passed (seed 1)" in result.output
    assert "box_oracle" in result.output


def test_randtest_rejects_zero_cases(runner):
    result = runner.invoke(cli, ["randtest", "--cases", "0"])
    assert result.exit_code == 2


def test_randtest_rejects_reserved_atom_names(runner):
    result = runner.invoke(cli, ["randtest", "--cases", "1", "--atoms", "p,true"])
    assert result.exit_code == 2
    assert "Invalid atom name" in result.output
