"""Tests of the reduction of announcements to epistemic formulas."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apaltools.checker.truth_sets import equivalent_on, truth_set
from apaltools.errors import NotBoxFreeError
from apaltools.rewrite.reduction import (
    RULES,
    contract,
    format_trace,
    reduce_step,
    reduce_to_epistemic,
    weight,
)
from apaltools.synth_data_generator.synth_formula_generator import gen_formula
from apaltools.synth_data_generator.synth_model_generator import gen_model
from apaltools.syntax.formula import Announce, Know, Neg, Or, subformula_at
from apaltools.syntax.measures import is_epistemic, less
from apaltools.syntax.parser import parse
from apaltools.syntax.printer import render


def test_weight():
    assert weight(parse("p")) == 1
    assert weight(parse("[p] q")) == 5
    assert weight(parse("[p] ~q")) == 10
    assert weight(parse("p -> ~[p] q")) == 9


@pytest.mark.parametrize(
    "text,rule,after",
    [
        ("[p] q", "A7", "p -> q"),
        ("[p] false", "A8", "~p"),
        ("[p] ~q", "A9", "p -> ~[p] q"),
        ("[p] (q | r)", "A10", "[p] q | [p] r"),
        ("[p] K a q", "A11", "p -> K a [p] q"),
        ("[p] [q] r", "A12", "[<p> q] r"),
    ],
)
def test_reduce_step(text, rule, after):
    step = reduce_step(parse(text))
    assert step.rule == rule
    assert step.position == ()
    assert step.after == parse(after)


def test_reduce_step_a12_expands_diamond():
    assert reduce_step(parse("[p] [q] r")).after == parse("[~[p] ~q] r")


def test_reduce_step_on_epistemic_formula():
    assert reduce_step(parse("K a p")) is None


def test_reduce_step_reduces_announced_formula_first():
    step = reduce_step(parse("[[p] q] r"))
    assert step.rule == "A7"
    assert step.position == (0,)
    assert step.after == parse("[p -> q] r")


def test_reduce_rejects_box():
    with pytest.raises(NotBoxFreeError):
        reduce_step(parse("[p] box q"))
    with pytest.raises(NotBoxFreeError):
        reduce_to_epistemic(parse("box p"))


def test_reduce_to_epistemic_knowledge(m1):
    f = parse("[p] K a q")
    trace = reduce_to_epistemic(f)
    assert [step.rule for step in trace.steps] == ["A11", "A7"]
    assert render(trace.result) == "p -> K a (p -> q)"
    assert equivalent_on(m1, f, trace.result)


def test_reduce_to_epistemic_noop():
    trace = reduce_to_epistemic(parse("p | q"))
    assert trace.steps == ()
    assert trace.result == parse("p | q")


def test_reduce_to_epistemic_nested(m1, m2):
    f = parse("[p] [q] r")
    trace = reduce_to_epistemic(f)
    assert trace.steps[0].rule == "A12"
    assert is_epistemic(trace.result)
    assert equivalent_on(m1, f, trace.result)
    assert equivalent_on(m2, f, trace.result)


def test_format_trace():
    text = format_trace(reduce_to_epistemic(parse("[p] K a q")))
    assert text.splitlines() == [
        "A11 @ root: [p] K a q ==> p -> K a [p] q",
        "A7 @ 1.0: p -> K a [p] q ==> p -> K a (p -> q)",
        "p -> K a (p -> q)",
    ]


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=2**31 - 1))
def test_reduction_is_sound_and_terminates(seed):
    f = gen_formula(seed=seed, max_size=12, fragment="pal")
    trace = reduce_to_epistemic(f)
    assert is_epistemic(trace.result)
    assert len(trace.steps) <= weight(f)

    current = f
    for step in trace.steps:
        assert step.before == current
        assert step.rule in RULES
        assert weight(step.after) < weight(step.before)
        current = step.after
    assert current == trace.result

    for model_seed in range(5):
        m = gen_model(seed=seed + model_seed, max_worlds=6)
        assert truth_set(m, f) == truth_set(m, trace.result)


@pytest.mark.slow
def test_reduction_soundness_full_scale():
    models = [gen_model(seed=seed, max_worlds=6) for seed in range(20)]
    for seed in range(1_000):
        f = gen_formula(seed=seed, max_size=16, fragment="pal")
        result = reduce_to_epistemic(f).result
        for m in models:
            assert truth_set(m, f) == truth_set(m, result)


@given(st.integers(min_value=0, max_value=2**31 - 1))
def test_every_rule_lowers_weight(seed):
    phi = gen_formula(seed=seed, max_size=8, fragment="pal")
    psi = gen_formula(seed=seed + 1, max_size=6, fragment="pal")
    chi = gen_formula(seed=seed + 2, max_size=6, fragment="pal")
    redexes = [
        Announce(phi, parse("p")),
        Announce(phi, parse("false")),
        Announce(phi, Neg(psi)),
        Announce(phi, Or(psi, chi)),
        Announce(phi, Know("a", psi)),
        Announce(phi, Announce(psi, chi)),
    ]
    for redex in redexes:
        _, contractum = contract(redex)
        assert weight(contractum) < weight(redex)


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=2**31 - 1))
def test_size_facts_behind_the_rules(seed):
    """A9, A11 and A12 steps consult formulas of smaller size than the redex."""
    f = gen_formula(seed=seed, max_size=14, fragment="pal")
    for step in reduce_to_epistemic(f).steps:
        redex = subformula_at(step.before, step.position)
        phi, rest = redex.announced, redex.continuation
        if step.rule == "A9":
            assert less(Neg(Announce(phi, rest.child)), redex, "size")
        if step.rule == "A11":
            assert less(Know(rest.agent, Announce(phi, rest.child)), redex, "size")
        if step.rule == "A12":
            smaller = Announce(Neg(Announce(phi, Neg(rest.announced))), rest.continuation)
            assert less(smaller, redex, "size")
