"""Seeded randomized suites cross-checking the measures, the checker, the
reduction and the axioms against each other.

Each suite draws from its own generator seeded with (seed, suite index),
so a report is a deterministic function of its arguments.
"""
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
from tqdm import tqdm

from apaltools.axioms.schemas import SCHEMA_ORDER, instantiate_axiom
from apaltools.checker.box_oracle import box_oracle
from apaltools.checker.truth_sets import TruthSetCache, satisfies, truth_set, valid_on
from apaltools.rewrite.reduction import reduce_to_epistemic, weight
from apaltools.synth_data_generator.synth_formula_generator import gen_formula
from apaltools.synth_data_generator.synth_model_generator import gen_model
from apaltools.syntax.formula import Announce, Box, Formula, Know, Neg, implies
from apaltools.syntax.measures import box_depth, ordering_rows, is_epistemic, less, size
from apaltools.syntax.printer import render
from apaltools.utils import (
    DEFAULT_AGENTS,
    DEFAULT_ATOMS,
    DEFAULT_CASES,
    DEFAULT_MAX_WORLDS,
    DEFAULT_SEED,
)

SUITES = ("size_inequalities", "ordering_table", "axiom_validity", "rule_preservation", "reduction", "box_oracle")
FORMULA_SIZE = 8
AXIOM_ARGUMENT_SIZE = 4
BOX_ORACLE_WORLDS = 4


@dataclass
class SuiteResult:
    checked: int = 0
    failures: int = 0
    first_failure: Optional[str] = None

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = describe()


@dataclass
class RandtestReport:
    seed: int
    suites: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(result.failures == 0 for result in self.suites.values())

    def rows(self) -> list[tuple]:
        return [
            (name, result.checked, result.failures, result.first_failure or "")
            for name, result in self.suites.items()
        ]


class _Draw:
    """Formula and model draws for one case."""

    def __init__(self, rng: np.random.Generator, max_worlds: int, agents: tuple, atoms: tuple):
        self.rng = rng
        self.max_worlds = max_worlds
        self.agents = agents
        self.atoms = atoms

    def seed(self) -> int:
        return int(self.rng.integers(2**31))

    def agent(self) -> str:
        return self.agents[self.rng.integers(len(self.agents))]

    def formula(self, fragment: str = "apal", max_size: int = FORMULA_SIZE) -> Formula:
        return gen_formula(
            seed=self.seed(),
            max_size=max_size,
            fragment=fragment,
            atoms=self.atoms,
            agents=self.agents,
        )

    def model(self, max_worlds: Optional[int] = None):
        return gen_model(
            seed=self.seed(),
            max_worlds=max_worlds or self.max_worlds,
            agents=self.agents,
            atoms=self.atoms,
        )

    def axiom_instance(self, name: Optional[str] = None) -> Formula:
        name = name or SCHEMA_ORDER[self.rng.integers(len(SCHEMA_ORDER))]
        return instantiate_axiom(
            name,
            seed=self.seed(),
            max_size=AXIOM_ARGUMENT_SIZE,
            atoms=self.atoms,
            agents=self.agents,
        )


def _size_inequalities(draw: _Draw, result: SuiteResult) -> None:
    phi, psi, chi = draw.formula(), draw.formula(), draw.formula()
    a = draw.agent()
    pairs = [
        (Neg(Announce(phi, psi)), Announce(phi, Neg(psi))),
        (Know(a, Announce(phi, psi)), Announce(phi, Know(a, psi))),
        (Announce(Neg(Announce(phi, Neg(psi))), chi), Announce(phi, Announce(psi, chi))),
    ]
    for smaller, larger in pairs:
        result.record(
            size(smaller) < size(larger) and box_depth(smaller) == box_depth(larger),
            lambda: f"{render(smaller)} vs {render(larger)}",
        )


def _ordering_table(draw: _Draw, result: SuiteResult) -> None:
    a = draw.agent()
    for row in ordering_rows():
        phi = draw.formula("epistemic") if row.requires_epistemic else draw.formula()
        psi, chi = draw.formula(), draw.formula()
        if not row.side_condition(phi, psi, chi):
            continue
        smaller, larger = row.build(phi, psi, chi, a)
        result.record(
            less(smaller, larger, "size_dbox"),
            lambda: f"{row.name}: {render(smaller)} vs {render(larger)}",
        )


def _axiom_validity(draw: _Draw, result: SuiteResult) -> None:
    m = draw.model()
    for name in SCHEMA_ORDER:
        instance = draw.axiom_instance(name)
        result.record(valid_on(m, instance), lambda: f"{name}: {render(instance)}")


def _rule_preservation(draw: _Draw, result: SuiteResult) -> None:
    m = draw.model()
    cache = TruthSetCache()
    f, g = draw.formula(), draw.formula()

    # R0 and R1 preserve validity on a single model.
    if valid_on(m, f, cache) and valid_on(m, implies(f, g), cache):
        result.record(valid_on(m, g, cache), lambda: f"R0: {render(f)}, {render(g)}")
    if valid_on(m, f, cache):
        a = draw.agent()
        result.record(valid_on(m, Know(a, f), cache), lambda: f"R1: {render(f)}")

    # R2 and R3 only preserve validity on every restriction, so their
    # premise is a valid axiom instance.
    premise = draw.axiom_instance()
    announced = draw.formula()
    result.record(
        valid_on(m, Announce(announced, premise), cache),
        lambda: f"R2: {render(announced)}, {render(premise)}",
    )
    result.record(valid_on(m, Box(premise), cache), lambda: f"R3: {render(premise)}")


def _reduction(draw: _Draw, result: SuiteResult) -> None:
    f = draw.formula("pal")
    m = draw.model()
    trace = reduce_to_epistemic(f)
    weights = [weight(f)] + [weight(step.after) for step in trace.steps]
    result.record(
        is_epistemic(trace.result)
        and all(later < earlier for earlier, later in zip(weights, weights[1:]))
        and truth_set(m, f) == truth_set(m, trace.result),
        lambda: f"{render(f)} ==> {render(trace.result)}",
    )


def _box_oracle(draw: _Draw, result: SuiteResult) -> None:
    m = draw.model(min(draw.max_worlds, BOX_ORACLE_WORLDS))
    inner = draw.formula()
    if box_depth(inner) > 1:
        inner = draw.formula("pal")
    cache = TruthSetCache()
    for w in m.worlds:
        result.record(
            satisfies(m, w, Box(inner), cache) == box_oracle(m, w, inner),
            lambda: f"box {render(inner)} at {w} of {m.fingerprint}",
        )


SUITE_RUNNERS = {
    "size_inequalities": _size_inequalities,
    "ordering_table": _ordering_table,
    "axiom_validity": _axiom_validity,
    "rule_preservation": _rule_preservation,
    "reduction": _reduction,
    "box_oracle": _box_oracle,
}


def run_randtest(
    seed: int = DEFAULT_SEED,
    cases: int = DEFAULT_CASES,
    max_worlds: int = DEFAULT_MAX_WORLDS,
    agents: tuple = DEFAULT_AGENTS,
    atoms: tuple = DEFAULT_ATOMS,
    suites: tuple = SUITES,
    progress: bool = True,
) -> RandtestReport:
    """Run the randomized suites.

    Args:
        seed (int): Master seed. Defaults to 0.
        cases (int): Cases per suite. Defaults to 1000.
        max_worlds (int): Upper bound on generated model sizes. Defaults to 6.
        agents (tuple): Agents of generated formulas and models.
        atoms (tuple): Atoms of generated formulas and models.
        suites (tuple): Names of the suites to run. Defaults to all.
        progress (bool): Show a progress bar per suite. Defaults to True.

    Raises:
        ValueError: If a suite name is unknown.

    Returns:
        RandtestReport: Checks and failures per suite.
    """
    unknown = set(suites) - set(SUITE_RUNNERS)
    if unknown:
        raise ValueError(f"Unknown suites: {sorted(unknown)}. Choose from {SUITES}.")

    report = RandtestReport(seed=seed)
    for name in suites:
        # Each suite gets its own stream so selecting suites does not shift the others.
        rng = np.random.default_rng([seed, SUITES.index(name)])
        draw = _Draw(rng, max_worlds=max_worlds, agents=tuple(agents), atoms=tuple(atoms))
        result = SuiteResult()
        for _ in tqdm(range(cases), desc=name, disable=not progress):
            SUITE_RUNNERS[name](draw, result)
        report.suites[name] = result
    return report
