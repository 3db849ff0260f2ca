"""Derivations in the finitary fragment of the proof system and their checker.

A derivation file has one step per line::

    1. p -> p ; A0
    2. box (p -> p) ; R3 1

Justifications are an axiom name (A0 to A13) or a rule with the numbers of
earlier steps: ``R0 <premise> <implication>``, ``R1 <premise> <agent>``,
``R2 <premise> [<announced>]`` and ``R3 <premise>``. Blank lines and lines
starting with # are ignored. Formulas are compared after abbreviations are
expanded, so steps may use ->, &, <-> and the diamonds freely.
"""
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Union

from wasabi import msg

from apaltools.axioms.schemas import AXIOM_NAMES, is_instance
from apaltools.errors import (
    DerivationFormatError,
    FormulaSyntaxError,
    NonEpistemicError,
    TooManyLettersError,
)
from apaltools.syntax.formula import Announce, Box, Formula, Know, Neg, Or
from apaltools.syntax.measures import is_epistemic
from apaltools.syntax.necessity_forms import NecessityForm, fill
from apaltools.syntax.parser import parse
from apaltools.syntax.printer import render


@dataclass(frozen=True)
class Axiom:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class ModusPonens:
    """R0: from phi and phi -> psi infer psi."""

    premise: int
    implication: int

    def __str__(self) -> str:
        return f"R0 {self.premise} {self.implication}"


@dataclass(frozen=True)
class KnowledgeNecessitation:
    """R1: from phi infer K a phi."""

    premise: int
    agent: str

    def __str__(self) -> str:
        return f"R1 {self.premise} {self.agent}"


@dataclass(frozen=True)
class AnnouncementNecessitation:
    """R2: from phi infer [psi] phi."""

    premise: int
    announced: Formula

    def __str__(self) -> str:
        return f"R2 {self.premise} [{render(self.announced)}]"


@dataclass(frozen=True)
class BoxNecessitation:
    """R3: from phi infer box phi."""

    premise: int

    def __str__(self) -> str:
        return f"R3 {self.premise}"


Justification = Union[
    Axiom,
    ModusPonens,
    KnowledgeNecessitation,
    AnnouncementNecessitation,
    BoxNecessitation,
]


@dataclass(frozen=True)
class DerivationStep:
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class Derivation:
    steps: tuple

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class Verdict:
    """Outcome of check_derivation. step is 1-based and None on acceptance."""

    accepted: bool
    step: Optional[int] = None
    reason: str = ""

    def __str__(self) -> str:
        if self.accepted:
            return "accepted"
        return f"rejected at step {self.step}: {self.reason}"


@dataclass(frozen=True)
class R4Sample:
    premises: tuple
    conclusion: Formula


STEP_LINE = re.compile(r"^\s*(\d+)\.\s*(.*)$")


def _parse_formula(text: str, line_number: int) -> Formula:
    try:
        return parse(text)
    except FormulaSyntaxError as e:
        raise DerivationFormatError(str(e), line_number) from e


def _parse_justification(text: str, line_number: int) -> Justification:
    head, _, tail = text.strip().partition(" ")
    tail = tail.strip()
    if head in AXIOM_NAMES and not tail:
        return Axiom(head)

    rule_args = {"R0": 2, "R1": 2, "R2": 2, "R3": 1}
    if head not in rule_args:
        raise DerivationFormatError(f"unknown justification: {text.strip()!r}", line_number)
    first, _, rest = tail.partition(" ")
    rest = rest.strip()
    if not first.isdigit() or bool(rest) != (rule_args[head] == 2):
        raise DerivationFormatError(f"malformed {head} justification: {text.strip()!r}", line_number)

    premise = int(first)
    if head == "R0":
        if not rest.isdigit():
            raise DerivationFormatError(f"R0 needs two step numbers, got {rest!r}", line_number)
        return ModusPonens(premise, int(rest))
    if head == "R1":
        return KnowledgeNecessitation(premise, rest)
    if head == "R2":
        if not (rest.startswith("[") and rest.endswith("]")):
            raise DerivationFormatError(f"R2 needs a bracketed formula, got {rest!r}", line_number)
        return AnnouncementNecessitation(premise, _parse_formula(rest[1:-1], line_number))
    return BoxNecessitation(premise)


def parse_derivation(text: str) -> Derivation:
    """Read a derivation from its text form.

    Args:
        text (str): One "<n>. <formula> ; <justification>" line per step.

    Raises:
        DerivationFormatError: If a line is malformed, a formula does not
            parse or the step numbers do not run 1, 2, 3, ...

    Returns:
        Derivation: The steps in file order.
    """
    steps = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        found = STEP_LINE.match(line)
        if found is None or ";" not in found.group(2):
            raise DerivationFormatError(
                "expected '<n>. <formula> ; <justification>'",
                line_number,
            )
        number = int(found.group(1))
        if number != len(steps) + 1:
            raise DerivationFormatError(
                f"step numbered {number}, expected {len(steps) + 1}",
                line_number,
            )
        formula_text, _, justification_text = found.group(2).rpartition(";")
        steps.append(
            DerivationStep(
                formula=_parse_formula(formula_text, line_number),
                justification=_parse_justification(justification_text, line_number),
            ),
        )
    return Derivation(steps=tuple(steps))


def load_derivation(path: Union[str, Path]) -> Derivation:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"derivation file not found: {path}")
    return parse_derivation(path.read_text(encoding="utf-8"))


def format_derivation(d: Derivation) -> str:
    return "\n".join(
        f"{i}. {render(step.formula)} ; {step.justification}"
        for i, step in enumerate(d.steps, start=1)
    )


def _premises(justification: Justification) -> tuple:
    if isinstance(justification, Axiom):
        return ()
    if isinstance(justification, ModusPonens):
        return (justification.premise, justification.implication)
    return (justification.premise,)


def _check_step(d: Derivation, number: int) -> Optional[str]:
    """Reason why step number (1-based) is not justified, or None."""
    step = d.steps[number - 1]
    justification = step.justification
    for reference in _premises(justification):
        if not 1 <= reference < number:
            return f"step {reference} does not precede step {number}"

    def formula_of(reference: int) -> Formula:
        return d.steps[reference - 1].formula

    if isinstance(justification, Axiom):
        try:
            if is_instance(step.formula, justification.name):
                return None
        except TooManyLettersError as e:
            return str(e)
        return f"not an instance of {justification.name}"

    if isinstance(justification, ModusPonens):
        implication = formula_of(justification.implication)
        if not (
            isinstance(implication, Or)
            and isinstance(implication.left, Neg)
            and implication.left.child == formula_of(justification.premise)
        ):
            return (
                f"no implication premise: step {justification.implication} is not "
                f"an implication from step {justification.premise}"
            )
        if implication.right != step.formula:
            return f"the consequent of step {justification.implication} differs from the formula"
        return None

    premise = formula_of(justification.premise)
    if isinstance(justification, KnowledgeNecessitation):
        expected = Know(justification.agent, premise)
    elif isinstance(justification, AnnouncementNecessitation):
        expected = Announce(justification.announced, premise)
    else:
        expected = Box(premise)
    if step.formula != expected:
        return f"expected {render(expected)}"
    return None


def check_derivation(d: Derivation) -> Verdict:
    """Verify every step of a derivation.

    Args:
        d (Derivation): The derivation.

    Returns:
        Verdict: Acceptance, or the first unjustified step with a reason.
    """
    for number in range(1, len(d.steps) + 1):
        reason = _check_step(d, number)
        if reason is not None:
            return Verdict(accepted=False, step=number, reason=reason)
    return Verdict(accepted=True)


def r4_premises(nf: NecessityForm, f: Formula, announcements: Iterable[Formula]) -> R4Sample:
    """Instantiate a finite sample of the premises of R4.

    Args:
        nf (NecessityForm): The context xi.
        f (Formula): The formula under the box in the conclusion.
        announcements (Iterable[Formula]): Epistemic formulas psi.

    Raises:
        NonEpistemicError: If an announcement is not epistemic.

    Returns:
        R4Sample: xi([psi] f) for each psi, and the conclusion xi(box f).
    """
    announcements = list(announcements)
    for psi in announcements:
        if not is_epistemic(psi):
            raise NonEpistemicError(f"R4 announcements must be epistemic: {render(psi)}")
    if not announcements:
        msg.warn("Empty R4 sample; the conclusion is not supported by any premise.")
    return R4Sample(
        premises=tuple(fill(nf, Announce(psi, f)) for psi in announcements),
        conclusion=fill(nf, Box(f)),
    )
