"""Tests of parsing, rendering, measures and necessity forms."""
import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apaltools.errors import FormulaSyntaxError
from apaltools.synth_data_generator.synth_formula_generator import gen_formula
from apaltools.syntax import necessity_forms as nf
from apaltools.syntax.formula import (
    Announce,
    Atom,
    Bottom,
    Box,
    Know,
    Neg,
    Or,
    node_count,
    replace_at,
    subformula_at,
    walk,
)
from apaltools.syntax.measures import (
    OrderingRow,
    box_depth,
    classify,
    induction_case,
    is_epistemic,
    less,
    ordering_rows,
    size,
    subformulas,
)
from apaltools.syntax.parser import parse
from apaltools.syntax.printer import render

p, q, r = Atom("p"), Atom("q"), Atom("r")


@pytest.mark.parametrize(
    "text,expected",
    [
        ("~(p | q)", Neg(Or(p, q))),
        ("[p] K a q", Announce(p, Know("a", q))),
        ("p -> q", Or(Neg(p), q)),
        ("true", Neg(Bottom())),
        ("M a p", Neg(Know("a", Neg(p)))),
        ("<p> q", Neg(Announce(p, Neg(q)))),
        ("dia p", Neg(Box(Neg(p)))),
        ("p & q", Neg(Or(Neg(p), Neg(q)))),
        ("p | q | r", Or(Or(p, q), r)),
        ("p -> q -> r", Or(Neg(p), Or(Neg(q), r))),
        ("~p | q & r", Or(Neg(p), Neg(Or(Neg(q), Neg(r))))),
        ("box [p] q", Box(Announce(p, q))),
    ],
)
def test_parse(text, expected):
    """Parse applies the declared precedence and expands abbreviations."""
    assert parse(text) == expected


def test_parse_multi_letter_names():
    """Atoms and agents may be longer than one character."""
    assert parse("K alice p_1") == Know("alice", Atom("p_1"))


@pytest.mark.parametrize("text,position", [("p |", 3), ("(p", 2), ("p # q", 2)])
def test_parse_error_position(text, position):
    """Syntax errors carry the offending offset."""
    with pytest.raises(FormulaSyntaxError) as excinfo:
        parse(text)
    assert excinfo.value.position == position
    assert excinfo.value.line == 1
    assert excinfo.value.column == position + 1


def test_parse_error_expected_tokens():
    """A premature end lists what could have followed."""
    with pytest.raises(FormulaSyntaxError) as excinfo:
        parse("p |")
    assert excinfo.value.expected
    assert "expected one of" in str(excinfo.value)


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        parse("K")


@pytest.mark.parametrize("name", ["", "true", "false", "box", "dia", "P", "1p", "p-q", "p q"])
def test_atom_rejects_names_the_parser_cannot_read_back(name):
    with pytest.raises(ValueError, match="Invalid atom name"):
        Atom(name)


@pytest.mark.parametrize("name", ["p", "p0", "truth", "boxes", "x_1"])
def test_atom_names_round_trip(name):
    assert parse(render(Atom(name))) == Atom(name)


@pytest.mark.parametrize(
    "formula,expected",
    [
        (Neg(p), "~p"),
        (Announce(p, Box(q)), "[p] box q"),
        (Know("a", Announce(q, r)), "K a [q] r"),
        (Or(Neg(p), Know("a", Or(Neg(p), q))), "p -> K a (p -> q)"),
        (Neg(Announce(p, Neg(q))), "<p> q"),
        (Or(Or(p, q), r), "p | q | r"),
        (Or(p, Or(q, r)), "p | (q | r)"),
        (Neg(Or(p, q)), "~(p | q)"),
    ],
)
def test_render(formula, expected):
    """Render prints minimal parentheses and re-sugars abbreviations."""
    assert render(formula) == expected


@settings(max_examples=300)
@given(st.integers(min_value=0, max_value=2**31 - 1), st.sampled_from(["epistemic", "pal", "apal"]))
def test_parse_render_round_trip(seed, fragment):
    """Parsing a rendering gives back the formula."""
    f = gen_formula(seed=seed, max_size=20, fragment=fragment)
    assert parse(render(f)) == f


@pytest.mark.slow
def test_parse_render_round_trip_full_scale():
    for seed in range(10_000):
        f = gen_formula(seed=seed, max_size=25)
        assert parse(render(f)) == f


def test_size():
    assert size(p) == 1
    assert size(Announce(p, q)) == 4
    assert size(Neg(Announce(p, q))) == 5
    assert size(Announce(p, Neg(q))) == 7


def test_box_depth():
    assert box_depth(p) == 0
    assert box_depth(Box(Box(p))) == 2
    assert box_depth(parse("box p | [box box q] r")) == 2
    assert box_depth(parse("K a [p] (q | M b r)")) == 0


def test_less():
    assert less(Announce(p, q), Box(q), "size_dbox")
    assert less(Know("a", Announce(p, q)), Announce(p, Know("a", q)), "size")
    assert less(p, Or(p, q), "strict_subformula")
    assert not less(Or(p, q), Or(p, q), "strict_subformula")
    assert less(Box(p), Box(Box(p)), "dbox")


@pytest.mark.parametrize("order", ["size", "dbox", "size_dbox", "strict_subformula"])
def test_less_is_irreflexive(order):
    assert not less(p, p, order)


def test_less_unknown_order():
    with pytest.raises(ValueError, match="Unknown order"):
        less(p, q, "depth")


@given(st.integers(min_value=0, max_value=2**31 - 1))
def test_size_dbox_order_laws(seed):
    """size_dbox is irreflexive and transitive."""
    _check_order_laws(seed)


@pytest.mark.slow
def test_size_dbox_order_laws_full_scale():
    for seed in range(10_000):
        _check_order_laws(3 * seed)


def _check_order_laws(seed: int):
    f, g, h = (gen_formula(seed=seed + i, max_size=12) for i in range(3))
    assert not less(f, f)
    if less(f, g) and less(g, h):
        assert less(f, h)


@given(st.integers(min_value=0, max_value=2**31 - 1))
def test_size_bounds_subformulas(seed):
    """Proper subformulas are strictly smaller."""
    f = gen_formula(seed=seed, max_size=15)
    assert size(f) >= 1
    assert all(size(g) < size(f) for g in subformulas(f))


def test_subformulas():
    assert subformulas(p) == frozenset()
    assert subformulas(Or(p, Neg(p))) == {p, Neg(p)}
    assert subformulas(Or(p, Neg(p)), include_self=True) == {p, Neg(p), Or(p, Neg(p))}


def test_subformulas_collapse_duplicates():
    f = parse("(p | q) & (p | q)")
    assert len(subformulas(f)) < node_count(f)


def test_classify():
    flags = classify(Know("a", p))
    assert (flags.box_free, flags.announcement_free, flags.epistemic) == (True, True, True)
    flags = classify(Announce(p, q))
    assert (flags.box_free, flags.announcement_free, flags.epistemic) == (True, False, False)
    flags = classify(Box(p))
    assert (flags.box_free, flags.announcement_free, flags.epistemic) == (False, True, False)


def test_walk_and_paths():
    f = parse("[p] K a q")
    paths = [path for path, _ in walk(f)]
    assert paths == [(), (0,), (1,), (1, 0)]
    assert subformula_at(f, (1, 0)) == q
    assert replace_at(f, (1, 0), r) == parse("[p] K a r")


@given(st.integers(min_value=0, max_value=2**31 - 1))
def test_size_inequalities(seed):
    """The three strict size inequalities, with equal box depth on both sides."""
    _check_size_inequalities(seed)


@pytest.mark.slow
def test_size_inequalities_full_scale():
    started = time.perf_counter()
    for seed in range(10_000):
        _check_size_inequalities(3 * seed)
    assert time.perf_counter() - started < 10


def _check_size_inequalities(seed: int):
    phi, psi, chi = (gen_formula(seed=seed + i, max_size=10) for i in range(3))
    pairs = [
        (Neg(Announce(phi, psi)), Announce(phi, Neg(psi))),
        (Know("a", Announce(phi, psi)), Announce(phi, Know("a", psi))),
        (Announce(Neg(Announce(phi, Neg(psi))), chi), Announce(phi, Announce(psi, chi))),
    ]
    for smaller, larger in pairs:
        assert size(smaller) < size(larger)
        assert box_depth(smaller) == box_depth(larger)


def _ordering_row_instance(row: OrderingRow, seed: int) -> tuple:
    """(phi, psi, chi) for a row, phi epistemic where the row requires it."""
    psi = gen_formula(seed=3 * seed, max_size=10)
    chi = gen_formula(seed=3 * seed + 1, max_size=10)
    fragment = "epistemic" if row.requires_epistemic else "apal"
    phi = gen_formula(seed=3 * seed + 2, max_size=10, fragment=fragment)
    return phi, psi, chi


def test_ordering_rows():
    """Every ordering row holds when its side conditions do."""
    rows = ordering_rows()
    assert len(rows) == 15
    checked = 0
    for seed in range(300):
        for row in rows:
            phi, psi, chi = _ordering_row_instance(row, seed)
            if not row.side_condition(phi, psi, chi):
                continue
            smaller, larger = row.build(phi, psi, chi, "a")
            assert less(smaller, larger), row.name
            checked += 1
    assert checked > 300 * 14


@pytest.mark.slow
@pytest.mark.parametrize("row", ordering_rows(), ids=lambda row: row.name)
def test_ordering_rows_full_scale(row):
    checked = 0
    for seed in range(20_000):
        phi, psi, chi = _ordering_row_instance(row, seed)
        if not row.side_condition(phi, psi, chi):
            continue
        smaller, larger = row.build(phi, psi, chi, "a")
        assert less(smaller, larger), (row.name, seed)
        checked += 1
        if checked == 1_000:
            break
    assert checked == 1_000


def test_ordering_box_row_needs_shallow_announcement():
    """With a deeper announced formula the box row does not descend."""
    row = next(row for row in ordering_rows() if row.name == "[chi] [phi] psi < [chi] box psi")
    phi, psi, chi = q, p, parse("box box p")
    assert not row.side_condition(phi, psi, chi)
    smaller, larger = row.build(phi, psi, chi, "a")
    assert box_depth(smaller) == box_depth(larger) == 2
    assert not less(smaller, larger)


@pytest.mark.parametrize(
    "text,name,n_premises",
    [
        ("p", "atom", 0),
        ("false", "bottom", 0),
        ("~p", "negation", 1),
        ("p | q", "disjunction", 2),
        ("K a p", "knowledge", 1),
        ("[q] p", "announce_atom", 1),
        ("[q] false", "announce_bottom", 1),
        ("[q] ~p", "announce_negation", 2),
        ("[q] (p | r)", "announce_disjunction", 2),
        ("[q] K a p", "announce_knowledge", 2),
        ("[q] [p] r", "announce_announce", 1),
        ("[q] box p", "announce_box", 2),
        ("box p", "box", 2),
    ],
)
def test_induction_case(text, name, n_premises):
    """Each case consults formulas strictly below it."""
    f = parse(text)
    case = induction_case(f, announcements=[parse("r"), parse("K b q")])
    assert case.name == name
    assert len(case.premises) == n_premises
    assert all(less(premise, f) for premise in case.premises)


def test_induction_case_descends_on_random_formulas():
    for seed in range(500):
        f = gen_formula(seed=seed, max_size=14)
        if isinstance(f, Announce) and isinstance(f.continuation, Box):
            if box_depth(f.announced) > box_depth(f.continuation.child):
                continue
        announcements = [gen_formula(seed=seed + 1, max_size=6, fragment="epistemic")]
        case = induction_case(f, announcements)
        assert all(less(premise, f) for premise in case.premises), render(f)


def test_fill():
    assert nf.fill(nf.Hole(), p) == p
    assert nf.fill(nf.Know("a", nf.Hole()), Announce(q, r)) == parse("K a [q] r")
    context = nf.Announce(p, nf.Implies(q, nf.Hole()))
    assert nf.fill(context, Box(r)) == parse("[p] (q -> box r)")
    assert render(nf.fill(context, Box(r))) == "[p] (q -> box r)"


def test_fill_is_injective():
    context = nf.Know("a", nf.Announce(p, nf.Implies(q, nf.Hole())))
    formulas = [gen_formula(seed=seed, max_size=8) for seed in range(50)]
    for f in formulas:
        for g in formulas:
            if nf.fill(context, f) == nf.fill(context, g):
                assert f == g


def test_is_epistemic_generated():
    for seed in range(200):
        assert is_epistemic(gen_formula(seed=seed, max_size=12, fragment="epistemic"))
