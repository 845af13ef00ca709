import pathlib

import pytest

import dpacanon as dc

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


@pytest.fixture
def fig1():
    return dc.load(str(DATA / "fig1.aut"))


def test_load_and_membership(fig1):
    assert fig1.states == 4
    assert len(fig1.transitions) == 12
    assert not dc.member(fig1, ":ca")
    assert dc.member(fig1, ":cabb")
    assert dc.run(fig1, ":ca").dominating_color == 5
    assert dc.run(fig1, dc.LassoWord([], [0, 0])).dominating_color == 1


def test_canonical_form(fig1):
    s = dc.canonicalize(fig1)
    assert dc.is_structured(s)
    assert dc.is_streamlined(s)
    assert sorted({t.color for t in s.transitions}) == [1, 2, 3, 4, 5]
    assert dc.to_native(s) == (DATA / "fig1_streamlined.aut").read_text()
    assert dc.language_equiv(fig1, s)


def test_natural_colors(fig1):
    assert dc.natural_color(fig1, ":ca") == 5
    assert dc.natural_color(fig1, ":cabb") == 4
    assert dc.natural_color(fig1, ":aa") == 1


def test_chain(fig1):
    chain = dc.extract_chain(dc.canonicalize(fig1))
    assert len(chain.levels) == 7
    assert [st.accepting for st in dc.chain_stats(chain)] == [12, 12, 11, 8, 6, 4, 0]
    top = chain.levels[5]
    assert top.gfg
    assert dc.resolve_run(top, ":ca")
    assert not dc.resolve_run(top, ":cabb")
    assert dc.member(top, ":ca")


def test_equivalence_witness(fig1):
    other = dc.random_dpa(3, 2, 3, seed=1)
    r = dc.language_equiv(fig1, other)
    assert not r.equivalent
    assert dc.member(fig1, r.witness) != dc.member(other, r.witness)


def test_formats_round_trip():
    a = dc.random_dpa(4, 3, 2, seed=5)
    assert dc.parse(dc.to_native(a)) == a
    b = dc.random_dpa(4, 3, 2, seed=5)
    b.alphabet = dc.valuation_alphabet(1)
    assert dc.parse(dc.to_hoa(b)) == b
    assert dc.to_dot(a).startswith("digraph")


def test_errors(fig1):
    with pytest.raises(dc.ParseError):
        dc.parse("{")
    with pytest.raises(dc.PreconditionError):
        dc.streamline(dc.ParityAutomaton(
            dc.Alphabet(["x"]), 2, 0,
            [dc.Transition(0, 0, 1, 0), dc.Transition(1, 0, 1, 0)]))
    with pytest.raises(ValueError):
        dc.member(fig1, "ca:")
    assert dc.validate(fig1) == []
