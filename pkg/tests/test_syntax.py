import pytest

import gen
from omegamt import ere, rltl
from omegamt.algebra import ANCHOR, IntAlgebra, with_anchor
from omegamt.errors import ParseError
from omegamt.syntax import (format_formula, format_regex, format_word,
                            parse_formula, parse_predicate, parse_regex,
                            parse_word)
from omegamt.words import UPWord

PQ = gen.PQ
Z = IntAlgebra()


def test_formula_round_trip_seeded():
    rng = gen.rng_for(501)
    for _ in range(500):
        f = gen.random_formula(rng, 4, PQ, positive=False)
        assert parse_formula(format_formula(f), PQ) is f


def test_regex_round_trip_seeded():
    rng = gen.rng_for(502)
    for _ in range(500):
        r = gen.random_regex(rng, 4, PQ, fusion=True)
        assert parse_regex(format_regex(r), PQ) is r


def test_precedence():
    assert parse_formula("p U q | p", PQ) is rltl.until(
        parse_formula("p", PQ), parse_formula("q | p", PQ))
    assert parse_formula("p -> q & p", PQ) is rltl.implies(
        parse_formula("p", PQ), parse_formula("q & p", PQ))
    assert parse_formula("X p & q", PQ) is rltl.conj(
        rltl.next_(parse_formula("p", PQ)), parse_formula("q", PQ))
    assert parse_formula("p U q U p", PQ) is rltl.until(
        parse_formula("p", PQ), parse_formula("q U p", PQ))
    p, q = ere.pred(PQ.atom("p")), ere.pred(PQ.atom("q"))
    assert parse_regex("p;q|q", PQ) is ere.union(ere.concat(p, q), q)
    assert parse_regex("p|q;q*", PQ) is ere.union(p, ere.concat(q, ere.star(q)))


def test_sugar():
    f = parse_formula("F G p", PQ)
    assert format_formula(f) == "F G p"
    assert parse_formula("{p;q} []-> X q", PQ) is rltl.forall_suffix(
        parse_regex("p;q", PQ), parse_formula("X q", PQ))


def test_integer_predicates():
    assert parse_predicate("[x%3==2] & [x>=0]", Z) == Z.mod(3, 2) & Z.ge(0)
    assert parse_predicate("![x<=4]", Z) == Z.gt(4)


def test_anchor_syntax():
    A = with_anchor(Z)
    assert parse_predicate("[#]", A) == A.anchor
    assert parse_word("1,#;2", A) == UPWord((1, ANCHOR), (2,))
    with pytest.raises(ParseError):
        parse_predicate("[#]", Z)


def test_words():
    w = parse_word("{p},{};{p q}", PQ)
    assert w == UPWord((frozenset("p"), frozenset()), (frozenset("pq"),))
    assert parse_word(format_word(w), PQ) == w
    assert parse_word("-3,4;0", Z) == UPWord((-3, 4), (0,))
    with pytest.raises(ParseError):
        parse_word("{p};", PQ)


@pytest.mark.parametrize("text", ["p &", "(p", "p U", "G", "{p;q", "z", "p q"])
def test_formula_errors(text):
    with pytest.raises(ParseError):
        parse_formula(text, PQ)


def test_error_position():
    with pytest.raises(ParseError) as ei:
        parse_formula("p & $", PQ)
    assert ei.value.pos == 4
    assert "<HERE>" in str(ei.value)


def test_unknown_variable():
    with pytest.raises(ParseError):
        parse_predicate("[y>0]", Z)
