import pytest

import gen
from omegamt import automata, oracle, rltl
from omegamt.algebra import IntAlgebra, PropAlgebra
from omegamt.automata import (TOP, Aba, alt_elim, combine, from_classical,
                              from_text, is_empty, member_up, mintermize,
                              product, to_dot, to_text)
from omegamt.errors import (AlgebraMismatchError, ParseError, StateCapError,
                            UsageError)
from omegamt.rltl import build_aba
from omegamt.syntax import parse_formula, parse_word
from omegamt.tterm import DNF_FALSE, func_equiv, ite, leaf

PQ = gen.PQ
LETTERS = PQ.letters()
WORDS = gen.all_up_words(LETTERS, 1, 2)


def nba_of(text, alg=PQ):
    return alt_elim(build_aba(rltl.to_positive(parse_formula(text, alg)), alg))


def same_language(m, n, words=WORDS):
    return all(member_up(m, w) == member_up(n, w) for w in words)


def test_alt_elim_against_classical():
    rng = gen.rng_for(301)
    for _ in range(60):
        m = gen.random_aba(rng, rng.randint(1, 4))
        c = mintermize(m)
        ref = oracle.classical_mh(c)
        n = alt_elim(m)
        assert n.is_nondeterministic
        for w in WORDS:
            assert member_up(n, w) == oracle.classical_member(ref, c.lift_word(w))


def test_alt_elim_keeps_nbas_equivalent():
    rng = gen.rng_for(302)
    for _ in range(30):
        m = gen.random_aba(rng, 3, nondet=True)
        assert same_language(m, alt_elim(m))


def test_alt_elim_accepting_states_have_empty_u():
    n = nba_of("G (F p & F !p)")
    assert all(not s.u for s in n.accepting)
    assert all(not (s.u & n.source.accepting) for s in n.states)


def test_alt_elim_cap():
    with pytest.raises(StateCapError):
        alt_elim(build_aba(parse_formula("G (F p & F q & F !p & F !q)", PQ), PQ), cap=2)


def test_product_language_and_shape():
    n1, n2 = nba_of("G F p"), nba_of("F G !q")
    p = product(n1, n2)
    assert p.is_nondeterministic
    for s in p.states:
        assert sorted(t.side for t in s.u | s.v) == [1, 2]
    for w in WORDS:
        assert member_up(p, w) == (member_up(n1, w) and member_up(n2, w))


def test_product_rejects_alternation():
    m = build_aba(parse_formula("G (F p & F q)", PQ), PQ)
    with pytest.raises(UsageError):
        product(m, m)


def test_emptiness_witnesses():
    assert is_empty(nba_of("G p & F !p"))
    res = is_empty(nba_of("G F p & G F !p & G q"))
    assert not res and not res.empty
    w = res.witness
    assert member_up(nba_of("G F p & G F !p & G q"), w)
    assert oracle.eval(parse_formula("G F p & G F !p & G q", PQ), w, PQ)


def test_emptiness_against_classical():
    rng = gen.rng_for(303)
    for _ in range(100):
        m = gen.random_aba(rng, rng.randint(1, 5), nondet=True)
        res = is_empty(m)
        assert res.empty == oracle.classical_is_empty(mintermize(m))
        if not res.empty:
            assert member_up(m, res.witness)


def test_true_leaf_is_accepting_sink():
    m = nba_of("F p")
    assert member_up(m, parse_word("{};{p}", PQ))
    assert not member_up(m, parse_word(";{q}", PQ))
    assert not is_empty(m).empty


def test_membership_over_integers():
    Z = IntAlgebra()
    n = nba_of("G ([x>0] -> F [x<0])", Z)
    assert member_up(n, parse_word("5;-1,3", Z))
    assert not member_up(n, parse_word("-1;3", Z))


def test_text_round_trip():
    rng = gen.rng_for(304)
    for _ in range(40):
        m = gen.random_aba(rng, rng.randint(1, 4))
        back = from_text(to_text(m))
        assert to_text(back) == to_text(m)
        assert same_language(m if m.is_nondeterministic else alt_elim(m),
                             back if back.is_nondeterministic else alt_elim(back))
    n = nba_of('G (F p & F !p)')
    assert to_text(from_text(to_text(n))) == to_text(n)


def test_text_format_errors():
    with pytest.raises(ParseError):
        from_text("algebra: prop:p\nstates: 0=\"a\"\ninit: {{0}}\naccepting:\ndelta 0: (leaf {{7}})\n")
    with pytest.raises(ParseError):
        from_text("nonsense")


def test_dot_export():
    dot = to_dot(build_aba(parse_formula("G (F p & F !p)", PQ), PQ))
    assert dot.startswith("digraph") and "doublecircle" in dot and "point" in dot


def test_mintermize_and_back():
    rng = gen.rng_for(305)
    for _ in range(30):
        m = gen.random_aba(rng, 3)
        c = mintermize(m)
        back = from_classical(c, c.alphabet)
        for q in m.states:
            assert func_equiv(m.delta[q], back.delta[q])


def test_from_classical_needs_disjoint_embedding():
    c = mintermize(gen.random_aba(gen.rng_for(306), 2))
    p = PQ.atom("p")
    with pytest.raises(UsageError):
        from_classical(c, [p] * len(c.alphabet))


def test_combine():
    a = build_aba(parse_formula("G p", PQ), PQ)
    b = build_aba(parse_formula("F q", PQ), PQ)
    both = combine(a, b, "and")
    either = combine(a, b, "or")
    ref_and = build_aba(parse_formula("G p & F q", PQ), PQ)
    for w in WORDS:
        assert member_up(alt_elim(both), w) == member_up(alt_elim(ref_and), w)
        assert member_up(alt_elim(either), w) == (member_up(alt_elim(a), w)
                                                  or member_up(alt_elim(b), w))
    with pytest.raises(AlgebraMismatchError):
        combine(a, build_aba(parse_formula("G a", PropAlgebra(("a",))), PropAlgebra(("a",))))


def test_aba_validation():
    p = PQ.atom("p")
    with pytest.raises(UsageError):
        Aba(PQ, [0], frozenset([frozenset([1])]), {0: leaf(DNF_FALSE)}, [])
    m = Aba(PQ, [0], frozenset([frozenset([0])]),
            {0: ite(p, leaf(frozenset([frozenset([0])])), leaf(DNF_FALSE))}, [0])
    assert m.is_nondeterministic and m.is_deterministic
    assert member_up(m, parse_word(";{p}", PQ))
    assert TOP is automata.TOP
