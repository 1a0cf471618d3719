import pytest

import gen
from omegamt import ere, oracle, rltl
from omegamt.algebra import IntAlgebra, PropAlgebra
from omegamt.errors import PositiveFragmentError, StateCapError
from omegamt.rltl import FALSE, TRUE, build_aba, deriv
from omegamt.syntax import parse_formula, parse_word
from omegamt.tterm import is_clean, ite, leaf, leaf_of
from omegamt.words import UPWord

PQ = gen.PQ
LETTERS = PQ.letters()
WORDS = gen.all_up_words(LETTERS, 1, 2)


def f(text, alg=PQ):
    return parse_formula(text, alg)


def test_boolean_smart_constructors():
    p, q = f("p"), f("q")
    assert rltl.conj(p, TRUE) is p and rltl.conj(p, FALSE) is FALSE
    assert rltl.disj(p, q) is rltl.disj(q, p)
    assert rltl.conj(p, rltl.conj(q, p)) is rltl.conj(p, q)
    assert rltl.neg(rltl.neg(p)) is p
    assert rltl.neg(TRUE) is FALSE


def test_simple_derivatives():
    p = PQ.atom("p")
    assert deriv(f("p")) is ite(p, leaf(TRUE), leaf(FALSE))
    assert deriv(f("X q")) is leaf(f("q"))
    fp = f("F p")
    assert deriv(fp) is ite(p, leaf(TRUE), leaf(fp))


def test_until_derivative_over_integers():
    Z = IntAlgebra()
    g = f("[x>0] U [x==7]", Z)
    d = deriv(g)
    assert is_clean(d)
    assert leaf_of(d, 7) is TRUE and leaf_of(d, 3) is g and leaf_of(d, -1) is FALSE


def test_derivative_step_with_negation():
    rng = gen.rng_for(201)
    for _ in range(300):
        g = gen.random_formula(rng, rng.randint(1, 3), PQ, positive=False)
        a = rng.choice(LETTERS)
        w = gen.random_word(rng, LETTERS)
        assert oracle.eval(g, UPWord((a,) + w.u, w.v), PQ) == \
            oracle.eval(leaf_of(deriv(g), a), w, PQ)


def test_to_positive_preserves_semantics():
    rng = gen.rng_for(202)
    for _ in range(200):
        g = gen.random_formula(rng, rng.randint(1, 3), PQ, positive=False,
                               omega=False)
        pos = rltl.to_positive(g)
        assert rltl.is_positive(pos)
        ev1, ev2 = oracle.Evaluator(g, PQ), oracle.Evaluator(pos, PQ)
        assert all(ev1(w) == ev2(w) for w in WORDS)


def test_negated_omega_is_rejected():
    with pytest.raises(PositiveFragmentError):
        rltl.to_positive(f("!omega{p;q}"))


def test_eval_matches_unrolled_ltl():
    rng = gen.rng_for(203)
    for _ in range(200):
        g = gen.random_formula(rng, rng.randint(1, 4), PQ, positive=False,
                               regex=False)
        ev = oracle.Evaluator(g, PQ)
        assert all(ev(w) == oracle.eval_ltl_unrolled(g, w) for w in WORDS)


def test_suffix_operators_semantics():
    A = PropAlgebra(("a", "b"))
    g = f("{a;a} <>-> b", A)
    h = f("{a;a} []-> b", A)
    w_yes = parse_word("{a},{a b};{}", A)
    w_no = parse_word("{a},{a};{b}", A)
    assert oracle.eval(g, w_yes, A) and not oracle.eval(g, w_no, A)
    assert oracle.eval(h, w_yes, A) and not oracle.eval(h, w_no, A)
    assert oracle.eval(h, parse_word(";{b}", A), A)


def test_closure_semantics():
    A = PropAlgebra(("a",))
    aa = parse_word(";{a}", A)
    assert oracle.eval(f("cl{a*;!a}", A), aa, A)
    assert not oracle.eval(f("ncl{a*;!a}", A), aa, A)
    assert oracle.eval(f("omega{a;a}", A), aa, A)
    assert not oracle.eval(f("omega{a;a}", A), parse_word("{a};{}", A), A)


def test_gf_both_aba_golden():
    A = PropAlgebra(("a",))
    m = build_aba(f("G (F a & F !a)", A), A)
    assert [m.labels[q] for q in m.states] == ["G (F a & F !a)", "F a", "F !a", "true"]
    assert {m.labels[q] for q in m.accepting} == {"G (F a & F !a)", "true"}
    assert not m.is_nondeterministic


def test_accepting_states():
    assert rltl.is_accepting(f("G p")) and rltl.is_accepting(TRUE)
    assert not rltl.is_accepting(f("F p")) and not rltl.is_accepting(f("p"))
    assert rltl.is_accepting(f("cl{p*}")) and not rltl.is_accepting(f("ncl{p*}"))


def test_build_aba_terms_are_clean():
    rng = gen.rng_for(204)
    for _ in range(100):
        m = build_aba(gen.random_formula(rng, 3, PQ), PQ)
        assert all(is_clean(t) for t in m.delta.values())


def test_build_aba_cap():
    with pytest.raises(StateCapError):
        build_aba(f("G (F p & F q & F !p & F !q)"), PQ, cap=2)


def test_regex_and_predicate_collection():
    g = f("{p;q} <>-> G q")
    assert ere.concat(ere.pred(PQ.atom("p")), ere.pred(PQ.atom("q"))) in rltl.regexes(g)
    assert set(rltl.predicates(g)) == {PQ.atom("p"), PQ.atom("q")}
