"""Sanity checks of the reference implementations themselves."""

import pytest

import gen
from omegamt import ere, oracle
from omegamt.algebra import PropAlgebra
from omegamt.automata import ClassicalAba, mintermize
from omegamt.errors import UsageError
from omegamt.rltl import build_aba
from omegamt.syntax import parse_formula, parse_regex, parse_word
from omegamt.words import UPWord

PQ = gen.PQ
A = PropAlgebra(("a",))
a, n = frozenset("a"), frozenset()


def test_brute_match_basics():
    r = parse_regex("a*;!a", A)
    assert oracle.brute_match(r, (a, a, n))
    assert not oracle.brute_match(r, (a, n, a))
    assert oracle.brute_match(ere.EPS, ())
    with pytest.raises(UsageError):
        oracle.brute_match(r, (a,) * 9)


def test_eval_is_invariant_under_word_representation():
    rng = gen.rng_for(401)
    letters = PQ.letters()
    for _ in range(100):
        f = gen.random_formula(rng, 3, PQ, positive=False)
        w = gen.random_word(rng, letters)
        # the same infinite word written three ways
        unrolled = UPWord(w.u + w.v, w.v + w.v)
        ev = oracle.Evaluator(f, PQ)
        assert ev(w) == ev(unrolled) == ev(w.canonical())


def test_eval_known_values():
    f = parse_formula("G (F a & F !a)", A)
    assert oracle.eval(f, parse_word(";{a},{}", A), A)
    assert not oracle.eval(f, parse_word("{},{};{a}", A), A)


def test_classical_mh_hand_example():
    # one symbol; q0 -> q0 & q1, q1 -> true; only q0 accepting
    c = ClassicalAba([A.top], ("q0", "q1"), frozenset([frozenset(["q0"])]),
                     {("q0", 0): frozenset([frozenset(["q0", "q1"])]),
                      ("q1", 0): frozenset([frozenset()])},
                     frozenset(["q0"]))
    mh = oracle.classical_mh(c)
    assert oracle.classical_member(mh, UPWord((), (0,)))
    assert not oracle.classical_is_empty(mh)
    # make q1 loop forever without acceptance: language becomes empty
    c.delta[("q1", 0)] = frozenset([frozenset(["q1"])])
    assert oracle.classical_is_empty(oracle.classical_mh(c))


def test_classical_member_matches_eval():
    f = parse_formula("G F a", A)
    c = mintermize(build_aba(f, A))
    for w in gen.all_up_words(A.letters(), 2, 2):
        assert oracle.classical_aba_member(c, c.lift_word(w)) == oracle.eval(f, w, A)


def test_regex_compiler_accepts():
    sigma = [A.atom("a"), ~A.atom("a")]
    d = oracle.RegexCompiler(sigma).compile(parse_regex("(a;!a)*", A))
    assert d.accepts([0, 1, 0, 1]) and not d.accepts([0, 0]) and d.accepts([])
