import pickle

from hypothesis import given, settings
from hypothesis import strategies as st

import gen
from omegamt.algebra import IntAlgebra
from omegamt.tterm import (DNF_FALSE, DNF_TRUE, Ite, clean, collect,
                           dnf_and, dnf_atom, format_term, func_equiv,
                           if_then, is_clean, ite, leaf, leaf_of,
                           lift_binary, lift_unary, min_models, paths,
                           restrict, size)

INT = IntAlgebra()
PQ = gen.PQ
LETTERS = PQ.letters()


def pair(x, y):
    return x + y


def terms(alg=PQ):
    leaves = st.sampled_from(["1", "2", "3"]).map(leaf)
    conds = st.sampled_from(gen.pred_pool(alg))
    return st.recursive(
        leaves, lambda sub: st.builds(ite, conds, sub, sub), max_leaves=8)


def test_restrict_golden():
    beta, alpha = INT.gt(0), INT.gt(5)
    raw = Ite._make(beta, ite(alpha, leaf("13"), leaf("14")),
                    ite(alpha, leaf("23"), leaf("24")))
    want = ite(beta, ite(alpha, leaf("13"), leaf("14")), leaf("24"))
    assert restrict(raw, INT.top) is want
    assert clean(raw) is want
    # lifting builds the cleaned term directly
    f = ite(beta, leaf("1"), leaf("2"))
    g = ite(alpha, leaf("3"), leaf("4"))
    assert lift_binary(pair, f, g) is want


def test_restrict_cases():
    a = INT.gt(0)
    t = ite(a, leaf("x"), leaf("y"))
    assert restrict(t, INT.lt(-3)) is leaf("y")
    assert restrict(t, INT.gt(7)) is leaf("x")
    assert restrict(t, INT.gt(-7)) is t


def test_smart_ite_rules():
    p, q = PQ.atom("p"), PQ.atom("q")
    f, g = leaf("f"), leaf("g")
    assert ite(p, f, f) is f
    assert ite(PQ.top, f, g) is f and ite(PQ.bot, f, g) is g
    assert ite(p, ite(q, f, g), g) is ite(p & q, f, g)
    assert ite(p, f, ite(q, f, g)) is ite(p | q, f, g)
    assert if_then(p, "f", "g") is ite(p, f, g)


def test_hash_consing_and_pickle():
    t = ite(PQ.atom("p"), leaf(1), leaf(2))
    assert ite(PQ.atom("p"), leaf(1), leaf(2)) is t
    assert pickle.loads(pickle.dumps(t)) is t


@settings(max_examples=200, deadline=None)
@given(terms(), terms())
def test_lift_binary_pointwise(f, g):
    h = lift_binary(pair, f, g)
    assert is_clean(h)
    for a in LETTERS:
        assert leaf_of(h, a) == leaf_of(f, a) + leaf_of(g, a)


@settings(max_examples=200, deadline=None)
@given(terms())
def test_clean_preserves_function(f):
    c = clean(f)
    assert is_clean(c)
    assert func_equiv(f, c)
    assert size(c) <= size(f)
    assert clean(c) is c
    assert all(leaf_of(c, a) == leaf_of(f, a) for a in LETTERS)


@settings(max_examples=200, deadline=None)
@given(terms())
def test_lift_unary_and_paths(f):
    g = lift_unary(lambda x: x * 2, f)
    assert all(leaf_of(g, a) == leaf_of(f, a) * 2 for a in LETTERS)
    # the path conditions of a clean term partition the letters
    ps = paths(clean(f))
    for a in LETTERS:
        hits = [v for c, v in ps if c is None or PQ.denotes(c, a)]
        assert hits == [leaf_of(f, a)]


@settings(max_examples=200, deadline=None)
@given(terms(), terms())
def test_func_equiv_matches_pointwise(f, g):
    same = all(leaf_of(f, a) == leaf_of(g, a) for a in LETTERS)
    assert func_equiv(f, g) == same


def test_collect_and_format():
    p = PQ.atom("p")
    t = ite(p, leaf("a"), leaf("b"))
    assert collect(t) == ([p], ["a", "b"])
    assert format_term(t) == "if p then (a) else (b)"


def test_dnf_helpers():
    a, b = dnf_atom("a"), dnf_atom("b")
    assert dnf_and(a, DNF_TRUE) == a and dnf_and(a, DNF_FALSE) == DNF_FALSE
    assert dnf_and(a | b, b) == frozenset([frozenset("ab"), frozenset("b")])
    assert min_models(dnf_and(a | b, b)) == b
