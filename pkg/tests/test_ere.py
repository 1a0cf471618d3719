import itertools

import pytest

import gen
from omegamt import ere, oracle
from omegamt.algebra import IntAlgebra, PropAlgebra, equiv, minterms
from omegamt.errors import StateCapError
from omegamt.syntax import parse_regex
from omegamt.tterm import ite, leaf

PQ = gen.PQ
p, q = PQ.atom("p"), PQ.atom("q")
P, Q = ere.pred(p), ere.pred(q)
BOT, TOP = ere.bot(PQ), ere.top(PQ)
LETTERS = PQ.letters()


def short_words(n=4):
    for k in range(n + 1):
        yield from itertools.product(LETTERS, repeat=k)


def test_smart_constructors():
    assert ere.union(P, Q) is ere.pred(p | q)
    assert ere.inter(P, Q) is ere.pred(p & q)
    assert ere.union(ere.star(P), BOT) is ere.star(P)
    assert ere.union(ere.star(P), ere.star(P)) is ere.star(P)
    assert ere.concat(ere.EPS, P) is P and ere.concat(P, BOT) is BOT
    assert ere.concat(ere.concat(P, Q), P) is ere.concat(P, ere.concat(Q, P))
    assert ere.star(ere.star(P)) is ere.star(P)
    assert ere.star(ere.EPS) is ere.EPS and ere.star(BOT) is ere.EPS
    assert ere.compl(ere.compl(P, PQ), PQ) is P
    assert ere.compl(BOT, PQ) is ere.star(TOP)
    assert ere.compl(ere.EPS, PQ) is ere.plus(TOP)
    assert ere.compl(ere.plus(TOP), PQ) is ere.EPS
    assert ere.fusion(ere.EPS, P, PQ) is BOT


def test_union_is_aci():
    a, b, c = ere.star(P), ere.concat(P, Q), ere.star(Q)
    assert ere.union(a, ere.union(b, c)) is ere.union(ere.union(c, a), b)


def test_derivative_of_concat():
    r = ere.concat(P, Q)
    assert ere.der(r, PQ) is ite(p, leaf(Q), leaf(BOT))


def test_one_and_nullable():
    r = ere.union(P, ere.concat(Q, P))
    assert equiv(ere.one(r, PQ), p)
    assert not r.nullable and ere.star(r).nullable
    assert equiv(ere.one(ere.inter(ere.star(P), ere.star(Q)), PQ), p & q)


def test_differential_seeded():
    rng = gen.rng_for(101)
    for _ in range(300):
        r = gen.random_regex(rng, rng.randint(0, 4), PQ, fusion=True)
        u = tuple(rng.choice(LETTERS) for _ in range(rng.randint(0, 6)))
        assert ere.matches(r, u, PQ) == oracle.brute_match(r, u)


def test_against_compiled_dfa():
    rng = gen.rng_for(102)
    sigma = minterms(gen.pred_pool(PQ), PQ)
    comp = oracle.RegexCompiler(sigma)
    sym = {a: next(i for i, m in enumerate(sigma) if PQ.denotes(m, a))
           for a in LETTERS}
    for _ in range(100):
        r = gen.random_regex(rng, rng.randint(0, 4), PQ, fusion=True)
        d = comp.compile(r)
        for u in short_words(3):
            assert ere.matches(r, u, PQ) == d.accepts([sym[a] for a in u])
        assert ere.alive(r, PQ) == (d.start in d.alive)


def test_fusion_semantics():
    # fusion overlaps the last letter of the left with the first of the right
    r = ere.fusion(ere.concat(P, TOP), ere.concat(Q, Q), PQ)
    pq = frozenset("pq")
    assert ere.matches(r, (frozenset("p"), frozenset("q"), frozenset("q")), PQ)
    assert ere.matches(r, (pq, pq, pq), PQ)
    assert not ere.matches(r, (pq, pq), PQ)


def test_dfa_plus_golden():
    A = PropAlgebra(("a", "b"))
    a, b = A.atom("a"), A.atom("b")
    d = ere.build_dfa(parse_regex("(a;b)+", A), A)
    assert len(d.states) == 3
    assert [s.nullable for s in d.states] == [False, False, True]
    assert {(d.index(s), d.index(t)) for s, g, t in d.edges()} == {(0, 1), (1, 2), (2, 1)}
    assert all(equiv(g, a if d.index(s) != 1 else b) for s, g, t in d.edges())


def test_dfa_over_integers():
    Z = IntAlgebra()
    r = parse_regex("[x>0]*;[x%2==0]", Z)
    d = ere.build_dfa(r, Z)
    assert all(ere.matches(r, w, Z) == oracle.brute_match(r, w)
               for k in range(4) for w in itertools.product((-2, -1, 0, 1, 2, 3), repeat=k))
    assert d.alive()


def test_dfa_cap():
    r = parse_regex("~(true*;p;true;true;true)", PQ)
    with pytest.raises(StateCapError):
        ere.build_dfa(r, PQ, cap=3)


def test_complement_duality_seeded():
    rng = gen.rng_for(103)
    for _ in range(200):
        r = gen.random_regex(rng, rng.randint(0, 3), PQ)
        c = ere.compl(r, PQ)
        for u in short_words(3):
            assert ere.matches(c, u, PQ) != ere.matches(r, u, PQ)
