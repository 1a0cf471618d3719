"""Seeded random generators shared by the property and acceptance tests."""

import itertools
import random

from omegamt import ere, rltl
from omegamt.algebra import PropAlgebra
from omegamt.automata import Aba
from omegamt.tterm import clean, ite, leaf
from omegamt.words import UPWord

PQ = PropAlgebra(("p", "q"))


def pred_pool(alg=PQ):
    p, q = alg.atom("p"), alg.atom("q")
    return [p, q, ~p, ~q, p & q, p | q, p & ~q, ~p | q]


def letters(alg=PQ):
    return alg.letters()


def all_up_words(alphabet, max_u=2, max_v=3):
    out = []
    for lu in range(max_u + 1):
        for u in itertools.product(alphabet, repeat=lu):
            for lv in range(1, max_v + 1):
                for v in itertools.product(alphabet, repeat=lv):
                    out.append(UPWord(u, v))
    return out


def distinct_up_words(alphabet, max_u=2, max_v=3):
    """Exhaustive UP words, one representative per infinite word."""
    seen, out = set(), []
    for w in all_up_words(alphabet, max_u, max_v):
        c = w.canonical()
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out


def random_word(rng, alphabet, max_u=3, max_v=3):
    u = tuple(rng.choice(alphabet) for _ in range(rng.randint(0, max_u)))
    v = tuple(rng.choice(alphabet) for _ in range(rng.randint(1, max_v)))
    return UPWord(u, v)


def random_regex(rng, depth, alg=PQ, fusion=False):
    pool = pred_pool(alg)
    if depth <= 0 or rng.random() < 0.3:
        if rng.random() < 0.1:
            return ere.EPS
        return ere.pred(rng.choice(pool))
    ops = ["union", "inter", "concat", "concat", "star", "compl"]
    if fusion:
        ops.append("fusion")
    op = rng.choice(ops)
    sub = lambda: random_regex(rng, depth - 1, alg, fusion)  # noqa: E731
    if op == "union":
        return ere.union(sub(), sub())
    if op == "inter":
        return ere.inter(sub(), sub())
    if op == "concat":
        return ere.concat(sub(), sub())
    if op == "star":
        return ere.star(sub())
    if op == "compl":
        return ere.compl(sub(), alg)
    return ere.fusion(sub(), sub(), alg)


def random_formula(rng, depth, alg=PQ, positive=True, regex=True,
                   omega=True, regex_depth=2):
    pool = pred_pool(alg)
    if depth <= 0 or rng.random() < 0.2:
        return rltl.pred(rng.choice(pool))
    ops = ["and", "or", "X", "U", "R", "F", "G"]
    if not positive:
        ops.append("not")
    if regex:
        ops += ["esuf", "usuf", "cl", "ncl"]
        if omega:
            ops.append("omega")
    op = rng.choice(ops)

    def sub():
        return random_formula(rng, depth - 1, alg, positive, regex, omega,
                              regex_depth)

    def rx():
        return random_regex(rng, rng.randint(0, regex_depth), alg)

    if op == "and":
        return rltl.conj(sub(), sub())
    if op == "or":
        return rltl.disj(sub(), sub())
    if op == "not":
        return rltl.neg(sub())
    if op == "X":
        return rltl.next_(sub())
    if op == "U":
        return rltl.until(sub(), sub())
    if op == "R":
        return rltl.release(sub(), sub())
    if op == "F":
        return rltl.eventually(sub())
    if op == "G":
        return rltl.always(sub())
    if op == "esuf":
        return rltl.exists_suffix(rx(), sub())
    if op == "usuf":
        return rltl.forall_suffix(rx(), sub())
    if op == "cl":
        return rltl.closure(rx())
    if op == "ncl":
        return rltl.neg_closure(rx())
    return rltl.omega(rx())


def random_term(rng, alg, leaf_fn, depth=2):
    if depth <= 0 or rng.random() < 0.3:
        return leaf(leaf_fn())
    cond = rng.choice(pred_pool(alg))
    return ite(cond, random_term(rng, alg, leaf_fn, depth - 1),
               random_term(rng, alg, leaf_fn, depth - 1))


def random_aba(rng, n_states, alg=PQ, max_conj=2, max_disj=2, nondet=False,
               allow_true=True):
    """Random ABA (or NBA with ``nondet``) on states ``0..n-1``."""
    states = list(range(n_states))
    conj = 1 if nondet else max_conj

    def member():
        if allow_true and rng.random() < 0.05:
            return frozenset()
        k = rng.randint(1, conj)
        return frozenset(rng.sample(states, min(k, n_states)))

    def dnf():
        if rng.random() < 0.1:
            return frozenset()
        return frozenset(member() for _ in range(rng.randint(1, max_disj)))

    delta = {q: clean(random_term(rng, alg, dnf)) for q in states}
    initial = frozenset(member() for _ in range(rng.randint(1, 2)))
    accepting = {q for q in states if rng.random() < 0.4}
    return Aba(alg, states, initial, delta, accepting,
               {q: f"q{q}" for q in states})


def rng_for(seed):
    return random.Random(seed)
