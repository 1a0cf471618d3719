"""Reference implementations used to cross-check the symbolic pipeline.

Nothing here uses derivatives or transition-term lifting.  Regexes are
compiled to complete DFAs over a finite minterm alphabet with the textbook
constructions (products, subset construction), formulas are evaluated
directly on the positions of a lasso, and the breakpoint construction and
emptiness check work on explicit alphabets.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import ere, rltl
from .algebra import minterms
from .automata import TOP, ClassicalAba
from .errors import UsageError

# ---------------------------------------------------------------------------
# classical DFAs for regexes


class ClassicalDfa:
    """Complete DFA over symbols ``0..k-1``."""

    def __init__(self, trans, finals, start=0):
        self.trans = trans
        self.finals = frozenset(finals)
        self.start = start
        self.alive = self._alive()

    def __len__(self):
        return len(self.trans)

    def _alive(self):
        live = set(self.finals)
        changed = True
        while changed:
            changed = False
            for q, row in enumerate(self.trans):
                if q not in live and any(t in live for t in row):
                    live.add(q)
                    changed = True
        return frozenset(live)

    def accepts(self, syms):
        q = self.start
        for s in syms:
            q = self.trans[q][s]
        return q in self.finals


def _explore(start, step, final, k):
    """Build a DFA from an implicit one with hashable states."""
    ids = {start: 0}
    order = [start]
    trans = []
    i = 0
    while i < len(order):
        s = order[i]
        row = []
        for a in range(k):
            t = step(s, a)
            if t not in ids:
                ids[t] = len(order)
                order.append(t)
            row.append(ids[t])
        trans.append(row)
        i += 1
    return ClassicalDfa(trans, [ids[s] for s in order if final(s)])


class RegexCompiler:
    """Compiles regexes over the fixed minterm alphabet ``sigma``."""

    def __init__(self, sigma):
        self.sigma = list(sigma)
        self.k = len(self.sigma)
        self.cache = {}

    def inside(self, m, p):
        return not (m & ~p).is_sat

    def compile(self, r):
        d = self.cache.get(r)
        if d is None:
            d = self._compile(r)
            self.cache[r] = d
        return d

    def _compile(self, r):
        k = self.k
        t = type(r)
        if t is ere.Pred:
            row = [1 if self.inside(m, r.pred) else 2 for m in self.sigma]
            return ClassicalDfa([row, [2] * k, [2] * k], [1])
        if t is ere.Eps:
            return ClassicalDfa([[1] * k, [1] * k], [0])
        if t in (ere.Union, ere.Inter):
            parts = [self.compile(x) for x in r.items]
            combine = any if t is ere.Union else all
            return _explore(
                tuple(p.start for p in parts),
                lambda s, a: tuple(p.trans[q][a] for p, q in zip(parts, s)),
                lambda s: combine(q in p.finals for p, q in zip(parts, s)), k)
        if t is ere.Compl:
            d = self.compile(r.body)
            return ClassicalDfa(d.trans, set(range(len(d))) - d.finals, d.start)
        if t is ere.Concat:
            a, b = self.compile(r.head), self.compile(r.tail)

            def step(s, x):
                qa, bs = s
                qa2 = a.trans[qa][x]
                bs2 = {b.trans[q][x] for q in bs}
                if qa2 in a.finals:
                    bs2.add(b.start)
                return (qa2, frozenset(bs2))

            start_b = frozenset([b.start]) if a.start in a.finals else frozenset()
            return _explore((a.start, start_b), step,
                            lambda s: bool(s[1] & b.finals), k)
        if t is ere.Star:
            a = self.compile(r.body)

            def step(s, x):
                _, qs = s
                qs2 = {a.trans[q][x] for q in qs}
                if qs2 & a.finals:
                    qs2.add(a.start)
                return (False, frozenset(qs2))

            return _explore((True, frozenset([a.start])), step,
                            lambda s: s[0] or bool(s[1] & a.finals), k)
        if t is ere.Fusion:
            a, b = self.compile(r.left), self.compile(r.right)

            def step(s, x):
                qa, bs = s
                qa2 = a.trans[qa][x]
                bs2 = {b.trans[q][x] for q in bs}
                if qa2 in a.finals:
                    bs2.add(b.trans[b.start][x])
                return (qa2, frozenset(bs2))

            return _explore((a.start, frozenset()), step,
                            lambda s: bool(s[1] & b.finals), k)
        raise TypeError(r)


# ---------------------------------------------------------------------------
# finite-word matching by brute force

BRUTE_MAX = 8


def brute_match(r, word):
    """Membership of a finite word by trying every split point."""
    word = tuple(word)
    if len(word) > BRUTE_MAX:
        raise UsageError(f"brute_match handles words of length <= {BRUTE_MAX}")
    n = len(word)

    @lru_cache(maxsize=None)
    def m(x, i, j):
        t = type(x)
        if t is ere.Eps:
            return i == j
        if t is ere.Pred:
            return j == i + 1 and x.pred.algebra.denotes(x.pred, word[i])
        if t is ere.Union:
            return any(m(y, i, j) for y in x.items)
        if t is ere.Inter:
            return all(m(y, i, j) for y in x.items)
        if t is ere.Compl:
            return not m(x.body, i, j)
        if t is ere.Concat:
            return any(m(x.head, i, k) and m(x.tail, k, j)
                       for k in range(i, j + 1))
        if t is ere.Star:
            return i == j or any(m(x.body, i, k) and m(x, k, j)
                                 for k in range(i + 1, j + 1))
        if t is ere.Fusion:
            return any(m(x.left, i, k) and m(x.right, k - 1, j)
                       for k in range(i + 1, j + 1))
        raise TypeError(x)

    return m(r, 0, n)


# ---------------------------------------------------------------------------
# formula evaluation on lassos


class Evaluator:
    """Decides ``w |= f`` for UP words ``w``; reusable across words."""

    def __init__(self, f, algebra=None):
        self.f = f
        preds = rltl.predicates(f)
        if algebra is None:
            if not preds:
                from .algebra import PropAlgebra
                algebra = PropAlgebra(())
            else:
                algebra = preds[0].algebra
        self.algebra = algebra
        regex_preds = []
        for r in rltl.regexes(f):
            for p in ere.predicates(r):
                if p not in regex_preds:
                    regex_preds.append(p)
        self.sigma = minterms(regex_preds, algebra)
        self.compiler = RegexCompiler(self.sigma)
        self.dfas = {r: self.compiler.compile(r) for r in rltl.regexes(f)}

    def symbol(self, letter):
        for i, m in enumerate(self.sigma):
            if m.algebra.denotes(m, letter):
                return i
        raise UsageError(f"letter {letter!r} not covered")

    def __call__(self, word):
        return self.table(word)[self.f][0]

    def table(self, word):
        u, v = word.u, word.v
        n = len(u) + len(v)
        letters = [word[i] for i in range(n)]
        syms = [self.symbol(a) for a in letters]
        nxt = [i + 1 if i + 1 < n else len(u) for i in range(n)]
        val = {}

        def scan(d, i):
            """Yield positions p where w[i..p] is accepted by ``d``."""
            q, p, seen = d.start, i, set()
            while True:
                q = d.trans[q][syms[p]]
                if q not in d.alive:
                    return
                if q in d.finals:
                    yield p
                p = nxt[p]
                if (p, q) in seen:
                    return
                seen.add((p, q))

        def closure_holds(d, i):
            if d.start in d.finals:
                return True
            q, p, seen = d.start, i, set()
            while True:
                q = d.trans[q][syms[p]]
                if q in d.finals:
                    return True
                if q not in d.alive:
                    return False
                p = nxt[p]
                if (p, q) in seen:
                    return True
                seen.add((p, q))

        def ev(g):
            if g in val:
                return val[g]
            t = type(g)
            if g is rltl.TRUE:
                r = [True] * n
            elif g is rltl.FALSE:
                r = [False] * n
            elif t is rltl.Pred:
                r = [g.pred.algebra.denotes(g.pred, a) for a in letters]
            elif t is rltl.Not:
                r = [not x for x in ev(g.body)]
            elif t is rltl.And:
                rows = [ev(x) for x in g.items]
                r = [all(col) for col in zip(*rows)]
            elif t is rltl.Or:
                rows = [ev(x) for x in g.items]
                r = [any(col) for col in zip(*rows)]
            elif t is rltl.Next:
                b = ev(g.body)
                r = [b[nxt[i]] for i in range(n)]
            elif t is rltl.Until:
                a, b = ev(g.left), ev(g.right)
                r = [False] * n
                while True:
                    r2 = [b[i] or (a[i] and r[nxt[i]]) for i in range(n)]
                    if r2 == r:
                        break
                    r = r2
            elif t is rltl.Release:
                a, b = ev(g.left), ev(g.right)
                r = [True] * n
                while True:
                    r2 = [b[i] and (a[i] or r[nxt[i]]) for i in range(n)]
                    if r2 == r:
                        break
                    r = r2
            elif t is rltl.ExistsSuffix:
                d, b = self.dfas[g.regex], ev(g.body)
                r = [any(b[p] for p in scan(d, i)) for i in range(n)]
            elif t is rltl.ForallSuffix:
                d, b = self.dfas[g.regex], ev(g.body)
                r = [all(b[p] for p in scan(d, i)) for i in range(n)]
            elif t is rltl.WeakClosure:
                d = self.dfas[g.regex]
                r = [closure_holds(d, i) for i in range(n)]
            elif t is rltl.NegWeakClosure:
                d = self.dfas[g.regex]
                r = [not closure_holds(d, i) for i in range(n)]
            elif t is rltl.OmegaClosure:
                d = self.dfas[g.regex]
                succ = [{nxt[p] for p in scan(d, i)} for i in range(n)]
                live = set(range(n))
                changed = True
                while changed:
                    changed = False
                    for i in list(live):
                        if not succ[i] & live:
                            live.discard(i)
                            changed = True
                r = [i in live for i in range(n)]
            else:
                raise TypeError(g)
            val[g] = r
            return r

        ev(self.f)
        return val


def eval(f, word, algebra=None):
    """``word |= f`` by direct evaluation on the lasso of ``word``."""
    return Evaluator(f, algebra)(word)


def eval_ltl_unrolled(f, word):
    """Plain recursive LTL semantics; a second reference for the LTL
    fragment (no regex operators)."""
    n = len(word.u) + len(word.v)

    def canon(i):
        if i < len(word.u):
            return i
        return len(word.u) + (i - len(word.u)) % len(word.v)

    @lru_cache(maxsize=None)
    def sat(g, i):
        t = type(g)
        if g is rltl.TRUE:
            return True
        if g is rltl.FALSE:
            return False
        if t is rltl.Pred:
            return g.pred.algebra.denotes(g.pred, word[i])
        if t is rltl.Not:
            return not sat(g.body, i)
        if t is rltl.And:
            return all(sat(x, i) for x in g.items)
        if t is rltl.Or:
            return any(sat(x, i) for x in g.items)
        if t is rltl.Next:
            return sat(g.body, canon(i + 1))
        if t is rltl.Until:
            for j in range(i, i + n + 1):
                if sat(g.right, canon(j)):
                    return True
                if not sat(g.left, canon(j)):
                    return False
            return False
        if t is rltl.Release:
            for j in range(i, i + n + 1):
                if not sat(g.right, canon(j)):
                    return False
                if sat(g.left, canon(j)):
                    return True
            return True
        raise UsageError(f"not an LTL formula: {g}")

    return sat(f, 0)


# ---------------------------------------------------------------------------
# classical breakpoint construction and emptiness


def classical_mh(c):
    """Miyano-Hayashi breakpoint construction on an explicit alphabet.

    States are pairs ``(S, O)``: ``S`` the current conjunction, ``O`` the
    part that has not yet visited an accepting state since the last
    breakpoint.  Pairs with empty ``O`` accept."""
    F = c.accepting
    k = len(c.alphabet)
    order = {q: i for i, q in enumerate(c.states)}

    def key(s):
        return (sorted(order[q] for q in s[0]), sorted(order[q] for q in s[1]))

    def successors(s, a):
        S, O = s
        qs = sorted(S, key=order.__getitem__)
        options = [sorted(c.delta[(q, a)], key=lambda x: sorted(map(order.get, x)))
                   for q in qs]
        out = set()
        for choice in itertools.product(*options):
            pick = dict(zip(qs, choice))
            S2 = frozenset().union(*choice) if choice else frozenset()
            if O:
                O2 = frozenset().union(*(pick[q] for q in O)) - F
            else:
                O2 = S2 - F
            out.add((S2, O2))
        return out

    init = {(x, x - F) for x in c.initial}
    states = sorted(init, key=key)
    seen = set(states)
    delta = {}
    i = 0
    while i < len(states):
        s = states[i]
        i += 1
        for a in range(k):
            succ = successors(s, a)
            delta[(s, a)] = frozenset(frozenset([t]) for t in succ)
            for t in sorted(succ - seen, key=key):
                seen.add(t)
                states.append(t)
    return ClassicalAba(list(c.alphabet), tuple(states),
                        frozenset(frozenset([s]) for s in init), delta,
                        frozenset(s for s in states if not s[1]))


def _classical_graph(c):
    def node(x):
        if len(x) > 1:
            raise UsageError("expected a nondeterministic automaton")
        return next(iter(x)) if x else TOP

    def step(q, a):
        if q is TOP:
            return {TOP}
        return {node(x) for x in c.delta[(q, a)]}

    init = {node(x) for x in c.initial}
    acc = set(c.accepting) | {TOP}
    return init, step, acc


def _reach(starts, succ):
    seen, stack = set(starts), list(starts)
    while stack:
        x = stack.pop()
        for y in succ(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def classical_is_empty(c):
    """No accepting state is both reachable and on a cycle."""
    init, step, acc = _classical_graph(c)
    k = len(c.alphabet)

    def succ(q):
        return {t for a in range(k) for t in step(q, a)}

    for q in _reach(init, succ):
        if q in acc and q in _reach(succ(q), succ):
            return False
    return True


def classical_member(c, word):
    """Membership of a UP word over symbols in a classical NBA."""
    init, step, acc = _classical_graph(c)
    cur = set(init)
    for a in word.u:
        cur = {t for q in cur for t in step(q, a)}
    p = len(word.v)

    def succ(x):
        q, i = x
        return {(t, (i + 1) % p) for t in step(q, word.v[i])}

    for x in _reach({(q, 0) for q in cur}, succ):
        if x[0] in acc and x in _reach(succ(x), succ):
            return True
    return False


def classical_aba_member(c, word):
    """Membership for a classical ABA via :func:`classical_mh`."""
    return classical_member(classical_mh(c), word)
