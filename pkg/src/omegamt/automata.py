"""Symbolic alternating Buchi automata and the algorithms on them.

An :class:`Aba` maps every state to a clean transition term whose leaves
are DNFs over states (``frozenset`` of ``frozenset``).  The empty conjunction
inside a leaf stands for ``true``; a leaf equal to the empty set is ``false``.
An automaton is *nondeterministic* (an NBA) when no conjunction in the
initial condition or in a leaf has more than one state.

Main entry points: :func:`alt_elim` (alternation elimination),
:func:`product`, :func:`is_empty` (nested depth-first search),
:func:`member_up` and :func:`mintermize` / :func:`from_classical`.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field

from .algebra import minterms, sample
from .errors import AlgebraMismatchError, ParseError, StateCapError, UsageError
from .tterm import (DNF_FALSE, DNF_TRUE, Ite, Leaf, collect, dnf_and, ite,
                    leaf, leaf_of, lift_binary, lift_unary, paths)
from .words import UPWord

DEFAULT_STATE_CAP = 100_000


class _Top:
    """Graph node reached through the empty conjunction (``true``)."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = object.__new__(cls)
        return cls._inst

    def __repr__(self):
        return "true"

    def __reduce__(self):
        return (_Top, ())


TOP = _Top()


class Aba:
    """Symbolic ABA ``(algebra, states, initial, delta, accepting)``.

    ``states`` is ordered; the position of a state is its display id.  The
    class flags are always recomputed from ``delta``."""

    def __init__(self, algebra, states, initial, delta, accepting, labels=None):
        self.algebra = algebra
        self.states = tuple(states)
        self.index = {q: i for i, q in enumerate(self.states)}
        if len(self.index) != len(self.states):
            raise UsageError("duplicate states")
        self.initial = frozenset(frozenset(x) for x in initial)
        self.delta = dict(delta)
        self.accepting = frozenset(accepting)
        labels = labels or {}
        self.labels = {q: labels.get(q, str(q)) for q in self.states}
        self._validate()
        self.is_nondeterministic = self._nondet()
        self.is_deterministic = self._det()

    def _validate(self):
        if set(self.delta) != set(self.states):
            raise UsageError("delta must be defined exactly on the states")
        if not self.accepting <= set(self.states):
            raise UsageError("accepting states must be states")
        known = self.index
        for x in self.initial:
            if not x <= known.keys():
                raise UsageError("initial condition mentions unknown states")
        for q, t in self.delta.items():
            for c in collect(t)[0]:
                if c.algebra != self.algebra:
                    raise AlgebraMismatchError(
                        f"condition {c} of state {self.labels[q]} is over "
                        f"{c.algebra}, not {self.algebra}")
            for dnf in collect(t)[1]:
                for x in dnf:
                    if not x <= known.keys():
                        raise UsageError(
                            f"delta of {self.labels[q]} mentions unknown states")

    def _leaves(self):
        for t in self.delta.values():
            yield from collect(t)[1]

    def _nondet(self):
        if any(len(x) > 1 for x in self.initial):
            return False
        return all(len(x) <= 1 for dnf in self._leaves() for x in dnf)

    def _det(self):
        if len(self.initial) != 1 or not self.is_nondeterministic:
            return False
        return all(len(dnf) <= 1 for dnf in self._leaves())

    def __len__(self):
        return len(self.states)

    def label(self, q):
        return self.labels[q]

    def conditions(self):
        out = []
        for q in self.states:
            for c in collect(self.delta[q])[0]:
                if c not in out:
                    out.append(c)
        return out

    def key(self, x):
        """Sort key of a conjunction of states."""
        return tuple(sorted(self.index[q] for q in x))

    def __repr__(self):
        kind = "NBA" if self.is_nondeterministic else "ABA"
        return f"<{kind} with {len(self.states)} states over {self.algebra}>"

    def to_text(self):
        return to_text(self)


@dataclass(frozen=True)
class MhState:
    """A breakpoint pair ``<U, V>`` of the alternation elimination.

    ``U`` holds the states that still owe a visit to an accepting state and
    never contains accepting states."""

    u: frozenset
    v: frozenset


@dataclass(frozen=True)
class Tagged:
    side: int
    state: object = field(compare=True)


# ---------------------------------------------------------------------------
# renaming and Boolean combination


def relabel(m, f, label=None):
    """Rename states through the injective map ``f``."""
    mapping = {q: f(q) for q in m.states}

    def on_dnf(dnf):
        return frozenset(frozenset(mapping[q] for q in x) for x in dnf)

    memo = {}
    delta = {mapping[q]: lift_unary(on_dnf, t, memo) for q, t in m.delta.items()}
    labels = {mapping[q]: (label(m.labels[q]) if label else m.labels[q])
              for q in m.states}
    return Aba(m.algebra, [mapping[q] for q in m.states], on_dnf(m.initial),
               delta, {mapping[q] for q in m.accepting}, labels)


def combine(m, n, op="and"):
    """``M and N`` / ``M or N`` on the initial conditions.

    Shared states with identical transitions and acceptance are kept shared;
    if any state clashes, all states of ``N`` are renamed apart."""
    if m.algebra != n.algebra:
        raise AlgebraMismatchError("automata over different algebras")
    clash = any(q in m.index and (m.delta[q] is not n.delta[q]
                                  or (q in m.accepting) != (q in n.accepting))
                for q in n.states)
    if clash:
        tag = 2
        while any(Tagged(tag, q) in m.index for q in n.states):
            tag += 1
        n = relabel(n, lambda q: Tagged(tag, q), lambda s: f"{s}'")
    states = list(m.states) + [q for q in n.states if q not in m.index]
    delta = dict(m.delta)
    delta.update(n.delta)
    labels = dict(n.labels)
    labels.update(m.labels)
    if op == "and":
        initial = dnf_and(m.initial, n.initial)
    elif op == "or":
        initial = m.initial | n.initial
    else:
        raise UsageError(f"unknown combination {op!r}")
    return Aba(m.algebra, states, initial, delta, m.accepting | n.accepting,
               labels)


# ---------------------------------------------------------------------------
# alternation elimination


def alt_elim(m, reduce=True, cap=DEFAULT_STATE_CAP):
    """Symbolic breakpoint construction: an NBA equivalent to ``m``.

    A state ``<U, V>`` with nonempty ``U`` moves by
    ``dinf(U) x dinf(V)`` where each pair of successor sets ``(X, Y)`` yields
    ``<X - F, Y + (X & F)>``; with empty ``U`` it moves by ``Fin(dinf(V))``
    which yields ``<X - F, X & F>``.  States with empty ``U`` accept.

    With ``reduce`` a freshly built pair is shrunk to a sub-pair whose
    conjunctions have the very same (hash-consed) transition terms.
    """
    F = m.accepting
    idx = m.index
    dinf_memo = {frozenset(): leaf(DNF_TRUE)}

    def dinf(x):
        t = dinf_memo.get(x)
        if t is None:
            qs = sorted(x, key=idx.__getitem__)
            t = m.delta[qs[0]]
            for q in qs[1:]:
                t = lift_binary(dnf_and, t, m.delta[q])
            dinf_memo[x] = t
        return t

    def shrink(x, keep_nonempty):
        target = dinf(x)
        changed = True
        while changed:
            changed = False
            for q in sorted(x, key=idx.__getitem__):
                if keep_nonempty and len(x) == 1:
                    break
                y = x - {q}
                if dinf(y) is target:
                    x, changed = y, True
                    break
        return x

    mh_memo = {}

    def mh(u, v):
        key = (u, v)
        s = mh_memo.get(key)
        if s is None:
            if reduce:
                u2 = shrink(u, True) if u else u
                v2 = shrink(v, False)
            else:
                u2, v2 = u, v
            s = MhState(u2, v2)
            mh_memo[key] = s
        return s

    leaf_memo = {}

    def fin(phi):
        r = leaf_memo.get(("fin", phi))
        if r is None:
            r = frozenset(frozenset([mh(x - F, x & F)]) for x in phi)
            leaf_memo[("fin", phi)] = r
        return r

    def aprod(phi, psi):
        r = leaf_memo.get((phi, psi))
        if r is None:
            r = frozenset(frozenset([mh(x - F, y | (x & F))])
                          for x in phi for y in psi)
            leaf_memo[(phi, psi)] = r
        return r

    def skey(s):
        return (tuple(sorted(idx[q] for q in s.u)),
                tuple(sorted(idx[q] for q in s.v)))

    fin_memo = {}
    init = fin(m.initial)
    start = sorted({s for x in init for s in x}, key=skey)
    states, seen, delta = list(start), set(start), {}
    work = deque(start)
    while work:
        s = work.popleft()
        if s.u:
            t = lift_binary(aprod, dinf(s.u), dinf(s.v))
        else:
            t = lift_unary(fin, dinf(s.v), fin_memo)
        delta[s] = t
        new = {x for dnf in collect(t)[1] for y in dnf for x in y} - seen
        for x in sorted(new, key=skey):
            if len(states) >= cap:
                raise StateCapError("alternation elimination", cap)
            seen.add(x)
            states.append(x)
            work.append(x)

    def lab(s):
        def part(z):
            return "{" + ",".join(m.labels[q] if len(m.states) > 20 else str(idx[q])
                                  for q in sorted(z, key=idx.__getitem__)) + "}"
        return f"<{part(s.u)},{part(s.v)}>"

    out = Aba(m.algebra, states, init, delta, {s for s in states if not s.u},
              {s: lab(s) for s in states})
    out.source = m
    return out


# ---------------------------------------------------------------------------
# products


def _materialize(n, side):
    """Tag states with ``side`` and replace ``true`` by an explicit state."""
    top = Tagged(side, TOP)
    used = [False]

    def on_dnf(dnf):
        out = []
        for x in dnf:
            if not x:
                used[0] = True
                out.append(frozenset([top]))
            else:
                out.append(frozenset(Tagged(side, q) for q in x))
        return frozenset(out)

    memo = {}
    delta = {Tagged(side, q): lift_unary(on_dnf, t, memo)
             for q, t in n.delta.items()}
    init = on_dnf(n.initial)
    states = [Tagged(side, q) for q in n.states]
    acc = {Tagged(side, q) for q in n.accepting}
    labels = {Tagged(side, q): f"{side}.{n.labels[q]}" for q in n.states}
    if used[0]:
        states.append(top)
        delta[top] = leaf(frozenset([frozenset([top])]))
        acc.add(top)
        labels[top] = f"{side}.true"
    return Aba(n.algebra, states, init, delta, acc, labels)


def product(n1, n2, cap=DEFAULT_STATE_CAP):
    """Intersection of two NBAs as ``alt_elim(n1 and n2)``.

    States of the two sides are tagged apart and ``true`` is materialized as
    an accepting sink, so every reached pair ``<U, V>`` has ``U | V`` made of
    exactly one state per side.  The sub-pair reduction is disabled here to
    keep that shape."""
    for n in (n1, n2):
        if not n.is_nondeterministic:
            raise UsageError("product expects NBAs")
    a, b = _materialize(n1, 1), _materialize(n2, 2)
    return alt_elim(combine(a, b, "and"), reduce=False, cap=cap)


# ---------------------------------------------------------------------------
# graph view of an NBA


class _NbaGraph:
    def __init__(self, n):
        if not n.is_nondeterministic:
            raise UsageError("expected an NBA (no conjunctions)")
        self.n = n
        self.alg = n.algebra
        self.accepting = set(n.accepting) | {TOP}
        self.init = sorted({self._node(x) for x in n.initial}, key=self._key)
        self._edges = {}
        self._letter_succ = {}

    def _node(self, x):
        return next(iter(x)) if x else TOP

    def _key(self, q):
        return -1 if q is TOP else self.n.index[q]

    def edges(self, q):
        """``[(target, guard)]`` with guards merged per target."""
        e = self._edges.get(q)
        if e is None:
            if q is TOP:
                e = [(TOP, self.alg.top)]
            else:
                guards = {}
                for path, dnf in paths(self.n.delta[q]):
                    g = self.alg.top if path is None else path
                    for x in dnf:
                        t = self._node(x)
                        guards[t] = guards[t] | g if t in guards else g
                e = sorted(guards.items(), key=lambda tg: self._key(tg[0]))
            self._edges[q] = e
        return e

    def succ(self, q):
        return [t for t, _ in self.edges(q)]

    def step(self, q, a):
        key = (q, a)
        r = self._letter_succ.get(key)
        if r is None:
            if q is TOP:
                r = (TOP,)
            else:
                r = tuple(sorted({self._node(x)
                                  for x in leaf_of(self.n.delta[q], a)},
                                 key=self._key))
            self._letter_succ[key] = r
        return r

    def guard(self, q, t):
        for tgt, g in self.edges(q):
            if tgt == t:
                return g
        raise KeyError((q, t))


def _graph(n):
    g = getattr(n, "_graph_cache", None)
    if g is None:
        g = _NbaGraph(n)
        n._graph_cache = g
    return g


def _sccs(roots, succ):
    """Tarjan's algorithm (iterative) on the part reachable from ``roots``."""
    index, low, on, stack, out = {}, {}, set(), [], []
    counter = 0
    for root in roots:
        if root in index:
            continue
        work = [(root, iter(succ(root)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on.add(root)
        while work:
            v, it = work[-1]
            w = next(it, None)
            if w is not None:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on.add(w)
                    work.append((w, iter(succ(w))))
                elif w in on:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(comp)
    return out


def member_up(n, word):
    """Does the NBA ``n`` accept the UP word ``u v^omega``?"""
    g = _graph(n)
    cur = set(g.init)
    for a in word.u:
        cur = {t for q in cur for t in g.step(q, a)}
    v = word.v
    p = len(v)

    def succ(node):
        q, i = node
        j = (i + 1) % p
        return [(t, j) for t in g.step(q, v[i])]

    roots = sorted(((q, 0) for q in cur), key=lambda x: g._key(x[0]))
    for comp in _sccs(roots, succ):
        if not any(q in g.accepting for q, _ in comp):
            continue
        if len(comp) > 1:
            return True
        x = comp[0]
        if x in succ(x):
            return True
    return False


@dataclass(frozen=True)
class Empty:
    empty = True
    witness = None

    def __bool__(self):
        return True


@dataclass(frozen=True)
class NonEmpty:
    witness: UPWord
    empty = False

    def __bool__(self):
        return False


def is_empty(n):
    """Nested depth-first search.  Returns :class:`Empty` (truthy) or
    :class:`NonEmpty` carrying an accepted UP word."""
    g = _graph(n)
    visited, flagged = set(), set()

    def inner(seed):
        stack = [(seed, iter(g.succ(seed)))]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                continue
            if nxt == seed:
                return [x for x, _ in stack] + [seed]
            if nxt not in flagged:
                flagged.add(nxt)
                stack.append((nxt, iter(g.succ(nxt))))
        return None

    for s in g.init:
        if s in visited:
            continue
        visited.add(s)
        stack = [(s, iter(g.succ(s)))]
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is not None:
                if nxt not in visited:
                    visited.add(nxt)
                    stack.append((nxt, iter(g.succ(nxt))))
                continue
            stack.pop()
            if node in g.accepting:
                cycle = inner(node)
                if cycle is not None:
                    prefix = [x for x, _ in stack] + [node]
                    return NonEmpty(_word(g, prefix, cycle))
    return Empty()


def _word(g, prefix, cycle):
    def letters(nodes):
        return tuple(sample(g.guard(a, b)) for a, b in zip(nodes, nodes[1:]))

    return UPWord(letters(prefix), letters(cycle))


# ---------------------------------------------------------------------------
# classical (finite alphabet) automata


@dataclass
class ClassicalAba:
    """ABA over the finite alphabet ``range(len(alphabet))``.

    ``alphabet[i]`` is the predicate that symbol ``i`` stands for (a minterm
    after :func:`mintermize`); ``delta[(q, i)]`` is a DNF over states."""

    alphabet: list
    states: tuple
    initial: frozenset
    delta: dict
    accepting: frozenset
    labels: dict = field(default_factory=dict)

    def symbol_of(self, letter):
        for i, p in enumerate(self.alphabet):
            if p.algebra.denotes(p, letter):
                return i
        raise UsageError(f"letter {letter!r} is not covered by the alphabet")

    def lift_word(self, word):
        return UPWord(tuple(self.symbol_of(a) for a in word.u),
                      tuple(self.symbol_of(a) for a in word.v))


def mintermize(m, extra=()):
    """Finite-alphabet view of ``m``: one symbol per satisfiable minterm of
    the conditions of ``m`` (plus ``extra`` predicates)."""
    gamma = m.conditions() + [p for p in extra]
    sigma = minterms(gamma, m.algebra)
    witnesses = [sample(s) for s in sigma]
    delta = {(q, i): leaf_of(m.delta[q], a)
             for q in m.states for i, a in enumerate(witnesses)}
    return ClassicalAba(sigma, m.states, m.initial, delta, m.accepting,
                        dict(m.labels))


def from_classical(c, embed, algebra=None):
    """Symbolic ABA from a classical one.

    ``embed[i]`` is the predicate for symbol ``i``; the predicates must be
    satisfiable and pairwise disjoint.  Symbols with the same target are
    merged under one condition."""
    embed = list(embed)
    if len(embed) != len(c.alphabet):
        raise UsageError("one predicate per symbol is needed")
    for i, p in enumerate(embed):
        if not p.is_sat:
            raise UsageError(f"embedding of symbol {i} is unsatisfiable")
        for q in embed[i + 1:]:
            if (p & q).is_sat:
                raise UsageError("symbol embeddings must be pairwise disjoint")
    alg = algebra or embed[0].algebra
    delta = {}
    for q in c.states:
        groups = {}
        for i, p in enumerate(embed):
            tgt = c.delta[(q, i)]
            groups[tgt] = groups[tgt] | p if tgt in groups else p
        t = leaf(DNF_FALSE)
        for tgt, cond in groups.items():
            t = lift_binary(lambda a, b: a | b, t,
                            ite(cond, leaf(tgt), leaf(DNF_FALSE)))
        delta[q] = t
    return Aba(alg, c.states, c.initial, delta, c.accepting, c.labels)


# ---------------------------------------------------------------------------
# text and DOT formats


def _fmt_dnf(dnf, ids):
    members = sorted(tuple(sorted(ids[q] for q in x)) for x in dnf)
    return "{" + ",".join("{" + ",".join(map(str, x)) + "}"
                          for x in members) + "}"


def _fmt_term(t, ids):
    if type(t) is Leaf:
        return f"(leaf {_fmt_dnf(t.value, ids)})"
    return (f"(if {t.cond} {_fmt_term(t.then, ids)} "
            f"{_fmt_term(t.else_, ids)})")


def to_text(m):
    ids = m.index
    lines = [f"algebra: {m.algebra}"]
    lines.append("states: " + ", ".join(
        f'{i}="{_escape(m.labels[q])}"' for i, q in enumerate(m.states)))
    lines.append("init: " + _fmt_dnf(m.initial, ids))
    lines.append("accepting: " + " ".join(
        str(ids[q]) for q in m.states if q in m.accepting))
    for i, q in enumerate(m.states):
        lines.append(f"delta {i}: {_fmt_term(m.delta[q], ids)}")
    return "\n".join(lines) + "\n"


def _escape(s):
    return s.replace("\\", "\\\\").replace('"', '\\"')


_DNF_RE = re.compile(r"\{((?:[\s,]*\{[\d\s,]*\})*)\s*\}")
_STATE_RE = re.compile(r'\s*(\d+)="((?:[^"\\]|\\.)*)"\s*(,|$)')


def _parse_dnf(text, pos):
    """Parse ``{{0,1},{2}}`` starting at ``pos``; returns (dnf, new pos).
    Whitespace is accepted in place of the commas."""
    m = _DNF_RE.match(text, pos)
    if not m:
        raise ParseError("expected a DNF like {{0,1},{2}}", text, pos)
    members = re.findall(r"\{([\d\s,]*)\}", m.group(1))
    dnf = frozenset(frozenset(int(x) for x in re.split(r"[\s,]+", mem.strip()) if x)
                    for mem in members)
    return dnf, m.end()


def _parse_term(text, pos, alg):
    from .syntax import parse_predicate

    while text[pos:pos + 1].isspace():
        pos += 1
    if text.startswith("(leaf", pos):
        pos += 5
        while text[pos:pos + 1].isspace():
            pos += 1
        dnf, pos = _parse_dnf(text, pos)
        while text[pos:pos + 1].isspace():
            pos += 1
        if text[pos:pos + 1] != ")":
            raise ParseError("expected ')'", text, pos)
        return leaf(dnf), pos + 1
    if text.startswith("(if ", pos):
        start = pos + 4
        depth, j = 0, start
        while j < len(text):
            if depth == 0 and (text.startswith("(if ", j)
                               or text.startswith("(leaf", j)):
                break
            if text[j] == "(":
                depth += 1
            elif text[j] == ")":
                depth -= 1
            j += 1
        cond = parse_predicate(text[start:j].strip(), alg)
        then, pos = _parse_term(text, j, alg)
        else_, pos = _parse_term(text, pos, alg)
        while text[pos:pos + 1].isspace():
            pos += 1
        if text[pos:pos + 1] != ")":
            raise ParseError("expected ')'", text, pos)
        return Ite._make(cond, then, else_), pos + 1
    raise ParseError("expected (if ...) or (leaf ...)", text, pos)


def from_text(text):
    """Parse the format written by :func:`to_text`.  States become the
    integers ``0..n-1``."""
    from .algebra import parse_algebra

    alg = None
    labels, init, acc, delta = {}, None, None, {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("//"):
            continue
        head, _, rest = line.partition(":")
        head = head.strip()
        if head == "algebra":
            alg = parse_algebra(rest)
        elif head == "states":
            pos = 0
            rest = rest.strip()
            while pos < len(rest):
                m = _STATE_RE.match(rest, pos)
                if not m:
                    raise ParseError("bad state list", rest, pos)
                labels[int(m.group(1))] = re.sub(r"\\(.)", r"\1", m.group(2))
                pos = m.end()
        elif head == "init":
            init, _ = _parse_dnf(rest.strip(), 0)
        elif head == "accepting":
            acc = {int(x) for x in rest.split()}
        elif head.startswith("delta"):
            if alg is None:
                raise ParseError(f"line {lineno}: delta before algebra")
            q = int(head[5:])
            t, end = _parse_term(rest.strip(), 0, alg)
            if rest.strip()[end:].strip():
                raise ParseError(f"line {lineno}: trailing text", rest.strip(), end)
            delta[q] = t
        else:
            raise ParseError(f"line {lineno}: unknown field {head!r}")
    if alg is None or init is None or acc is None:
        raise ParseError("missing algebra, init or accepting line")
    states = sorted(labels)
    if states != list(range(len(states))):
        raise ParseError("state ids must be 0..n-1")
    try:
        return Aba(alg, states, init, delta, acc, labels)
    except UsageError as e:
        raise ParseError(f"inconsistent automaton: {e}") from None


def to_dot(m):
    ids = m.index
    out = ["digraph aba {", "  rankdir=LR;", '  node [shape=circle];',
           '  init [shape=point];']
    for i, q in enumerate(m.states):
        shape = "doublecircle" if q in m.accepting else "circle"
        out.append(f'  q{i} [label="{_escape(m.labels[q])}", shape={shape}];')
    need_top = [False]
    junctions = [0]

    def emit(src, x, guard):
        if not x:
            need_top[0] = True
            out.append(f'  {src} -> top [label="{_escape(str(guard))}"];')
        elif len(x) == 1:
            (t,) = x
            out.append(f'  {src} -> q{ids[t]} [label="{_escape(str(guard))}"];')
        else:
            j = f"and{junctions[0]}"
            junctions[0] += 1
            out.append(f'  {j} [shape=point, label=""];')
            out.append(f'  {src} -> {j} [label="{_escape(str(guard))}", arrowhead=none];')
            for t in sorted(x, key=ids.__getitem__):
                out.append(f"  {j} -> q{ids[t]};")

    for x in sorted(m.initial, key=m.key):
        emit("init", x, "")
    for i, q in enumerate(m.states):
        guards = {}
        for path, dnf in paths(m.delta[q]):
            g = m.algebra.top if path is None else path
            for x in dnf:
                guards[x] = guards[x] | g if x in guards else g
        for x in sorted(guards, key=m.key):
            emit(f"q{i}", x, guards[x])
    if need_top[0]:
        out.insert(4, '  top [label="true", shape=doublecircle];')
    out.append("}")
    return "\n".join(out) + "\n"


def transitions(m, q):
    """``[(guard, conjunction)]`` for state ``q``, guards merged per target."""
    guards = {}
    for path, dnf in paths(m.delta[q]):
        g = m.algebra.top if path is None else path
        for x in dnf:
            guards[x] = guards[x] | g if x in guards else g
    return [(guards[x], x) for x in sorted(guards, key=m.key)]
