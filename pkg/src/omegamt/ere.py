"""Extended regular expressions with symbolic derivatives.

Regexes are hash-consed and normalized by their smart constructors:

* union and intersection are flattened, deduplicated and sorted (ACI); their
  predicate operands are merged into a single predicate;
* concatenation is right-nested, with ``()`` as unit and false as zero;
* ``~~R = R``, ``~false = true*``, ``~() = true;true*`` (and back);
* ``R** = R*``, ``()* = ()`` and ``false* = ()``.

The derivative ``der(R)`` is a transition term whose leaves are regexes.
"""

from __future__ import annotations

from collections import deque

from ._intern import Interned
from .errors import StateCapError, UsageError
from .tterm import Ite, Leaf, collect, ite, leaf, lift_binary, lift_unary

DEFAULT_STATE_CAP = 10_000


class Regex(Interned):
    __slots__ = ("nullable", "key", "_der")

    def _setup(self, nullable, key):
        self.nullable = nullable
        self.key = key
        self._der = None

    def __str__(self):
        from .syntax import format_regex

        return format_regex(self)

    def __repr__(self):
        return f"Regex({self})"

    def __lt__(self, other):
        return self.key < other.key


class Pred(Regex):
    """A single letter satisfying ``pred``.  ``Pred(false)`` is the empty
    language."""

    __slots__ = ("pred",)

    def _init(self, pred):
        self.pred = pred
        self._setup(False, (1, pred.key))

    def _fields(self):
        return (self.pred,)


class Eps(Regex):
    __slots__ = ()

    def _init(self):
        self._setup(True, (0,))

    def _fields(self):
        return ()


class Union(Regex):
    __slots__ = ("items",)

    def _init(self, items):
        self.items = items
        self._setup(any(r.nullable for r in items),
                    (6, tuple(r.key for r in items)))

    def _fields(self):
        return (self.items,)


class Inter(Regex):
    __slots__ = ("items",)

    def _init(self, items):
        self.items = items
        self._setup(all(r.nullable for r in items),
                    (5, tuple(r.key for r in items)))

    def _fields(self):
        return (self.items,)


class Concat(Regex):
    __slots__ = ("head", "tail")

    def _init(self, head, tail):
        self.head = head
        self.tail = tail
        self._setup(head.nullable and tail.nullable, (4, head.key, tail.key))

    def _fields(self):
        return (self.head, self.tail)


class Star(Regex):
    __slots__ = ("body",)

    def _init(self, body):
        self.body = body
        self._setup(True, (2, body.key))

    def _fields(self):
        return (self.body,)


class Compl(Regex):
    __slots__ = ("body",)

    def _init(self, body):
        self.body = body
        self._setup(not body.nullable, (3, body.key))

    def _fields(self):
        return (self.body,)


class Fusion(Regex):
    """``R : S`` -- words ``x a y`` with ``x a`` in R and ``a y`` in S."""

    __slots__ = ("left", "right")

    def _init(self, left, right):
        self.left = left
        self.right = right
        self._setup(False, (7, left.key, right.key))

    def _fields(self):
        return (self.left, self.right)


# ---------------------------------------------------------------------------
# smart constructors

EPS = Eps._make()


def pred(p):
    return Pred._make(p)


def bot(algebra):
    return pred(algebra.bot)


def top(algebra):
    """The single-letter regex ``true``."""
    return pred(algebra.top)


def is_bot(r):
    return type(r) is Pred and not r.pred.is_sat


def _is_top_star(r):
    return type(r) is Star and type(r.body) is Pred and r.body.pred.is_top


def _merge(items, cls, combine):
    flat = []
    for r in items:
        if type(r) is cls:
            flat.extend(r.items)
        else:
            flat.append(r)
    preds = [r.pred for r in flat if type(r) is Pred]
    rest = [r for r in flat if type(r) is not Pred]
    if preds:
        p = preds[0]
        for q in preds[1:]:
            p = combine(p, q)
        rest.append(pred(p))
    return rest


def union(*items):
    if not items:
        raise UsageError("union() of nothing needs an algebra; use bot()")
    items = _merge(items, Union, lambda a, b: a | b)
    for r in items:
        if _is_top_star(r):
            return r
    kept = sorted({r for r in items if not is_bot(r)}, key=lambda r: r.key)
    if not kept:
        return items[0]
    if len(kept) == 1:
        return kept[0]
    return Union._make(tuple(kept))


def union_of(algebra, items):
    items = list(items)
    return union(*items) if items else bot(algebra)


def inter(*items):
    if not items:
        raise UsageError("inter() of nothing needs an algebra")
    items = _merge(items, Inter, lambda a, b: a & b)
    for r in items:
        if is_bot(r):
            return r
    kept = sorted({r for r in items if not _is_top_star(r)}, key=lambda r: r.key)
    if not kept:
        return next(r for r in items if _is_top_star(r))
    if len(kept) == 1:
        return kept[0]
    return Inter._make(tuple(kept))


def concat(a, b):
    if is_bot(a):
        return a
    if is_bot(b):
        return b
    if a is EPS:
        return b
    if b is EPS:
        return a
    if type(a) is Concat:
        return concat(a.head, concat(a.tail, b))
    return Concat._make(a, b)


def concat_all(*items):
    out = EPS
    for r in reversed(items):
        out = concat(r, out)
    return out


def star(r):
    if type(r) is Star:
        return r
    if r is EPS or is_bot(r):
        return EPS
    return Star._make(r)


def plus(r):
    return concat(r, star(r))


def compl(r, algebra=None):
    if type(r) is Compl:
        return r.body
    if is_bot(r):
        return star(top(r.pred.algebra))
    if r is EPS:
        if algebra is None:
            raise UsageError("~() needs the algebra")
        return plus(top(algebra))
    if _is_top_star(r):
        return bot(r.body.pred.algebra)
    if (type(r) is Concat and type(r.head) is Pred and r.head.pred.is_top
            and _is_top_star(r.tail) and r.tail.body is r.head):
        return EPS
    return Compl._make(r)


def fusion(a, b, algebra=None):
    if is_bot(a):
        return a
    if is_bot(b):
        return b
    if a is EPS or b is EPS:
        alg = algebra or algebra_of(b if a is EPS else a)
        if alg is None:
            raise UsageError("fusion with () needs the algebra")
        return bot(alg)
    return Fusion._make(a, b)


def algebra_of(r):
    """The algebra of the first predicate found in ``r`` (None for ``()``)."""
    stack = [r]
    while stack:
        x = stack.pop()
        t = type(x)
        if t is Pred:
            return x.pred.algebra
        if t in (Union, Inter):
            stack.extend(x.items)
        elif t is Concat:
            stack.extend((x.head, x.tail))
        elif t in (Star, Compl):
            stack.append(x.body)
        elif t is Fusion:
            stack.extend((x.left, x.right))
    return None


def predicates(r):
    """All predicates occurring in ``r``, in first-visit order."""
    out, seen, stack = [], set(), [r]
    while stack:
        x = stack.pop()
        if x in seen:
            continue
        seen.add(x)
        t = type(x)
        if t is Pred:
            if x.pred not in out:
                out.append(x.pred)
        elif t in (Union, Inter):
            stack.extend(reversed(x.items))
        elif t is Concat:
            stack.extend((x.tail, x.head))
        elif t in (Star, Compl):
            stack.append(x.body)
        elif t is Fusion:
            stack.extend((x.right, x.left))
    return out


def nullable(r):
    return r.nullable


# ---------------------------------------------------------------------------
# derivatives


def der(r, algebra=None):
    """Symbolic derivative of ``r``: a clean transition term over regexes."""
    if r is EPS:
        if algebra is None:
            raise UsageError("der(()) needs the algebra")
        return leaf(bot(algebra))
    if r._der is not None:
        return r._der
    if algebra is None:
        algebra = algebra_of(r)
        if algebra is None:
            raise UsageError("der(()) needs the algebra")
    d = _der(r, algebra)
    r._der = d
    return d


def _der(r, alg):
    t = type(r)
    bot_r = bot(alg)
    if t is Eps:
        return leaf(bot_r)
    if t is Pred:
        return ite(r.pred, leaf(EPS), leaf(bot_r))
    if t is Star:
        return lift_unary(lambda x: concat(x, r), der(r.body, alg))
    if t is Concat:
        left = lift_unary(lambda x: concat(x, r.tail), der(r.head, alg))
        if r.head.nullable:
            return lift_binary(union, left, der(r.tail, alg))
        return left
    if t is Union:
        out = der(r.items[0], alg)
        for x in r.items[1:]:
            out = lift_binary(union, out, der(x, alg))
        return out
    if t is Inter:
        out = der(r.items[0], alg)
        for x in r.items[1:]:
            out = lift_binary(inter, out, der(x, alg))
        return out
    if t is Compl:
        return lift_unary(lambda x: compl(x, alg), der(r.body, alg))
    if t is Fusion:
        step = lift_unary(lambda x: fusion(x, r.right, alg), der(r.left, alg))
        guard = one(r.left, alg)
        if not guard.is_sat:
            return step
        return lift_binary(union, if_then_term(guard, der(r.right, alg), bot_r),
                           step)
    raise TypeError(r)


def if_then_term(cond, f, bot_value):
    return ite(cond, f, leaf(bot_value))


def one(r, algebra=None):
    """``One(R)``: the letters ``a`` with ``a`` in L(R)."""
    d = der(r, algebra)
    alg = algebra or algebra_of(r)

    def go(t, path):
        if type(t) is Leaf:
            return path if t.value.nullable else alg.bot
        return go(t.then, path & t.cond) | go(t.else_, path & ~t.cond)

    return go(d, alg.top)


def matches(r, word, algebra=None):
    """Is the finite word in L(R)?  Iterates ``leaf_of(der(.), a)``."""
    from .tterm import leaf_of

    alg = algebra or algebra_of(r)
    for a in word:
        if alg is None:
            return False
        r = leaf_of(der(r, alg), a)
    return r.nullable


# ---------------------------------------------------------------------------
# DFA by derivative closure


class Dfa:
    """Deterministic symbolic automaton whose states are regexes.

    ``delta[q]`` is a clean transition term over states.  The empty regex is
    an implicit dead sink: it appears as a leaf but is only listed among the
    states when it is the initial regex."""

    def __init__(self, algebra, initial, states, delta):
        self.algebra = algebra
        self.initial = initial
        self.states = states
        self.delta = delta
        self.accepting = [q for q in states if q.nullable]

    def index(self, q):
        return self.states.index(q)

    def edges(self):
        """``[(source, guard, target)]`` with one guard per distinct target."""
        from .tterm import paths

        out = []
        for q in self.states:
            guards = {}
            for cond, tgt in paths(self.delta[q]):
                if is_bot(tgt) and tgt is not self.initial:
                    continue
                c = self.algebra.top if cond is None else cond
                guards[tgt] = guards[tgt] | c if tgt in guards else c
            for tgt, g in guards.items():
                out.append((q, g, tgt))
        return out

    def alive(self, q=None):
        q = self.initial if q is None else q
        return _alive_set(self)[q]


def _alive_set(dfa):
    cached = getattr(dfa, "_alive", None)
    if cached is not None:
        return cached
    rev = {q: set() for q in dfa.states}
    for q in dfa.states:
        for tgt in collect(dfa.delta[q])[1]:
            if tgt in rev:
                rev[tgt].add(q)
    live = {q for q in dfa.states if q.nullable}
    work = list(live)
    while work:
        q = work.pop()
        for p in rev[q]:
            if p not in live:
                live.add(p)
                work.append(p)
    res = {q: q in live for q in dfa.states}
    dfa._alive = res
    return res


def build_dfa(r, algebra=None, cap=DEFAULT_STATE_CAP):
    alg = algebra or algebra_of(r)
    if alg is None:
        raise UsageError("build_dfa(()) needs the algebra")
    states, delta = [r], {}
    seen = {r}
    work = deque([r])
    while work:
        q = work.popleft()
        d = der(q, alg)
        delta[q] = d
        for tgt in collect(d)[1]:
            if tgt not in seen and not is_bot(tgt):
                if len(states) >= cap:
                    raise StateCapError("regex DFA", cap)
                seen.add(tgt)
                states.append(tgt)
                work.append(tgt)
    return Dfa(alg, r, states, delta)


_alive_cache = {}


def alive(r, algebra=None):
    """Does some nullable regex follow ``r`` by derivatives?"""
    if r.nullable:
        return True
    if is_bot(r):
        return False
    res = _alive_cache.get(r)
    if res is None:
        res = build_dfa(r, algebra).alive()
        _alive_cache[r] = res
    return res


__all__ = [
    "Regex", "Pred", "Eps", "Union", "Inter", "Concat", "Star", "Compl",
    "Fusion", "EPS", "pred", "bot", "top", "union", "union_of", "inter",
    "concat", "concat_all", "star", "plus", "compl", "fusion", "nullable",
    "der", "one", "matches", "Dfa", "build_dfa", "alive", "predicates",
    "algebra_of", "is_bot", "Ite", "Leaf",
]
