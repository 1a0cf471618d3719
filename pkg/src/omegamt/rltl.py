"""Regular LTL formulas, their derivatives and the derived automata.

Formulas are hash-consed.  Smart constructors collapse Boolean combinations
of predicates into a single :class:`Pred`, flatten and sort conjunctions and
disjunctions, and apply the rewrites

* ``{R} <>-> f = false`` and ``{R} []-> f = true`` when ``R`` is ``()`` or
  empty,
* ``cl{false} = false``, ``ncl{false} = true``, and for nullable ``R``
  ``cl{R} = true`` and ``ncl{R} = false``.

``deriv(f)`` returns a clean transition term whose leaves are formulas.
"""

from __future__ import annotations

from collections import deque

from . import ere
from ._intern import Interned
from .errors import PositiveFragmentError, StateCapError, UsageError
from .tterm import (DNF_FALSE, DNF_TRUE, dnf_and, dnf_atom, ite, leaf,
                    lift_binary, lift_unary)

DEFAULT_STATE_CAP = 10_000


class Formula(Interned):
    __slots__ = ("key", "_der")

    def _setup(self, key):
        self.key = key
        self._der = None

    def __str__(self):
        from .syntax import format_formula

        return format_formula(self)

    def __repr__(self):
        return f"Formula({self})"

    def __lt__(self, other):
        return self.key < other.key

    # operator sugar
    def __and__(self, other):
        return conj(self, other)

    def __or__(self, other):
        return disj(self, other)

    def __invert__(self):
        return neg(self)


class _Const(Formula):
    __slots__ = ("value",)

    def _init(self, value):
        self.value = value
        self._setup((0, 0 if value else 1))

    def _fields(self):
        return (self.value,)


TRUE = _Const._make(True)
FALSE = _Const._make(False)


class Pred(Formula):
    __slots__ = ("pred",)

    def _init(self, pred):
        self.pred = pred
        self._setup((1, pred.key))

    def _fields(self):
        return (self.pred,)


class Not(Formula):
    __slots__ = ("body",)

    def _init(self, body):
        self.body = body
        self._setup((2, body.key))

    def _fields(self):
        return (self.body,)


class Next(Formula):
    __slots__ = ("body",)

    def _init(self, body):
        self.body = body
        self._setup((3, body.key))

    def _fields(self):
        return (self.body,)


class _Binary(Formula):
    __slots__ = ("left", "right")
    RANK = None

    def _init(self, left, right):
        self.left = left
        self.right = right
        self._setup((self.RANK, left.key, right.key))

    def _fields(self):
        return (self.left, self.right)


class Release(_Binary):
    __slots__ = ()
    RANK = 4


class Until(_Binary):
    __slots__ = ()
    RANK = 5


class _Suffix(Formula):
    __slots__ = ("regex", "body")
    RANK = None

    def _init(self, regex, body):
        self.regex = regex
        self.body = body
        self._setup((self.RANK, regex.key, body.key))

    def _fields(self):
        return (self.regex, self.body)


class ExistsSuffix(_Suffix):
    """``{R} <>-> f``: some prefix ``u a`` matches R and ``f`` holds from
    ``a`` on (the match overlaps the first letter of the suffix)."""

    __slots__ = ()
    RANK = 6


class ForallSuffix(_Suffix):
    """``{R} []-> f``: the dual of :class:`ExistsSuffix`."""

    __slots__ = ()
    RANK = 7


class _Closure(Formula):
    __slots__ = ("regex",)
    RANK = None

    def _init(self, regex):
        self.regex = regex
        self._setup((self.RANK, regex.key))

    def _fields(self):
        return (self.regex,)


class WeakClosure(_Closure):
    __slots__ = ()
    RANK = 8


class NegWeakClosure(_Closure):
    __slots__ = ()
    RANK = 9


class OmegaClosure(_Closure):
    __slots__ = ()
    RANK = 10


class _Nary(Formula):
    __slots__ = ("items",)
    RANK = None

    def _init(self, items):
        self.items = items
        self._setup((self.RANK, tuple(f.key for f in items)))

    def _fields(self):
        return (self.items,)


class And(_Nary):
    __slots__ = ()
    RANK = 11


class Or(_Nary):
    __slots__ = ()
    RANK = 12


# ---------------------------------------------------------------------------
# smart constructors


def pred(p):
    if not p.is_sat:
        return FALSE
    if p.is_top:
        return TRUE
    return Pred._make(p)


def neg(f):
    t = type(f)
    if f is TRUE:
        return FALSE
    if f is FALSE:
        return TRUE
    if t is Pred:
        return pred(~f.pred)
    if t is Not:
        return f.body
    return Not._make(f)


def _nary(items, cls, zero, unit, combine):
    flat = []
    for f in items:
        if type(f) is cls:
            flat.extend(f.items)
        else:
            flat.append(f)
    p = None
    rest = set()
    for f in flat:
        if f is zero:
            return zero
        if f is unit:
            continue
        if type(f) is Pred:
            p = f.pred if p is None else combine(p, f.pred)
        else:
            rest.add(f)
    if p is not None:
        pf = pred(p)
        if pf is zero:
            return zero
        if pf is not unit:
            rest.add(pf)
    if not rest:
        return unit
    if len(rest) == 1:
        return next(iter(rest))
    return cls._make(tuple(sorted(rest, key=lambda f: f.key)))


def conj(*items):
    return _nary(items, And, FALSE, TRUE, lambda a, b: a & b)


def disj(*items):
    return _nary(items, Or, TRUE, FALSE, lambda a, b: a | b)


def implies(a, b):
    return disj(neg(a), b)


def next_(f):
    return Next._make(f)


def until(a, b):
    return Until._make(a, b)


def release(a, b):
    return Release._make(a, b)


def eventually(f):
    return until(TRUE, f)


def always(f):
    return release(FALSE, f)


def _trivial_regex(r):
    return r is ere.EPS or ere.is_bot(r)


def exists_suffix(r, f):
    if _trivial_regex(r):
        return FALSE
    return ExistsSuffix._make(r, f)


def forall_suffix(r, f):
    if _trivial_regex(r):
        return TRUE
    return ForallSuffix._make(r, f)


def closure(r):
    if ere.is_bot(r):
        return FALSE
    if r.nullable:
        return TRUE
    return WeakClosure._make(r)


def neg_closure(r):
    if ere.is_bot(r):
        return TRUE
    if r.nullable:
        return FALSE
    return NegWeakClosure._make(r)


def omega(r):
    return OmegaClosure._make(r)


# ---------------------------------------------------------------------------
# traversal helpers


def children(f):
    t = type(f)
    if t in (And, Or):
        return f.items
    if t in (Not, Next):
        return (f.body,)
    if isinstance(f, _Binary):
        return (f.left, f.right)
    if isinstance(f, _Suffix):
        return (f.body,)
    return ()


def subformulas(f):
    out, seen, stack = [], set(), [f]
    while stack:
        g = stack.pop()
        if g in seen:
            continue
        seen.add(g)
        out.append(g)
        stack.extend(children(g))
    return out


def regexes(f):
    out = []
    for g in subformulas(f):
        if isinstance(g, (_Suffix, _Closure)) and g.regex not in out:
            out.append(g.regex)
    return out


def predicates(f):
    out = []
    for g in subformulas(f):
        ps = []
        if type(g) is Pred:
            ps = [g.pred]
        elif isinstance(g, (_Suffix, _Closure)):
            ps = ere.predicates(g.regex)
        for p in ps:
            if p not in out:
                out.append(p)
    return out


def is_positive(f):
    return not any(type(g) is Not for g in subformulas(f))


def to_positive(f):
    """Push negations down to predicates using the standard dualities.

    Raises :class:`PositiveFragmentError` on a negated omega-closure."""
    memo = {}

    def pos(g):
        r = memo.get((g, True))
        if r is not None:
            return r
        t = type(g)
        if t is Not:
            r = negate(g.body)
        elif t is And:
            r = conj(*map(pos, g.items))
        elif t is Or:
            r = disj(*map(pos, g.items))
        elif t is Next:
            r = next_(pos(g.body))
        elif t is Until:
            r = until(pos(g.left), pos(g.right))
        elif t is Release:
            r = release(pos(g.left), pos(g.right))
        elif t is ExistsSuffix:
            r = exists_suffix(g.regex, pos(g.body))
        elif t is ForallSuffix:
            r = forall_suffix(g.regex, pos(g.body))
        else:
            r = g
        memo[(g, True)] = r
        return r

    def negate(g):
        r = memo.get((g, False))
        if r is not None:
            return r
        t = type(g)
        if g is TRUE or g is FALSE or t is Pred:
            r = neg(g)
        elif t is Not:
            r = pos(g.body)
        elif t is And:
            r = disj(*map(negate, g.items))
        elif t is Or:
            r = conj(*map(negate, g.items))
        elif t is Next:
            r = next_(negate(g.body))
        elif t is Until:
            r = release(negate(g.left), negate(g.right))
        elif t is Release:
            r = until(negate(g.left), negate(g.right))
        elif t is ExistsSuffix:
            r = forall_suffix(g.regex, negate(g.body))
        elif t is ForallSuffix:
            r = exists_suffix(g.regex, negate(g.body))
        elif t is WeakClosure:
            r = neg_closure(g.regex)
        elif t is NegWeakClosure:
            r = closure(g.regex)
        elif t is OmegaClosure:
            raise PositiveFragmentError(
                "the negation of an omega-closure has no positive form")
        else:
            raise TypeError(g)
        memo[(g, False)] = r
        return r

    return pos(f)


# ---------------------------------------------------------------------------
# derivatives


def _if_then(cond, f):
    return ite(cond, leaf(f), leaf(FALSE))


def _or(f, g):
    return lift_binary(disj, f, g)


def _and(f, g):
    return lift_binary(conj, f, g)


def deriv(f):
    """Symbolic derivative: a clean transition term over formulas."""
    if f._der is None:
        f._der = _deriv(f)
    return f._der


def _fold(op, terms):
    out = terms[0]
    for t in terms[1:]:
        out = op(out, t)
    return out


def _deriv(f):
    t = type(f)
    if f is TRUE or f is FALSE:
        return leaf(f)
    if t is Pred:
        return _if_then(f.pred, TRUE)
    if t is And:
        return _fold(_and, [deriv(g) for g in f.items])
    if t is Or:
        return _fold(_or, [deriv(g) for g in f.items])
    if t is Not:
        return lift_unary(neg, deriv(f.body))
    if t is Next:
        return leaf(f.body)
    if t is Until:
        return _or(deriv(f.right), _and(deriv(f.left), leaf(f)))
    if t is Release:
        return _and(deriv(f.right), _or(deriv(f.left), leaf(f)))
    if t is ExistsSuffix:
        r, body = f.regex, f.body
        now = deriv(conj(pred(ere.one(r)), body))
        later = lift_unary(lambda x: exists_suffix(x, body), ere.der(r))
        return _or(now, later)
    if t is ForallSuffix:
        r, body = f.regex, f.body
        now = deriv(disj(pred(~ere.one(r)), body))
        later = lift_unary(lambda x: forall_suffix(x, body), ere.der(r))
        return _and(now, later)
    if t is WeakClosure:
        return lift_unary(closure, ere.der(f.regex))
    if t is NegWeakClosure:
        return lift_unary(neg_closure, ere.der(f.regex))
    if t is OmegaClosure:
        return deriv(exists_suffix(f.regex, next_(f)))
    raise TypeError(f)


def is_accepting(f):
    """Acceptance of a state of the derived automaton."""
    t = type(f)
    if f is TRUE or t in (Release, ForallSuffix, OmegaClosure):
        return True
    if t is WeakClosure:
        return ere.alive(f.regex)
    if t is NegWeakClosure:
        return not ere.alive(f.regex)
    return False


# ---------------------------------------------------------------------------
# automaton construction

_dnf_memo = {}


def to_dnf(f):
    """DNF of a positive Boolean combination; non-Boolean parts are atoms."""
    r = _dnf_memo.get(f)
    if r is not None:
        return r
    t = type(f)
    if f is TRUE:
        r = DNF_TRUE
    elif f is FALSE:
        r = DNF_FALSE
    elif t is And:
        r = DNF_TRUE
        for g in f.items:
            r = dnf_and(r, to_dnf(g))
    elif t is Or:
        r = DNF_FALSE
        for g in f.items:
            r = r | to_dnf(g)
    elif t is Not:
        raise UsageError(f"formula is not positive: {f}")
    else:
        r = dnf_atom(f)
    _dnf_memo[f] = r
    return r


def _atoms(dnf):
    return {q for x in dnf for q in x}


def build_aba(f, algebra=None, cap=DEFAULT_STATE_CAP):
    """The alternating Buchi automaton M[f] of a positive formula.

    States are the non-Boolean formulas reachable through derivative leaves;
    the initial condition is the DNF of ``f`` itself.  When ``true`` is
    reachable it is listed as an accepting state with a true self-loop."""
    from .automata import Aba

    if not is_positive(f):
        raise UsageError("build_aba needs a positive formula; use to_positive")
    if algebra is None:
        ps = predicates(f)
        if not ps:
            raise UsageError("cannot infer the algebra of a predicate-free "
                             "formula; pass algebra=")
        algebra = ps[0].algebra
    initial = to_dnf(f)
    states = sorted(_atoms(initial), key=lambda q: q.key)
    seen = set(states)
    delta = {}
    has_top = DNF_TRUE <= initial or frozenset() in initial
    work = deque(states)
    while work:
        q = work.popleft()
        term = lift_unary(to_dnf, deriv(q))
        delta[q] = term
        new = set()
        from .tterm import collect

        for dnf in collect(term)[1]:
            if frozenset() in dnf:
                has_top = True
            new |= _atoms(dnf) - seen
        for s in sorted(new, key=lambda g: g.key):
            if len(seen) >= cap:
                raise StateCapError("alternating automaton", cap)
            seen.add(s)
            states.append(s)
            work.append(s)
    if has_top:
        states.append(TRUE)
        delta[TRUE] = leaf(DNF_TRUE)
    accepting = frozenset(q for q in states if is_accepting(q))
    return Aba(algebra, states, initial, delta, accepting,
               labels={q: str(q) for q in states})
