"""Transition terms: if-then-else trees over predicates with arbitrary leaves.

A term is either ``Leaf(value)`` or ``Ite(cond, then, else_)``.  Nodes are
hash-consed, so two terms are structurally equal iff they are the same object.
All constructors in this module return *clean* terms (every branch is reachable
under a satisfiable path condition) whenever their inputs are clean.

The leaf values of the terms built here are themselves hash-consed or
immutable (regexes, formulas, frozensets), which keeps leaf operations cheap.
"""

from __future__ import annotations

from ._intern import Interned
from .errors import UsageError


class Term(Interned):
    __slots__ = ()

    def __repr__(self):
        return f"Term({format_term(self)})"

    def __str__(self):
        return format_term(self)


class Leaf(Term):
    __slots__ = ("value",)

    def _init(self, value):
        self.value = value

    def _fields(self):
        return (self.value,)


class Ite(Term):
    __slots__ = ("cond", "then", "else_")

    def _init(self, cond, then, else_):
        self.cond = cond
        self.then = then
        self.else_ = else_

    def _fields(self):
        return (self.cond, self.then, self.else_)


def leaf(value):
    return Leaf._make(value)


def ite(cond, then, else_):
    """Smart constructor.

    Besides trivial conditions it applies condition elimination
    ``Ite(a, f, f) = f`` and the two flattening rules
    ``Ite(a, Ite(b, f, g), g) = Ite(a & b, f, g)`` and
    ``Ite(a, f, Ite(b, f, g)) = Ite(a | b, f, g)``.
    """
    if then is else_:
        return then
    if not cond.is_sat:
        return else_
    if cond.is_top:
        return then
    if type(then) is Ite and then.else_ is else_:
        return ite(cond & then.cond, then.then, else_)
    if type(else_) is Ite and else_.then is then:
        return ite(cond | else_.cond, then, else_.else_)
    return Ite._make(cond, then, else_)


def if_then(cond, f, bot):
    """``Ite(cond, f, Leaf(bot))``; ``f`` may be a term or a plain leaf value."""
    if not isinstance(f, Term):
        f = leaf(f)
    return ite(cond, f, leaf(bot))


def leaf_of(f, letter):
    """Evaluate ``f`` on a concrete letter."""
    while type(f) is Ite:
        f = f.then if f.cond.algebra.denotes(f.cond, letter) else f.else_
    return f.value


def _and(path, cond):
    return cond if path is None else path & cond


def lift_unary(op, f, memo=None):
    """Apply ``op`` to every leaf, keeping the tree shape."""
    if memo is None:
        memo = {}

    def go(t):
        r = memo.get(t)
        if r is None:
            if type(t) is Leaf:
                r = leaf(op(t.value))
            else:
                r = ite(t.cond, go(t.then), go(t.else_))
            memo[t] = r
        return r

    return go(f)


def lift_binary(op, f, g):
    """Pointwise ``op`` of two terms, cleaned on the fly.

    The split follows the condition of the left operand first.  The path
    condition reaching each node is threaded through the recursion and a
    branch is dropped as soon as it becomes unsatisfiable.
    """
    memo = {}

    def go(f, g, path):
        key = (f, g, path)
        r = memo.get(key)
        if r is not None:
            return r
        if type(f) is Leaf and type(g) is Leaf:
            r = leaf(op(f.value, g.value))
        else:
            if type(f) is Ite:
                cond = f.cond
                ft, fe = f.then, f.else_
                if type(g) is Ite and g.cond == cond:
                    gt, ge = g.then, g.else_
                else:
                    gt = ge = g
            else:
                cond = g.cond
                ft = fe = f
                gt, ge = g.then, g.else_
            pt = _and(path, cond)
            if not pt.is_sat:
                r = go(fe, ge, path)
            else:
                pe = _and(path, ~cond)
                if not pe.is_sat:
                    r = go(ft, gt, path)
                else:
                    r = ite(cond, go(ft, gt, pt), go(fe, ge, pe))
        memo[key] = r
        return r

    return go(f, g, None)


def restrict(f, beta):
    """Clean ``f`` under the assumption ``beta``.

    ``restrict(Ite(a, f, g), b)`` is ``restrict(g, b)`` when ``b & a`` is
    unsatisfiable, ``restrict(f, b)`` when ``b & ~a`` is, and otherwise
    ``Ite(a, restrict(f, b & a), restrict(g, b & ~a))``.
    """
    if type(f) is Leaf:
        return f
    pa = beta & f.cond
    if not pa.is_sat:
        return restrict(f.else_, beta)
    pn = beta & ~f.cond
    if not pn.is_sat:
        return restrict(f.then, beta)
    return ite(f.cond, restrict(f.then, pa), restrict(f.else_, pn))


def clean(f):
    if type(f) is Leaf:
        return f
    return restrict(f, f.cond.algebra.top)


def is_clean(f, path=None):
    if type(f) is Leaf:
        return True
    pt, pe = _and(path, f.cond), _and(path, ~f.cond)
    return (pt.is_sat and pe.is_sat
            and is_clean(f.then, pt) and is_clean(f.else_, pe))


def paths(f):
    """``[(path_condition, leaf_value), ...]`` for every leaf, left to right.

    The path condition of a leaf-only term is ``None`` (meaning true)."""
    out = []

    def go(t, path):
        if type(t) is Leaf:
            out.append((path, t.value))
        else:
            go(t.then, _and(path, t.cond))
            go(t.else_, _and(path, ~t.cond))

    go(f, None)
    return out


def collect(f):
    """``(conditions, leaves)``, each listed in first-visit order."""
    conds, leaves, seen = [], [], set()

    def go(t):
        if t in seen:
            return
        seen.add(t)
        if type(t) is Leaf:
            if t.value not in leaves:
                leaves.append(t.value)
        else:
            if t.cond not in conds:
                conds.append(t.cond)
            go(t.then)
            go(t.else_)

    go(f)
    return conds, leaves


def conditions(f):
    return collect(f)[0]


def leaves(f):
    return collect(f)[1]


def func_equiv(f, g, leaf_eq=None):
    """Do ``f`` and ``g`` agree on every letter?

    Traverses both terms together and only compares leaves whose joint path
    condition is satisfiable."""
    if leaf_eq is None:
        def leaf_eq(x, y):
            return x == y

    def go(f, g, path):
        if type(f) is Leaf and type(g) is Leaf:
            return leaf_eq(f.value, g.value)
        if type(f) is Ite:
            cond, ft, fe, gt, ge = f.cond, f.then, f.else_, g, g
        else:
            cond, ft, fe, gt, ge = g.cond, f, f, g.then, g.else_
        pt, pe = _and(path, cond), _and(path, ~cond)
        return ((not pt.is_sat or go(ft, gt, pt))
                and (not pe.is_sat or go(fe, ge, pe)))

    return go(f, g, None)


def size(f):
    seen = set()

    def go(t):
        if t in seen:
            return 0
        seen.add(t)
        if type(t) is Leaf:
            return 1
        return 1 + go(t.then) + go(t.else_)

    return go(f)


# ---------------------------------------------------------------------------
# DNF leaves: frozenset of frozensets of states.  The empty set is false and
# the set holding only the empty conjunction is true.

DNF_FALSE = frozenset()
DNF_TRUE = frozenset([frozenset()])


def dnf_atom(q):
    return frozenset([frozenset([q])])


def dnf_or(a, b):
    return a | b


def dnf_and(a, b):
    if not a or not b:
        return DNF_FALSE
    if a == DNF_TRUE:
        return b
    if b == DNF_TRUE:
        return a
    return frozenset(x | y for x in a for y in b)


def min_models(a):
    """Drop every member that is a proper superset of another member."""
    return frozenset(x for x in a if not any(y < x for y in a))


def to_inf(f, dnf_of):
    """Map each leaf to DNF with ``dnf_of``; the tree shape is kept."""
    return lift_unary(dnf_of, f)


# ---------------------------------------------------------------------------
# rendering


def format_term(f, fmt_leaf=str, fmt_pred=str):
    """``if <pred> then <t> else <t>`` with leaves printed as ``(leaf)``."""
    if type(f) is Leaf:
        return "(" + fmt_leaf(f.value) + ")"
    return (f"if {fmt_pred(f.cond)} then {format_term(f.then, fmt_leaf, fmt_pred)}"
            f" else {format_term(f.else_, fmt_leaf, fmt_pred)}")


def check_term(f):
    if not isinstance(f, Term):
        raise UsageError(f"{f!r} is not a transition term")
    return f
