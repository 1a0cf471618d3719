"""Concrete syntax shared by the library and the command line.

Predicates
    prop: atom names, ``!``, ``&``, ``|``, parentheses, ``true``, ``false``;
    int: ``[x<c]``, ``[x>c]``, ``[x%m==r]`` (also ``<=``, ``>=``, ``==``);
    anchor: ``[#]`` in addition to the base syntax.

Regexes (inside ``{ }``)
    ``;`` concatenation, ``:`` fusion, ``|`` union, ``&&`` (or ``&``)
    intersection, postfix ``*`` and ``+``, prefix ``~`` complement, ``()`` for
    the empty word.  Precedence, tightest first: ``~``, then ``* +``, then
    ``; :``, then ``&&``, then ``|``.

Formulas
    ``X``, ``F``, ``G`` and ``!`` prefixes; ``&``, ``|``, ``->``; ``U`` and
    ``R`` (right-associative, loosest); ``{R} <>-> f``, ``{R} []-> f``,
    ``cl{R}``, ``ncl{R}``, ``omega{R}``; ``true``, ``false``.

Words
    ``u;v`` for ``u v^omega`` with comma-separated letters: ``{p q}`` or
    ``{}`` for propositional letters, integers, and ``#`` for the anchor.
"""

from __future__ import annotations

import re

from . import ere, rltl
from .algebra import ANCHOR, AnchorAlgebra, IntAlgebra, PropAlgebra
from .errors import ParseError, UsageError
from .words import UPWord

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<op><>->|\[\]->|->|&&|\|\||[&|!~;:*+(){},])
  | (?P<bracket>\[[^\]]*\])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<int>-?\d+)
""", re.VERBOSE)


class _Lexer:
    def __init__(self, text):
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError("unexpected character", text, pos)
            kind = m.lastgroup
            if kind != "ws":
                val = m.group(kind)
                if val == "||":
                    val = "|"
                self.toks.append((kind, val, pos))
            pos = m.end()
        self.toks.append(("eof", "", len(text)))
        self.i = 0

    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def accept(self, val):
        if self.peek()[1] == val and self.peek()[0] != "eof":
            self.i += 1
            return True
        return False

    def expect(self, val):
        t = self.peek()
        if t[1] != val or t[0] == "eof":
            self.fail(f"expected {val!r}")
        self.i += 1
        return t

    def fail(self, msg):
        raise ParseError(msg, self.text, self.peek()[2])

    def done(self):
        if self.peek()[0] != "eof":
            self.fail("unexpected trailing input")


_BRACKET = re.compile(r"\[\s*([A-Za-z_]\w*)\s*(%\s*(\d+)\s*==|<=|>=|==|<|>)\s*(-?\d+)\s*\]\Z")


def _atom(alg, kind, val, lx):
    base = alg.base if isinstance(alg, AnchorAlgebra) else alg
    if kind == "bracket":
        if val.replace(" ", "") == "[#]":
            if not isinstance(alg, AnchorAlgebra):
                lx.fail("[#] needs an anchored algebra")
            return alg.anchor
        m = _BRACKET.match(val)
        if not m or not isinstance(base, IntAlgebra):
            lx.fail(f"bad predicate {val}")
        if m.group(1) != base.var:
            lx.fail(f"unknown variable {m.group(1)!r}")
        op, c = m.group(2), int(m.group(4))
        if op.startswith("%"):
            p = base.mod(int(m.group(3)), c)
        else:
            p = {"<": base.lt, ">": base.gt, "<=": base.le, ">=": base.ge,
                 "==": base.eq}[op](c)
    elif kind == "ident":
        if not isinstance(base, PropAlgebra):
            lx.fail(f"atom {val!r} needs a propositional algebra")
        if val not in base.atoms:
            lx.fail(f"unknown atom {val!r}")
        p = base.atom(val)
    else:
        lx.fail("expected a predicate")
    return alg.embed(p) if isinstance(alg, AnchorAlgebra) else p


# ---------------------------------------------------------------------------
# predicates


def _p_or(lx, alg):
    p = _p_and(lx, alg)
    while lx.accept("|"):
        p = p | _p_and(lx, alg)
    return p


def _p_and(lx, alg):
    p = _p_not(lx, alg)
    while lx.accept("&"):
        p = p & _p_not(lx, alg)
    return p


def _p_not(lx, alg):
    if lx.accept("!"):
        return ~_p_not(lx, alg)
    if lx.accept("("):
        p = _p_or(lx, alg)
        lx.expect(")")
        return p
    kind, val, _ = lx.peek()
    if kind == "ident" and val in ("true", "false"):
        lx.next()
        return alg.top if val == "true" else alg.bot
    lx.next()
    return _atom(alg, kind, val, lx)


def parse_predicate(text, algebra):
    lx = _Lexer(text)
    p = _p_or(lx, algebra)
    lx.done()
    return p


# ---------------------------------------------------------------------------
# regexes


def _r_union(lx, alg):
    r = _r_inter(lx, alg)
    while lx.accept("|"):
        r = ere.union(r, _r_inter(lx, alg))
    return r


def _r_inter(lx, alg):
    r = _r_concat(lx, alg)
    while lx.peek()[1] in ("&&", "&"):
        lx.next()
        r = ere.inter(r, _r_concat(lx, alg))
    return r


def _r_concat(lx, alg):
    r = _r_postfix(lx, alg)
    while lx.peek()[1] in (";", ":"):
        op = lx.next()[1]
        rhs = _r_postfix(lx, alg)
        r = ere.concat(r, rhs) if op == ";" else ere.fusion(r, rhs, alg)
    return r


def _r_postfix(lx, alg):
    r = _r_prefix(lx, alg)
    while lx.peek()[1] in ("*", "+"):
        r = ere.star(r) if lx.next()[1] == "*" else ere.plus(r)
    return r


def _r_prefix(lx, alg):
    if lx.accept("~"):
        return ere.compl(_r_prefix(lx, alg), alg)
    if lx.peek()[1] == "!":
        lx.next()
        r = _r_prefix(lx, alg)
        if type(r) is not ere.Pred:
            lx.fail("'!' applies to predicates only; use '~' for complement")
        return ere.pred(~r.pred)
    if lx.accept("("):
        if lx.accept(")"):
            return ere.EPS
        r = _r_union(lx, alg)
        lx.expect(")")
        return r
    kind, val, _ = lx.peek()
    if kind == "ident" and val in ("true", "false"):
        lx.next()
        return ere.pred(alg.top if val == "true" else alg.bot)
    lx.next()
    return ere.pred(_atom(alg, kind, val, lx))


def parse_regex(text, algebra):
    """Parse a regex; surrounding braces are optional."""
    lx = _Lexer(text)
    braced = lx.accept("{")
    r = _r_union(lx, algebra)
    if braced:
        lx.expect("}")
    lx.done()
    return r


# ---------------------------------------------------------------------------
# formulas


def _f_temporal(lx, alg):
    f = _f_imp(lx, alg)
    kind, val, _ = lx.peek()
    if kind == "ident" and val in ("U", "R"):
        lx.next()
        g = _f_temporal(lx, alg)
        return rltl.until(f, g) if val == "U" else rltl.release(f, g)
    return f


def _f_imp(lx, alg):
    f = _f_or(lx, alg)
    if lx.accept("->"):
        return rltl.implies(f, _f_imp(lx, alg))
    return f


def _f_or(lx, alg):
    f = _f_and(lx, alg)
    while lx.accept("|"):
        f = rltl.disj(f, _f_and(lx, alg))
    return f


def _f_and(lx, alg):
    f = _f_unary(lx, alg)
    while lx.accept("&"):
        f = rltl.conj(f, _f_unary(lx, alg))
    return f


def _braced_regex(lx, alg):
    lx.expect("{")
    r = _r_union(lx, alg)
    lx.expect("}")
    return r


def _f_unary(lx, alg):
    kind, val, _ = lx.peek()
    if val == "!":
        lx.next()
        return rltl.neg(_f_unary(lx, alg))
    if kind == "ident" and val in ("X", "F", "G"):
        lx.next()
        f = _f_unary(lx, alg)
        return {"X": rltl.next_, "F": rltl.eventually, "G": rltl.always}[val](f)
    if kind == "ident" and val in ("cl", "ncl", "omega") and lx.peek(1)[1] == "{":
        lx.next()
        r = _braced_regex(lx, alg)
        return {"cl": rltl.closure, "ncl": rltl.neg_closure,
                "omega": rltl.omega}[val](r)
    if val == "{":
        r = _braced_regex(lx, alg)
        op = lx.next()[1]
        if op not in ("<>->", "[]->"):
            lx.i -= 1
            lx.fail("expected '<>->' or '[]->' after a braced regex")
        f = _f_unary(lx, alg)
        return (rltl.exists_suffix if op == "<>->" else rltl.forall_suffix)(r, f)
    if val == "(":
        lx.next()
        f = _f_temporal(lx, alg)
        lx.expect(")")
        return f
    if kind == "ident" and val in ("true", "false"):
        lx.next()
        return rltl.TRUE if val == "true" else rltl.FALSE
    lx.next()
    return rltl.pred(_atom(alg, kind, val, lx))


def parse_formula(text, algebra):
    lx = _Lexer(text)
    f = _f_temporal(lx, algebra)
    lx.done()
    return f


# ---------------------------------------------------------------------------
# words


def parse_letter(text, algebra):
    t = text.strip()
    if t == "#":
        if not isinstance(algebra, AnchorAlgebra):
            raise ParseError(f"'#' needs an anchored algebra: {text!r}")
        return ANCHOR
    base = algebra.base if isinstance(algebra, AnchorAlgebra) else algebra
    if isinstance(base, PropAlgebra):
        if not (t.startswith("{") and t.endswith("}")):
            raise ParseError(f"propositional letters look like {{p q}}: {text!r}")
        names = t[1:-1].split()
        for n in names:
            if n not in base.atoms:
                raise ParseError(f"unknown atom {n!r} in letter {text!r}")
        return frozenset(names)
    try:
        return int(t)
    except ValueError:
        raise ParseError(f"integer letter expected: {text!r}") from None


def parse_word(text, algebra):
    """``u;v`` -> :class:`UPWord`.  ``u`` may be empty, ``v`` may not."""
    if text.count(";") != 1:
        raise ParseError(f"a UP word is written u;v: {text!r}")
    u, v = text.split(";")

    def letters(s):
        s = s.strip()
        if not s:
            return ()
        return tuple(parse_letter(x, algebra) for x in s.split(","))

    v_letters = letters(v)
    if not v_letters:
        raise ParseError(f"the periodic part must be nonempty: {text!r}")
    return UPWord(letters(u), v_letters)


def format_word(w):
    return str(w)


# ---------------------------------------------------------------------------
# printers


def _pred_level(s):
    if " | " in s:
        return 1
    if " & " in s:
        return 2
    if s.startswith("!"):
        return 5
    return 6


def format_regex(r, ctx=0):
    """Print ``r`` so that :func:`parse_regex` reads it back to ``r``."""
    t = type(r)
    if t is ere.Pred:
        s = str(r.pred)
        lvl = _pred_level(s)
    elif t is ere.Eps:
        s, lvl = "()", 6
    elif t is ere.Union:
        s, lvl = " | ".join(format_regex(x, 2) for x in r.items), 1
    elif t is ere.Inter:
        s, lvl = " && ".join(format_regex(x, 3) for x in r.items), 2
    elif t is ere.Concat:
        parts, x = [], r
        while type(x) is ere.Concat:
            parts.append(x.head)
            x = x.tail
        parts.append(x)
        s, lvl = " ; ".join(format_regex(p, 4) for p in parts), 3
    elif t is ere.Fusion:
        s = f"({format_regex(r.left, 4)} : {format_regex(r.right, 4)})"
        lvl = 6
    elif t is ere.Star:
        s, lvl = format_regex(r.body, 5) + "*", 4
    elif t is ere.Compl:
        s, lvl = "~" + format_regex(r.body, 5), 5
    else:
        raise TypeError(r)
    return f"({s})" if lvl < ctx else s


def format_formula(f, ctx=0):
    """Print ``f`` so that :func:`parse_formula` reads it back to ``f``."""
    t = type(f)
    if f is rltl.TRUE:
        return "true"
    if f is rltl.FALSE:
        return "false"
    if t is rltl.Pred:
        s = str(f.pred)
        lvl = {1: 3, 2: 4}.get(_pred_level(s), 6)
    elif t is rltl.Not:
        s, lvl = "!" + format_formula(f.body, 5), 5
    elif t is rltl.Next:
        s, lvl = "X " + format_formula(f.body, 5), 5
    elif t is rltl.Until and f.left is rltl.TRUE:
        s, lvl = "F " + format_formula(f.right, 5), 5
    elif t is rltl.Release and f.left is rltl.FALSE:
        s, lvl = "G " + format_formula(f.right, 5), 5
    elif t in (rltl.Until, rltl.Release):
        op = "U" if t is rltl.Until else "R"
        s = f"{format_formula(f.left, 2)} {op} {format_formula(f.right, 1)}"
        lvl = 1
    elif t is rltl.And:
        s, lvl = " & ".join(format_formula(x, 5) for x in f.items), 4
    elif t is rltl.Or:
        s, lvl = " | ".join(format_formula(x, 4) for x in f.items), 3
    elif t is rltl.ExistsSuffix:
        s = "{" + format_regex(f.regex) + "} <>-> " + format_formula(f.body, 5)
        lvl = 5
    elif t is rltl.ForallSuffix:
        s = "{" + format_regex(f.regex) + "} []-> " + format_formula(f.body, 5)
        lvl = 5
    elif t is rltl.WeakClosure:
        s, lvl = "cl{" + format_regex(f.regex) + "}", 6
    elif t is rltl.NegWeakClosure:
        s, lvl = "ncl{" + format_regex(f.regex) + "}", 6
    elif t is rltl.OmegaClosure:
        s, lvl = "omega{" + format_regex(f.regex) + "}", 6
    else:
        raise TypeError(f)
    return f"({s})" if lvl < ctx else s


def parse_algebra(text):
    from .algebra import parse_algebra as _pa

    return _pa(text)


__all__ = [
    "parse_predicate", "parse_regex", "parse_formula", "parse_word",
    "parse_letter", "parse_algebra", "format_regex", "format_formula",
    "format_word", "UsageError",
]
