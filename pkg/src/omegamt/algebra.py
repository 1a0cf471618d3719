"""Effective Boolean algebras over letters.

Three algebras are provided:

* :class:`PropAlgebra` -- letters are sets of propositions drawn from a
  fixed list of at most 16 atoms.  A predicate is stored as its truth table
  (one bit per valuation), so satisfiability is exhaustive enumeration done
  once at construction and equal predicates are equal objects.
* :class:`IntAlgebra` -- letters are integers and predicates are Boolean
  combinations of ``x<c``, ``x>c`` and ``x%m==r``.  The canonical form is a
  modulus ``M`` together with, for each residue ``r`` in ``[0, M)``, a sorted
  union of disjoint non-adjacent intervals.
* :class:`AnchorAlgebra` -- extends a base algebra with a fresh letter ``#``.

Predicates support ``&``, ``|`` and ``~``.  Every constructor returns the
canonical form, so a predicate equivalent to false *is* ``algebra.bot``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache, reduce

from .errors import AlgebraMismatchError, UsageError

INF = math.inf

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
RESERVED = frozenset(
    "true false X F G U R W M cl ncl omega if then else leaf x".split())


class Predicate:
    """Common operator sugar; subclasses define ``algebra`` and the ops."""

    __slots__ = ()

    def _check(self, other):
        if not isinstance(other, Predicate) or (
                other.algebra is not self.algebra
                and other.algebra != self.algebra):
            raise AlgebraMismatchError(
                f"cannot combine {self!r} with {other!r}")

    def __and__(self, other):
        self._check(other)
        return self.algebra.conj(self, other)

    def __or__(self, other):
        self._check(other)
        return self.algebra.disj(self, other)

    def __invert__(self):
        return self.algebra.neg(self)

    @property
    def is_top(self):
        return self == self.algebra.top

    @property
    def is_bot(self):
        return not self.is_sat

    def denotes(self, letter):
        return self.algebra.denotes(self, letter)

    @property
    def key(self):
        """Deterministic sort key: positive literals order before negated."""
        return _pred_key(self)

    def __str__(self):
        return self.algebra.render(self)

    def __lt__(self, other):
        return self.key < other.key


@lru_cache(maxsize=None)
def _pred_key(pred):
    return str(pred).replace("!", "~")


# ---------------------------------------------------------------------------
# propositional algebra


@dataclass(frozen=True, eq=True)
class PropPred(Predicate):
    algebra: "PropAlgebra" = field(repr=False)
    mask: int

    @property
    def is_sat(self):
        return self.mask != 0

    def __repr__(self):
        return f"PropPred({self})"


@dataclass(frozen=True)
class PropAlgebra:
    """Letters are frozensets of atom names; valuation ``v`` has atom ``i``
    true iff bit ``i`` of ``v`` is set."""

    atoms: tuple

    MAX_ATOMS = 16

    def __post_init__(self):
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        if len(atoms) > self.MAX_ATOMS:
            raise UsageError(f"at most {self.MAX_ATOMS} atoms are supported")
        if len(set(atoms)) != len(atoms):
            raise UsageError("duplicate atom names")
        for a in atoms:
            if not isinstance(a, str) or not _IDENT.match(a) or a in RESERVED:
                raise UsageError(f"invalid atom name {a!r}")

    @cached_property
    def _full(self):
        return (1 << (1 << len(self.atoms))) - 1

    @cached_property
    def top(self):
        return PropPred(self, self._full)

    @cached_property
    def bot(self):
        return PropPred(self, 0)

    def atom(self, name):
        try:
            i = self.atoms.index(name)
        except ValueError:
            raise UsageError(f"unknown atom {name!r}") from None
        mask = 0
        for v in range(1 << len(self.atoms)):
            if v >> i & 1:
                mask |= 1 << v
        return PropPred(self, mask)

    def conj(self, a, b):
        return PropPred(self, a.mask & b.mask)

    def disj(self, a, b):
        return PropPred(self, a.mask | b.mask)

    def neg(self, a):
        return PropPred(self, self._full & ~a.mask)

    def letter_index(self, letter):
        idx = 0
        for name in letter:
            try:
                idx |= 1 << self.atoms.index(name)
            except ValueError:
                raise AlgebraMismatchError(
                    f"letter mentions unknown atom {name!r}") from None
        return idx

    def letter_at(self, idx):
        return frozenset(a for i, a in enumerate(self.atoms) if idx >> i & 1)

    def letters(self):
        """All letters, in valuation order."""
        return [self.letter_at(v) for v in range(1 << len(self.atoms))]

    def denotes(self, pred, letter):
        if not isinstance(letter, (frozenset, set)):
            raise AlgebraMismatchError(f"{letter!r} is not a propositional letter")
        return bool(pred.mask >> self.letter_index(letter) & 1)

    def sample(self, pred):
        """The satisfying letter with the smallest valuation index."""
        if not pred.mask:
            raise UsageError("cannot sample an unsatisfiable predicate")
        m = pred.mask
        return self.letter_at((m & -m).bit_length() - 1)

    def render(self, pred):
        if pred.mask == 0:
            return "false"
        if pred.mask == self._full:
            return "true"
        n = len(self.atoms)
        terms = []
        for bits, care in _prime_cover(n, pred.mask):
            lits = [a if bits >> i & 1 else "!" + a
                    for i, a in enumerate(self.atoms) if care >> i & 1]
            terms.append(" & ".join(lits))
        return " | ".join(terms)

    def __str__(self):
        return "prop:" + ",".join(self.atoms)


@lru_cache(maxsize=4096)
def _prime_cover(n, mask):
    """Quine-McCluskey prime implicants plus a greedy cover.

    Implicants are ``(bits, care)`` pairs; the result is sorted so rendering
    is deterministic."""
    full = (1 << n) - 1
    ones = [v for v in range(1 << n) if mask >> v & 1]
    current = {(v, full) for v in ones}
    primes = set()
    while current:
        merged, used = set(), set()
        for bits, care in current:
            for i in range(n):
                bit = 1 << i
                if care & bit and not bits & bit and (bits | bit, care) in current:
                    merged.add((bits, care & ~bit))
                    used.add((bits, care))
                    used.add((bits | bit, care))
        primes |= current - used
        current = merged

    def covered(imp):
        bits, care = imp
        return {v for v in ones if v & care == bits}

    cover_of = {p: covered(p) for p in primes}
    remaining = set(ones)
    chosen = []
    order = sorted(primes, key=lambda p: (bin(p[1]).count("1"), -p[0], p[1]))
    # essential primes first
    for v in ones:
        owners = [p for p in order if v in cover_of[p]]
        if len(owners) == 1 and owners[0] not in chosen:
            chosen.append(owners[0])
    for p in chosen:
        remaining -= cover_of[p]
    while remaining:
        best = max(order, key=lambda p: (len(cover_of[p] & remaining),
                                         -bin(p[1]).count("1")))
        chosen.append(best)
        remaining -= cover_of[best]

    def literal_key(p):
        bits, care = p
        return [(i, 0 if bits >> i & 1 else 1)
                for i in range(n) if care >> i & 1]

    return tuple(sorted(chosen, key=literal_key))


# ---------------------------------------------------------------------------
# linear integer arithmetic over one variable


def _ceil_to(x, r, m):
    """Smallest value >= x congruent to r mod m (x may be infinite)."""
    return x if x in (INF, -INF) else x + ((r - x) % m)


def _floor_to(x, r, m):
    return x if x in (INF, -INF) else x - ((x - r) % m)


def _k_normalize(ivs):
    ivs = sorted(iv for iv in ivs if iv[0] <= iv[1])
    out = []
    for lo, hi in ivs:
        if out and lo <= out[-1][1] + 1:
            if hi > out[-1][1]:
                out[-1] = (out[-1][0], hi)
        else:
            out.append((lo, hi))
    return out


def _k_union(a, b):
    return _k_normalize(list(a) + list(b))


def _k_compl(a):
    out, start = [], -INF
    for lo, hi in a:
        if lo != -INF:
            out.append((start, lo - 1))
        start = hi + 1
    if start != INF:
        out.append((start, INF))
    return out


def _k_inter(a, b):
    return _k_compl(_k_union(_k_compl(a), _k_compl(b)))


def _to_k(ivs, r, m):
    return [((lo - r) // m if lo != -INF else -INF,
             (hi - r) // m if hi != INF else INF) for lo, hi in ivs]


def _from_k(kivs, r, m):
    return tuple((r + m * lo if lo != -INF else -INF,
                  r + m * hi if hi != INF else INF) for lo, hi in kivs)


def _restrict(ivs, r, m):
    """Tighten x-space intervals to the class r mod m; returns k-space."""
    tight = [(_ceil_to(lo, r, m), _floor_to(hi, r, m)) for lo, hi in ivs]
    return _k_normalize(_to_k([iv for iv in tight if iv[0] <= iv[1]], r, m))


@dataclass(frozen=True, eq=True)
class IntPred(Predicate):
    algebra: "IntAlgebra" = field(repr=False)
    modulus: int
    parts: tuple  # parts[r]: tuple of (lo, hi) within the class r mod modulus

    @property
    def is_sat(self):
        return any(self.parts)

    def __repr__(self):
        return f"IntPred({self})"


def _coarse_class(xparts, modulus, d, s):
    """x-space intervals of the class ``s mod d`` whose restriction to every
    residue ``r = s mod d`` (of ``modulus``) is ``xparts[r]``, or None.

    Between consecutive endpoints each residue is entirely in or out.  The
    two unbounded stretches need all residues to agree, otherwise the class
    is no finite union at step ``d``; a bounded stretch where they disagree
    is listed point by point."""
    rs = range(s, modulus, d)
    cuts = sorted({lo for r in rs for lo, _ in xparts[r] if lo != -INF}
                  | {hi + 1 for r in rs for _, hi in xparts[r] if hi != INF})
    bounds = [-INF] + cuts + [INF]

    def member(x):
        return any(lo <= x <= hi for lo, hi in xparts[x % modulus])

    out = []
    for a, b in zip(bounds, bounds[1:]):
        hi = b - 1 if b != INF else INF
        seen = set()
        for r in rs:
            if a != -INF:
                x = _ceil_to(a, r, modulus)
            elif hi != INF:
                x = _floor_to(hi, r, modulus)
            else:
                x = r
            if a <= x <= hi:
                seen.add(member(x))
        if len(seen) > 1:
            if a == -INF or hi == INF:
                return None
            out.extend((x, x) for x in range(_ceil_to(a, s, d), hi + 1, d)
                       if member(x))
        elif seen == {True}:
            out.append((a, hi))
    return out


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class IntAlgebra:
    """Integers with comparisons against constants and congruences."""

    var: str = "x"

    @cached_property
    def top(self):
        return IntPred(self, 1, (((-INF, INF),),))

    @cached_property
    def bot(self):
        return IntPred(self, 1, ((),))

    # atoms
    def lt(self, c):
        return self._canon(1, [[(-INF, c - 1)]])

    def gt(self, c):
        return self._canon(1, [[(c + 1, INF)]])

    def le(self, c):
        return self.lt(c + 1)

    def ge(self, c):
        return self.gt(c - 1)

    def eq(self, c):
        return self._canon(1, [[(c, c)]])

    def mod(self, m, r):
        if m <= 0:
            raise UsageError("modulus must be positive")
        parts = [[] for _ in range(m)]
        parts[r % m] = [(-INF, INF)]
        return self._canon(m, [_to_k(p, i, m) for i, p in enumerate(parts)])

    # canonicalization
    def _lift(self, pred, modulus):
        """k-space interval lists of ``pred`` for each residue mod ``modulus``."""
        m = pred.modulus
        return [_restrict(pred.parts[r % m], r, modulus) for r in range(modulus)]

    def _canon(self, modulus, kparts):
        kparts = [_k_normalize(p) for p in kparts]
        xparts = [_from_k(p, r, modulus) for r, p in enumerate(kparts)]
        for d in _divisors(modulus):
            if d == modulus:
                break
            coarse = [_coarse_class(xparts, modulus, d, s) for s in range(d)]
            if any(c is None for c in coarse):
                continue
            cand_x = [_from_k(_restrict(c, s, d), s, d)
                      for s, c in enumerate(coarse)]
            if all(_restrict(cand_x[r % d], r, modulus) == kparts[r]
                   for r in range(modulus)):
                return IntPred(self, d, tuple(cand_x))
        return IntPred(self, modulus, tuple(xparts))

    def _binop(self, a, b, op):
        m = math.lcm(a.modulus, b.modulus)
        la, lb = self._lift(a, m), self._lift(b, m)
        return self._canon(m, [op(x, y) for x, y in zip(la, lb)])

    def conj(self, a, b):
        return self._binop(a, b, _k_inter)

    def disj(self, a, b):
        return self._binop(a, b, _k_union)

    def neg(self, a):
        m = a.modulus
        return self._canon(m, [_k_compl(k) for k in self._lift(a, m)])

    def denotes(self, pred, letter):
        if not isinstance(letter, int) or isinstance(letter, bool):
            raise AlgebraMismatchError(f"{letter!r} is not an integer letter")
        return any(lo <= letter <= hi for lo, hi in pred.parts[letter % pred.modulus])

    def sample(self, pred):
        """Least absolute value; ties go to the nonnegative integer."""
        best = None
        m = pred.modulus
        for r, ivs in enumerate(pred.parts):
            for lo, hi in ivs:
                for c in (lo, hi, _ceil_to(0, r, m), _floor_to(0, r, m)):
                    if c in (INF, -INF) or not lo <= c <= hi:
                        continue
                    if best is None or (abs(c), c < 0) < (abs(best), best < 0):
                        best = c
        if best is None:
            raise UsageError("cannot sample an unsatisfiable predicate")
        return int(best)

    def render(self, pred):
        if pred == self.top:
            return "true"
        if not pred.is_sat:
            return "false"
        v = self.var
        terms = []
        for r, ivs in enumerate(pred.parts):
            for lo, hi in ivs:
                lits = []
                if pred.modulus > 1:
                    lits.append(f"[{v}%{pred.modulus}=={r}]")
                if lo != -INF:
                    lits.append(f"[{v}>{int(lo) - 1}]")
                if hi != INF:
                    lits.append(f"[{v}<{int(hi) + 1}]")
                terms.append(" & ".join(lits) if lits else "true")
        return " | ".join(terms)

    def __str__(self):
        return "int"


# ---------------------------------------------------------------------------
# anchoring


class _AnchorLetter:
    __slots__ = ()
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = object.__new__(cls)
        return cls._inst

    def __repr__(self):
        return "#"

    def __reduce__(self):
        return (_AnchorLetter, ())


ANCHOR = _AnchorLetter()


@dataclass(frozen=True, eq=True)
class AnchorPred(Predicate):
    algebra: "AnchorAlgebra" = field(repr=False)
    base: Predicate
    anchor: bool

    @property
    def is_sat(self):
        return self.anchor or self.base.is_sat

    def __repr__(self):
        return f"AnchorPred({self})"


@dataclass(frozen=True)
class AnchorAlgebra:
    """The base domain plus the letter ``#`` (:data:`ANCHOR`).

    ``#`` only satisfies ``[#]`` and its Boolean consequences; a base
    predicate ``a`` is embedded as ``(a, False)``, so ``!a`` holds on ``#``."""

    base: object

    def __post_init__(self):
        if isinstance(self.base, AnchorAlgebra):
            raise UsageError("an algebra can only be anchored once")

    @cached_property
    def top(self):
        return AnchorPred(self, self.base.top, True)

    @cached_property
    def bot(self):
        return AnchorPred(self, self.base.bot, False)

    @cached_property
    def anchor(self):
        return AnchorPred(self, self.base.bot, True)

    def embed(self, pred):
        if pred.algebra != self.base:
            raise AlgebraMismatchError(f"{pred!r} is not over {self.base}")
        return AnchorPred(self, pred, False)

    def conj(self, a, b):
        return AnchorPred(self, a.base & b.base, a.anchor and b.anchor)

    def disj(self, a, b):
        return AnchorPred(self, a.base | b.base, a.anchor or b.anchor)

    def neg(self, a):
        return AnchorPred(self, ~a.base, not a.anchor)

    def denotes(self, pred, letter):
        if letter is ANCHOR:
            return pred.anchor
        return self.base.denotes(pred.base, letter)

    def sample(self, pred):
        if pred.base.is_sat:
            return self.base.sample(pred.base)
        if pred.anchor:
            return ANCHOR
        raise UsageError("cannot sample an unsatisfiable predicate")

    def letters(self):
        return list(self.base.letters()) + [ANCHOR]

    def render(self, pred):
        b = pred.base
        if not b.is_sat:
            return "[#]" if pred.anchor else "false"
        if b == self.base.top:
            return "true" if pred.anchor else "![#]"
        s = str(b)
        from .syntax import parse_predicate  # rendering checks the round trip

        if parse_predicate(s, self).anchor == pred.anchor:
            return s
        if pred.anchor:
            return f"[#] | {s}"
        return f"![#] & ({s})" if "|" in s else f"![#] & {s}"

    def __str__(self):
        return f"anchor({self.base})"


# ---------------------------------------------------------------------------
# module-level interface


def with_anchor(algebra):
    return AnchorAlgebra(algebra)


def is_sat(pred):
    return pred.is_sat


def equiv(a, b):
    """Equivalence decided as unsatisfiability of the symmetric difference."""
    return not ((a & ~b) | (b & ~a)).is_sat


def denotes(pred, letter):
    return pred.algebra.denotes(pred, letter)


def sample(pred):
    return pred.algebra.sample(pred)


def apply_connective(op, *args):
    """Apply ``"and"``, ``"or"`` or ``"not"`` to predicates of one algebra."""
    if op == "not":
        (a,) = args
        return ~a
    if not args:
        raise UsageError(f"{op} needs at least one argument")
    if op == "and":
        return reduce(lambda x, y: x & y, args)
    if op == "or":
        return reduce(lambda x, y: x | y, args)
    raise UsageError(f"unknown connective {op!r}")


def minterms(preds, algebra=None):
    """Satisfiable minterms of a finite set of predicates.

    A minterm is ``(AND of S) & (AND of negations of the rest)`` for a subset
    ``S``.  Results are listed in binary-counter order of ``S`` over the input
    order (bit ``i`` set means ``preds[i]`` is taken positively).  Duplicates
    in the input are ignored.  With no predicates the single minterm is
    ``algebra.top``.
    """
    gamma = []
    for p in preds:
        if p not in gamma:
            gamma.append(p)
    if not gamma:
        if algebra is None:
            raise UsageError("minterms of an empty set needs the algebra")
        return [algebra.top]
    alg = gamma[0].algebra
    for p in gamma:
        gamma[0]._check(p)
    cells = [(0, alg.top)]
    for i, g in enumerate(gamma):
        nxt = []
        for bits, m in cells:
            pos, neg = m & g, m & ~g
            if pos.is_sat:
                nxt.append((bits | 1 << i, pos))
            if neg.is_sat:
                nxt.append((bits, neg))
        cells = nxt
    return [m for _, m in sorted(cells, key=lambda c: c[0])]


def parse_algebra(text):
    """``prop:a,b`` | ``int`` | ``anchor(<algebra>)``."""
    t = text.strip()
    if t == "int":
        return IntAlgebra()
    if t.startswith("prop:") or t == "prop":
        names = [a.strip() for a in t[5:].split(",") if a.strip()]
        return PropAlgebra(tuple(names))
    if t.startswith("anchor(") and t.endswith(")"):
        return AnchorAlgebra(parse_algebra(t[7:-1]))
    raise UsageError(f"unknown algebra {text!r}")
