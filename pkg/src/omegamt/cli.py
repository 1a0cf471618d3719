"""Command line interface.

Every subcommand takes ``--algebra`` (``prop:a,b``, ``int`` or
``anchor(...)``).  Formulas and regexes use the syntax documented in
:mod:`omegamt.syntax`; an argument of the form ``@file`` reads an automaton
in the text format written by ``aba``/``nba`` instead of a formula.

Exit codes: 0 success, 1 for ``EMPTY`` (``empty``) or ``false``
(``member``), 2 when ``--check`` finds a disagreement with the reference
implementation, 64 usage error, 65 parse error, 70 internal error or state
cap exceeded.
"""

from __future__ import annotations

import argparse
import itertools
import random
import sys

from . import automata, ere, oracle, rltl
from .algebra import ANCHOR, AnchorAlgebra, minterms, parse_algebra, sample
from .errors import (OracleDisagreement, ParseError, StateCapError,
                     UsageError)
from .syntax import parse_formula, parse_predicate, parse_regex, parse_word
from .tterm import DNF_FALSE, dnf_atom, format_term, leaf_of, lift_unary
from .words import UPWord, format_letter

EXIT_OK, EXIT_NO, EXIT_CHECK = 0, 1, 2
EXIT_USAGE, EXIT_PARSE, EXIT_INTERNAL = 64, 65, 70


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _common(p):
    p.add_argument("--algebra", required=True,
                   help="prop:a,b | int | anchor(<algebra>)")
    p.add_argument("--format", choices=("text", "dot"), default="text")
    p.add_argument("--check", action="store_true",
                   help="cross-check the result against the reference oracle")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for words sampled by --check")
    p.add_argument("--cap", type=int, default=automata.DEFAULT_STATE_CAP,
                   help="state budget for automaton constructions")


def build_parser():
    ap = _Parser(prog="omegamt", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = sub.add_parser("derive", help="symbolic derivative of a formula or regex")
    p.add_argument("input")
    p.add_argument("--regex", action="store_true",
                   help="treat the input as a regex")
    p.add_argument("--negate", action="store_true",
                   help="also print the lifted negation")
    _common(p)
    p = sub.add_parser("aba", help="alternating automaton of a formula")
    p.add_argument("input")
    _common(p)
    p = sub.add_parser("nba", help="alternation elimination")
    p.add_argument("input")
    p.add_argument("--no-reduce", action="store_true",
                   help="disable the sub-pair state reduction")
    _common(p)
    p = sub.add_parser("dfa", help="derivative DFA of a regex")
    p.add_argument("input")
    _common(p)
    p = sub.add_parser("product", help="intersection of two NBAs")
    p.add_argument("left")
    p.add_argument("right")
    _common(p)
    p = sub.add_parser("empty", help="emptiness check (exit 1 when empty)")
    p.add_argument("input")
    _common(p)
    p = sub.add_parser("member", help="UP-word membership (exit 1 when false)")
    p.add_argument("input")
    p.add_argument("--word", required=True, help='"u;v" for u v^omega')
    _common(p)
    p = sub.add_parser("minterms", help="satisfiable minterms of predicates")
    p.add_argument("preds", nargs="*")
    _common(p)
    return ap


# ---------------------------------------------------------------------------
# helpers


def _read_automaton(arg):
    with open(arg[1:]) as fh:
        return automata.from_text(fh.read())


def _formula(arg, alg):
    return rltl.to_positive(parse_formula(arg, alg))


def _aba(arg, alg, cap):
    """``(aba, formula or None)`` from a formula or an ``@file``."""
    if arg.startswith("@"):
        m = _read_automaton(arg)
        if m.algebra != alg:
            raise UsageError(f"automaton is over {m.algebra}, not {alg}")
        return m, None
    f = _formula(arg, alg)
    return rltl.build_aba(f, alg, cap=cap), f


def _nba(arg, alg, cap, reduce=True):
    m, f = _aba(arg, alg, cap)
    if m.is_nondeterministic:
        return m, f
    return automata.alt_elim(m, reduce=reduce, cap=cap), f


def _emit(m, fmt):
    sys.stdout.write(automata.to_dot(m) if fmt == "dot" else automata.to_text(m))


def _representatives(alg, preds):
    """One letter per satisfiable minterm of ``preds``."""
    reps = [sample(m) for m in minterms(list(preds), alg)]
    if isinstance(alg, AnchorAlgebra) and ANCHOR not in reps:
        reps.append(ANCHOR)
    return reps


def _check_words(alg, preds, seed, limit=400):
    reps = _representatives(alg, preds)
    words = []
    for lu in range(0, 3):
        for lv in range(1, 3):
            for u in itertools.product(reps, repeat=lu):
                for v in itertools.product(reps, repeat=lv):
                    words.append(UPWord(u, v))
    if len(words) > limit:
        rnd = random.Random(seed)
        words = rnd.sample(words, limit)
    return words


def _disagree(msg):
    raise OracleDisagreement(msg)


def _check_language(nba, f, alg, seed):
    if f is None:
        return
    ev = oracle.Evaluator(f, alg)
    for w in _check_words(alg, rltl.predicates(f), seed):
        if automata.member_up(nba, w) != ev(w):
            _disagree(f"automaton and oracle disagree on {w}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_derive(a, alg):
    if a.regex:
        r = parse_regex(a.input, alg)
        d = ere.der(r, alg)
        print(format_term(d))
        if a.check:
            reps = _representatives(alg, ere.predicates(r))
            for n in range(0, 4):
                for u in itertools.product(reps, repeat=n):
                    if ere.matches(r, u, alg) != oracle.brute_match(r, u):
                        _disagree(f"regex matching disagrees on {u}")
        return EXIT_OK
    f = parse_formula(a.input, alg)
    d = rltl.deriv(f)
    print(format_term(d))
    if a.negate:
        print(format_term(lift_unary(rltl.neg, d)))
    if a.check:
        ev = oracle.Evaluator(f, alg)
        for w in _check_words(alg, rltl.predicates(f), a.seed):
            rest = leaf_of(d, w[0])
            if ev(w) != oracle.Evaluator(rest, alg)(w.suffix(1)):
                _disagree(f"derivative check fails on {w}")
    return EXIT_OK


def cmd_aba(a, alg):
    m, f = _aba(a.input, alg, a.cap)
    _emit(m, a.format)
    if a.check:
        _check_language(automata.alt_elim(m, cap=a.cap), f, alg, a.seed)
    return EXIT_OK


def cmd_nba(a, alg):
    n, f = _nba(a.input, alg, a.cap, reduce=not a.no_reduce)
    _emit(n, a.format)
    if a.check:
        _check_language(n, f, alg, a.seed)
    return EXIT_OK


def cmd_dfa(a, alg):
    r = parse_regex(a.input, alg)
    d = ere.build_dfa(r, alg, cap=a.cap)
    states = list(d.states)

    def to_dnf(x):
        return dnf_atom(x) if x in d.delta else DNF_FALSE

    delta = {q: lift_unary(to_dnf, d.delta[q]) for q in states}
    m = automata.Aba(alg, states, dnf_atom(r), delta,
                     [q for q in states if q.nullable],
                     {q: str(q) for q in states})
    _emit(m, a.format)
    if a.check:
        reps = _representatives(alg, ere.predicates(r))
        for n in range(0, 4):
            for u in itertools.product(reps, repeat=n):
                if ere.matches(r, u, alg) != oracle.brute_match(r, u):
                    _disagree(f"DFA and brute-force matching disagree on {u}")
    return EXIT_OK


def cmd_product(a, alg):
    n1, f1 = _nba(a.left, alg, a.cap)
    n2, f2 = _nba(a.right, alg, a.cap)
    p = automata.product(n1, n2, cap=a.cap)
    _emit(p, a.format)
    if a.check and f1 is not None and f2 is not None:
        _check_language(p, rltl.conj(f1, f2), alg, a.seed)
    return EXIT_OK


def cmd_empty(a, alg):
    n, f = _nba(a.input, alg, a.cap)
    res = automata.is_empty(n)
    if a.check:
        ref = oracle.classical_is_empty(
            oracle.classical_mh(automata.mintermize(n)))
        if ref != res.empty:
            _disagree("nested DFS and the SCC oracle disagree")
        if not res.empty:
            if not automata.member_up(n, res.witness):
                _disagree(f"witness {res.witness} is not accepted")
            if f is not None and not oracle.eval(f, res.witness, alg):
                _disagree(f"witness {res.witness} does not satisfy the formula")
    if res.empty:
        print("EMPTY")
        return EXIT_NO
    print(f"NONEMPTY witness: {res.witness}")
    return EXIT_OK


def cmd_member(a, alg):
    w = parse_word(a.word, alg)
    n, f = _nba(a.input, alg, a.cap)
    ok = automata.member_up(n, w)
    if a.check and f is not None and oracle.eval(f, w, alg) != ok:
        _disagree(f"membership disagrees with the oracle on {w}")
    print("true" if ok else "false")
    return EXIT_OK if ok else EXIT_NO


def cmd_minterms(a, alg):
    preds = [parse_predicate(p, alg) for p in a.preds]
    for m in minterms(preds, alg):
        print(m)
    if a.check:
        for letter in _representatives(alg, preds):
            hits = [m for m in minterms(preds, alg) if m.algebra.denotes(m, letter)]
            if len(hits) != 1:
                _disagree(f"letter {format_letter(letter)} is in {len(hits)} minterms")
    return EXIT_OK


COMMANDS = {
    "derive": cmd_derive, "aba": cmd_aba, "nba": cmd_nba, "dfa": cmd_dfa,
    "product": cmd_product, "empty": cmd_empty, "member": cmd_member,
    "minterms": cmd_minterms,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        alg = parse_algebra(args.algebra)
        return COMMANDS[args.cmd](args, alg)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OracleDisagreement as e:
        print(f"check failed: {e}", file=sys.stderr)
        return EXIT_CHECK
    except StateCapError as e:
        print(f"state cap exceeded: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except RecursionError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
