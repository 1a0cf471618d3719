"""From a formula to a Buchi automaton and back to a word.

G (F a & F !a) asks for infinitely many a and infinitely many non-a.  Its
derivative automaton is alternating (reading `a` demands both the formula
and `F !a` next), so alternation elimination turns it into an NBA, which
nested depth-first search then probes for an accepted word.
"""

from omegamt import PropAlgebra, alt_elim, build_aba, is_empty, parse_formula
from omegamt.automata import to_text

A = PropAlgebra(("a",))
phi = parse_formula("G (F a & F !a)", A)

aba = build_aba(phi, A)
print("alternating automaton:")
print(to_text(aba))

nba = alt_elim(aba)
print("after alternation elimination:")
print(to_text(nba))

raw = alt_elim(aba, reduce=False)
print(f"without the sub-pair reduction: {len(raw.states)} states\n")

res = is_empty(nba)
print("witness:", res.witness)
print("G a & F !a empty:",
      bool(is_empty(alt_elim(build_aba(parse_formula("G a & F !a", A), A)))))
