"""Complementing an omega-closure with an anchor.

omega{[x==1];[x==1]} holds of words made of blocks "1 1".  Negating its
derivatives does not give a correct automaton, but the negation can be
written with a fresh anchor letter `#` that never occurs in real input:

    G ![#] & ncl{([x==1];[x==1])* ; [#]}
"""

from omegamt import (IntAlgebra, alt_elim, build_aba, member_up,
                     parse_formula, parse_word, with_anchor)
from omegamt.automata import to_text

Z = IntAlgebra()
A = with_anchor(Z)

pos = alt_elim(build_aba(parse_formula("omega{[x==1];[x==1]}", Z), Z))
negated = alt_elim(build_aba(
    parse_formula("G ![#] & ncl{([x==1];[x==1])*;[#]}", A), A))
print(to_text(negated))

for text in (";1", "1;2", "1,1;1,2", "2;1"):
    print(f"{text:>8}:  omega {member_up(pos, parse_word(text, Z))!s:5}  "
          f"complement {member_up(negated, parse_word(text, A))}")
