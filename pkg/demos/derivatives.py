"""Derivatives of a formula over the integers.

    G [x>0] & ([x%2==0] U [x%3==0])

"every value is positive, and even values continue until a multiple of
three shows up".  The derivative is a transition term: a decision tree on
the next value whose leaves say what must hold of the rest of the word.
"""

from omegamt import IntAlgebra, UPWord, parse_formula
from omegamt.oracle import eval as holds
from omegamt.rltl import deriv, neg
from omegamt.tterm import format_term, leaf_of, lift_unary

Z = IntAlgebra()
phi = parse_formula("G [x>0] & ([x%2==0] U [x%3==0])", Z)

d = deriv(phi)
print("derivative:")
print("  ", format_term(d))
print("negated leaves:")
print("  ", format_term(lift_unary(neg, d)))

# Reading one value off the front of a word selects a leaf.
for x in (-4, 3, 4, 5):
    print(f"after {x:>2}: {leaf_of(d, x)}")

# The leaf reached on the first letter decides the rest of the word.
w = UPWord((4, 2, 9), (1,))
rest = leaf_of(d, w[0])
print(f"{w} |= phi: {holds(phi, w, Z)};  {w.suffix(1)} |= {rest}: {holds(rest, w.suffix(1), Z)}")
