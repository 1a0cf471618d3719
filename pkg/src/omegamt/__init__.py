"""Omega-regular automata modulo theories.

Symbolic derivatives of regexes and regular LTL, alternating Buchi
automata, alternation elimination, products and emptiness checking over
effective Boolean algebras.
"""

from .algebra import (ANCHOR, AnchorAlgebra, IntAlgebra, PropAlgebra, equiv,
                      is_sat, minterms, parse_algebra, with_anchor)
from .automata import (Aba, alt_elim, combine, from_classical, is_empty,
                       member_up, mintermize, product)
from .errors import (AlgebraMismatchError, ParseError, PositiveFragmentError,
                     StateCapError, UsageError)
from .rltl import build_aba, deriv, to_positive
from .syntax import (format_formula, format_regex, parse_formula,
                     parse_predicate, parse_regex, parse_word)
from .words import UPWord

__version__ = "0.1.0"

__all__ = [
    "ANCHOR", "AnchorAlgebra", "IntAlgebra", "PropAlgebra", "equiv", "is_sat",
    "minterms", "parse_algebra", "with_anchor",
    "Aba", "alt_elim", "combine", "from_classical", "is_empty", "member_up",
    "mintermize", "product",
    "AlgebraMismatchError", "ParseError", "PositiveFragmentError",
    "StateCapError", "UsageError",
    "build_aba", "deriv", "to_positive",
    "format_formula", "format_regex", "parse_formula", "parse_predicate",
    "parse_regex", "parse_word",
    "UPWord",
]
