"""
Substitutions, incidence matrices and entropy
=============================================

A Markov decomposition is given as a substitution: each arc maps to the word
of arcs its preimage crosses.  Counting letters gives the incidence matrix,
and the entropy is the log of its spectral radius.
"""

import math
from fractions import Fraction
from pathlib import Path

from pennercert.family import claim_substitution
from pennercert.intmatrix import mat_pow
from pennercert.substitution import (
    arc_count_admissible,
    entropy_interval,
    format_substitution,
    incidence_matrix,
    iterate,
    parse_substitution,
)

fib = parse_substitution((Path(__file__).parent / "data" / "fibonacci.sub").read_text())
M = incidence_matrix(fib)
print("Fibonacci incidence matrix:\n", M, sep="")

# Iterating the substitution is the same as powering the matrix.
print("\nthird iterate:", format_substitution(iterate(fib, 3)).strip().replace("\n", ";  "))
assert incidence_matrix(iterate(fib, 3)) == mat_pow(M, 3)

I = entropy_interval(fib, Fraction(1, 10**12))
print(f"entropy in [{math.log(I.lower):.12f}, {math.log(I.upper):.12f}]")
print(f"log golden ratio = {math.log((1 + 5 ** 0.5) / 2):.12f}")

# The f_1 branch substitution reproduces the train-track operator.
sub = claim_substitution(5)
print("\nf_1 branch rules:\n" + format_substitution(sub))
I = entropy_interval(sub)
print("growth rate", [str(I.lower), str(I.upper)], "entropy log 2")

# Is a 5-arc decomposition possible for a core with |chi| = 1?  No: at most 3 arcs.
print("\n5 arcs under |chi| = 1:", arc_count_admissible(sub, 1))
print("5 arcs under |chi| = 2:", arc_count_admissible(sub, 2))
