"""
Certifying log(rho) >= log 2 / n
================================

Any nonnegative integer matrix whose leading eigenvalue exceeds 1 satisfies
rho >= 2**(1/n).  The certificate behind this is tiny: a strongly connected
component that is not a circle, and the column sums of the n'-th power of its
transition matrix, all of which are at least 2.
"""

import random

from pennercert import certify, check, exceeds_one, from_rows, spectral_radius
from pennercert.cli import decimal_str

# The Fibonacci matrix: one component, n' = 2, B^2 = [[1, 1], [1, 2]].
A = from_rows([[0, 1], [1, 1]])
cert = certify(A)
print("Fibonacci certificate:", cert.to_json())
print("certified  rho >= 2^(1/2) =", 2 ** 0.5)
I = spectral_radius(A)
print("enclosure  rho in", [decimal_str(I.lower), decimal_str(I.upper)])

# A reducible matrix: a circle {1,2} feeding an expanding block {3,4}.
A = from_rows([
    [0, 1, 0, 0],
    [1, 0, 1, 0],
    [0, 0, 1, 1],
    [0, 0, 1, 0],
])
cert = certify(A)
print("\nreducible example picks component", cert.dominant_vertices, "with sums", cert.power_column_sums)
assert check(A, cert)

# Random sweep: compare the certified exponent with the actual radius.
rng = random.Random(0)
print("\n n  n'  certified   enclosure lower")
for _ in range(8):
    n = rng.randint(2, 6)
    A = from_rows([[rng.choice([0, 0, 0, 1, 2]) for _ in range(n)] for _ in range(n)])
    if not exceeds_one(A):
        print(f"{n:2d}   -  radius <= 1, no certificate")
        continue
    cert = certify(A)
    lower = spectral_radius(A).lower
    print(f"{n:2d}  {cert.n_prime:2d}  {2 ** (1 / cert.n_prime):9.6f}   {decimal_str(lower)}")
