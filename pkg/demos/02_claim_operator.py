"""
The train-track operator of f_1
===============================

The operator has (1,2) = 1, (2,2) = 2 and a single 1 at (i, i-2) for i >= 3.
Its graph is a forest of trivial components hanging off the self-loop of
weight 2 at vertex 2, so every finite truncation has leading eigenvalue 2.
"""

from pennercert import certify, claim_operator, eigenvector_check, is_perron_frobenius, spectral_radius
from pennercert.digraph import scc_report

A = claim_operator(6)
print(A)
print()

report = scc_report(A)
print("components (sinks first):", report["components"])
print("trivial flags:           ", report["trivial_flags"])
print("Perron-Frobenius?        ", is_perron_frobenius(A))

# The radius is exact: the only non-trivial block is [[2]].
I = spectral_radius(A)
print("spectral radius in       ", [str(I.lower), str(I.upper)])

# An exact eigenvector, x_i = x_{i-2} / 2.
x = eigenvector_check(6)
print("eigenvector              ", [str(c) for c in x.coords])

# The certificate is tight: n' = 1 and 2**(1/1) is the radius itself.
cert = certify(A)
print("certificate              ", cert.to_json())

for k in (2, 16, 64):
    I = spectral_radius(claim_operator(k))
    print(f"k = {k:2d}: radius [{I.lower}, {I.upper}]")
