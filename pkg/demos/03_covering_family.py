"""
Sharpness of the growth rate
============================

f_d^d lifts f_1 to a d-fold cover, so log rho(f_d) = log 2 / d.  The lower
bound from the core characteristic is log 2 / (3 |chi|).  If |chi(f_d)|
grows linearly, |chi| = c d, the two exponents differ by the constant
factor 3c: the bound has the right order of growth.
"""

from pennercert import core_bound, family_stretch, sharpness_report

print(" d   rho(f_d)        exponent   bound (|chi| = d)   ratio")
for d in range(1, 13):
    stretch = family_stretch(d, digits=12)
    rep = sharpness_report(d, d)
    print(f"{d:2d}   {stretch.decimal:<14}  {str(stretch.exponent):<9}  {str(rep.bound_exponent):<18}  {rep.ratio}")

print()
for chi in (1, 2, 5, 10):
    b = core_bound(chi)
    print(f"|chi| = {chi:2d}: at most {b.arc_cap:2d} arcs, log rho >= log 2 / {b.arc_cap} = {b.log_bound:.6f}")
