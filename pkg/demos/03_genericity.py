"""
Genericity of a k-type, decided exactly
=======================================

A dominant integral weight mu is generic when the shifted weight
mu + 2 rho - rho_n pairs nonnegatively with every positive k-root and
the quadratic t_pair(mu + 2 rho - rho_S, rho_S) stays strictly positive
over every nonempty submultiset S of the character of the nilradical.

For rank-one subalgebras the whole condition collapses to a single
integer threshold, computed here for every simple type, and checked
against the defining search.
"""

from itertools import product

from redpair import build_root_system, is_generic, make_sl2_pair, sl2_threshold, vec

# the two classical examples: thresholds 4 and 7, so genericity starts
# at m = 3 and m = 6
for name in ("A2", "B2"):
    g = build_root_system(name)
    p = make_sl2_pair(g, [2] * g.rank)
    t = sl2_threshold(p)
    print(f"{name} principal: generic iff m + 1 >= {t}, i.e. m >= {t - 1}")
    verdicts = [is_generic(p, vec(m)).holds for m in range(t + 3)]
    print("   verdicts:", verdicts)

# thresholds of the principal subalgebra across all simple types of rank
# at most three, plus G2
print("principal thresholds:")
for name in ("A1", "A2", "A3", "B2", "B3", "C3", "G2"):
    g = build_root_system(name)
    p = make_sl2_pair(g, [2] * g.rank)
    print(f"   {name}: m >= {sl2_threshold(p) - 1}")

# the closed form agrees with the two defining conditions for every mark
# vector, not only the principal one
g = build_root_system("B3")
agree = 0
for labels in product((0, 1, 2), repeat=3):
    if not any(labels):
        continue
    p = make_sl2_pair(g, list(labels))
    t = sl2_threshold(p)
    for m in range(t + 4):
        assert is_generic(p, vec(m)).holds == (m + 1 >= t)
        agree += 1
print(f"closed form checked against the search at {agree} points on B3")

# a failing mu comes back with a witness: the smallest submultiset whose
# half-sum rho_S breaks positivity
p = make_sl2_pair(build_root_system("A2"), [2, 2])
report = is_generic(p, vec(2))
print("m = 2 report: holds =", report.holds,
      "| condition 1:", report.condition1_ok,
      "| condition 2:", report.condition2_ok)
print("   witness submultiset:", dict(report.witness_submultiset.items()),
      "with rho_S =", report.witness_rho_s)
