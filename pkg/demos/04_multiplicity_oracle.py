# coding: utf-8
"""
====================================================
The exact multiplicity oracle, and why it is needed
====================================================

The toolkit carries a second, fully independent route to ground truth:
symmetric-group characters by the border-strip recursion, combined into
the exact multiplicity g(lambda_A, lambda_B, lambda_C).  Positivity of g
proves membership of the normalized point; but the converse fails, which
is exactly why the polytope verifiers above earn their keep.
"""

from kronkit import (
    kron_coeff,
    make_instance,
    mn_character,
    parse_young,
    partitions,
    semigroup_member,
)

# %%
# Character values.  chi_(2,1) on the three classes of S_3 reads 2, 0, -1
# — the standard two-dimensional representation.

std = parse_young([2, 1])
for mu in partitions(3):
    print(f"chi_(2,1)({mu}) = {mn_character(std, parse_young(mu))}")

# %%
# Multiplicities at small k.  The class-weighted triple product is always
# a nonnegative integer (the module raises if rounding ever broke that).

examples = [
    ([1, 1], [1, 1], [2]),
    ([2], [2], [1, 1]),
    ([2, 1], [2, 1], [2, 1]),
    ([2, 2], [2, 2], [2, 2]),
]
for rows in examples:
    g = kron_coeff(*(parse_young(r) for r in rows))
    print(f"g{tuple(tuple(r) for r in rows)} = {g}")

# %%
# Non-saturation: the triple ((1,1),(1,1),(1,1)) has multiplicity 0, yet
# its normalized point (all marginals maximally mixed) IS achievable —
# the doubled triple ((2,2),(2,2),(2,2)) has multiplicity 1.  Stretching
# can turn a zero positive, so a single zero proves nothing about the
# polytope.

lam = parse_young([1, 1])
print(f"\ng((1,1)x3)         = {kron_coeff(lam, lam, lam)}")
doubled = parse_young([2, 2])
print(f"g((2,2)x3)         = {kron_coeff(doubled, doubled, doubled)}")

inst = make_instance(lam, lam, lam, 2)
print(f"semigroup_member   = Yes({semigroup_member(inst, l_max=4)})  "
      "(smallest stretching factor with positive multiplicity)")

# %%
# The brute-force probe stays honest about its limits: absence of a small
# stretching factor is reported as None (Unknown), never as a refutation.

outside = make_instance(parse_young([2]), parse_young([2]), parse_young([1, 1]), 2)
print(f"outside point      = {semigroup_member(outside, l_max=4)}  "
      "(None: this route cannot refute membership)")
