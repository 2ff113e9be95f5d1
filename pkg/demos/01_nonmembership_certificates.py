# coding: utf-8
"""
====================================================
Certifying that a spectra triple is NOT achievable
====================================================

A hyperplane certificate (H, z, p) proves that a normalized triple of
partitions lies outside the achievable-spectra polytope.  The verifier
checks four exact conditions; flipping any one of them breaks the proof,
and the verdict names the first condition that failed.
"""

from kronkit import (
    HyperplaneCandidate,
    RessayreCertificate,
    make_instance,
    parse_young,
    verify_nonmembership,
)

# %%
# The instance: lambda_A = (2), lambda_B = (2), lambda_C = (1,1) at k = 2.
# Its normalized point ((1,0),(1,0),(1/2,1/2)) asks for two pure marginals
# with a maximally mixed third — impossible for a tripartite pure state.

inst = make_instance(parse_young([2]), parse_young([2]), parse_young([1, 1]), 2)
print(f"instance: {inst}")

# %%
# The certificate: H = ((-1,1),(-1,1),(1,-1)) at level z = -1 with
# evaluation point p = (1,0,0).  H·lambda = -4 < k·z = -2, and the three
# structural conditions hold, so the verifier accepts.

h = HyperplaneCandidate((-1, 1), (-1, 1), (1, -1), -1)
good = RessayreCertificate(h, (1, 0, 0))
print(f"good certificate:    {verify_nonmembership(inst, good)}")

# %%
# Mutations.  Each one targets a single condition of the verifier.

# moving the level to z = 0 makes the on-level weight set too fat to span
# a hyperplane (admissibility fails)
bad_level = RessayreCertificate(
    HyperplaneCandidate((-1, 1), (-1, 1), (1, -1), 0), (1, 0, 0)
)
print(f"level moved to 0:    {verify_nonmembership(inst, bad_level)}")

# the sign-flipped H is admissible but pairs the wrong number of roots
# negatively (the counting condition fails)
flipped = RessayreCertificate(
    HyperplaneCandidate((1, -1), (1, -1), (-1, 1), -1), (1, 0, 0)
)
print(f"orientation flipped: {verify_nonmembership(inst, flipped)}")

# an evaluation point in the determinant's zero set proves nothing
unlucky = RessayreCertificate(h, (0, 5, 7))
print(f"vanishing point:     {verify_nonmembership(inst, unlucky)}")

# and a point that satisfies the inequality cannot be cut off by it
inside = make_instance(
    parse_young([1, 1]), parse_young([1, 1]), parse_young([1, 1]), 2
)
print(f"inside instance:     {verify_nonmembership(inside, good)}")

# %%
# The accepted inequality also scales: stretching the instance by any
# factor l preserves H·lambda < k·z, so the whole ray is certified.

for l in (2, 3, 10):
    stretched = make_instance(
        parse_young([2 * l]), parse_young([2 * l]), parse_young([l, l]), 2 * l
    )
    print(f"stretch l={l:2d}:        {verify_nonmembership(stretched, good)}")
