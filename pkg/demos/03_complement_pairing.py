"""
The pairing on the surface complement
=====================================

Push the Seifert form through the inverse of ``a -> a+ - a-`` to get a
pairing on the meridian basis of the complement.  The conjugation and the
entrywise closed form agree exactly.
"""
import random

from plumbtree import (enumerate_matched_trees, framed, pairing_by_conjugation,
                       pairing_closed_form, phi_inverse_matrix, phi_matrix, t1)

fp = framed(t1(), {"b": -2, "w": 3})
print("Phi (columns are images of h_v):")
print(phi_matrix(fp.tree))
print("Phi^-1:")
print(phi_inverse_matrix(fp.tree))

for signs in ([1], [-1]):
    g = fp.with_signs(signs)
    m = pairing_by_conjugation(g).reindex(("b", "w"))
    print(f"eps = {signs[0]:+d}: pairing in basis (c_b, c_w) =", m.to_lists())

###############################################################################
# A random check on bigger trees.

rng = random.Random(0)
trees = enumerate_matched_trees(5)
mismatches = 0
for _ in range(200):
    t = rng.choice(trees)
    f = {v: rng.choice((-1, 1)) * rng.randint(2, 9) for v in t.labels}
    g = framed(t, f, [rng.choice((1, -1)) for _ in t.edges])
    mismatches += pairing_closed_form(g) != pairing_by_conjugation(g)
print("closed form vs conjugation mismatches over 200 random cases:", mismatches)
