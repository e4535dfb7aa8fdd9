"""
Seifert matrices of plumbed annuli
==================================

A framing on vertices and a sign on each edge fix a plumbed surface.  Its
Seifert matrix is read off the tree directly; the knot invariants it
produces do not see the edge signs.
"""

from plumbtree import (all_labelings, alexander_polynomial, chain_tree,
                       framed, intersection_matrix, knot_determinant,
                       knot_signature, seifert_matrix)

t = chain_tree(2)
f = {"w1": 3, "b1": -2, "w2": 5, "b2": -4}
fp = framed(t, f)  # every edge +1

print("basis:", seifert_matrix(fp).basis)
print(seifert_matrix(fp))
print()
print("theta^T - theta (independent of the signs):")
print(intersection_matrix(fp))

###############################################################################
# Sweep all 2^3 sign labelings: the matrices change, the invariants do not.

for other in all_labelings(t, f):
    signs = "".join("+" if s > 0 else "-" for s in other.signs())
    print(f"{signs}  Delta = {alexander_polynomial(other)}"
          f"   det = {knot_determinant(other)}   sigma = {knot_signature(other)}")
