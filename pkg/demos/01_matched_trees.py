"""
Matched trees and their partial order
=====================================

Build a matched tree, look at the matching and orientation it carries,
and count matched trees of each size up to isomorphism.
"""

from plumbtree import (above_set, below_set, build, chain_tree,
                       directed_path, enumerate_matched_trees, leq)

# A four-vertex path.  Colours could be left out; they are forced up to a
# global swap, and the first listed vertex is then taken to be white.
t = build(["w1", "b1", "w2", "b2"], [("w1", "b1"), ("b1", "w2"), ("w2", "b2")])
print("colours:", t.colors)
print("matching:", [tuple(sorted(e)) for e in t.matching])

# Matched edges point B -> W, the others W -> B.
for e in t.edges:
    print("edge %s -> %s%s" % (*t.oriented(e), "  (matched)" if t.is_matched(e) else ""))

# u <= v means there is a directed path from v down to u.
print("w1 <= b2:", leq(t, "w1", "b2"), "  b2 <= w1:", leq(t, "b2", "w1"))
print("path b2 -> w1:", directed_path(t, "b2", "w1"))
print("whites below b2:", sorted(below_set(t, "b2")))
print("blacks above w1:", sorted(above_set(t, "w1")))

# The chain used for the genus-n family is exactly this path, extended.
assert chain_tree(2) == t
print("chain_tree(3) order:", chain_tree(3).canonical_order)

# Hanging a new matched pair off every vertex of every smaller tree and
# deduplicating by canonical code gives all matched trees.
for n in range(1, 7):
    print(f"{2 * n:2d} vertices: {len(enumerate_matched_trees(n))} matched trees")
