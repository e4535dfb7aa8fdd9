"""
Counting inequivalent spanning surfaces
=======================================

With distinct ``|f(v)| >= 2`` an identification of complements can only
send each meridian to plus or minus itself.  Checking every sign vector
against the complement pairing separates all ``2^(2n-1)`` labelings.
"""

from plumbtree import (chain_tree, count_classes, framed, spin_c_support,
                       surfaces_equivalent)
from plumbtree.classify import obstruction_summary


def corollary_framing(n):
    f = {}
    for i in range(1, n + 1):
        f[f"w{i}"] = 2 * i + 1
        f[f"b{i}"] = -2 * i
    return f


fp = framed(chain_tree(2), corollary_framing(2))
box = spin_c_support(fp)
print("Spin^c support sides:", box.sides, "volume:", box.volume)

# The two cases of the obstruction.
print(surfaces_equivalent(fp, fp.with_signs([-1, 1, 1])))
print(surfaces_equivalent(fp, fp.with_signs([1, -1, 1])))

for n in range(1, 5):
    res = count_classes(chain_tree(n), corollary_framing(n))
    print(f"genus {n}: {res.count} classes out of {res.labelings} labelings "
          f"(expected {2 ** (2 * n - 1)})")

res = count_classes(chain_tree(2), corollary_framing(2))
print("obstruction cases between class representatives:",
      dict(obstruction_summary(res.representatives)))
