"""
Partitions, cores and the charge bijection
==========================================

Residues of boxes, l-cores, and the map tau_s that glues an l-multipartition
into a single partition with prescribed l-core.
"""

from cyclotomic_orders.multipartitions import (
    charge_of_core, core_of_charge, enumerate_multipartitions, parse_charge, tau, tau_inverse)
from cyclotomic_orders.partitions import Partition, content_counts, ell_core, transpose

# a partition and its residue distribution modulo 3
lam = Partition((5, 5, 3, 1, 1))
print("partition", lam, "transpose", transpose(lam))
print("contents mod 3:", content_counts(lam, 3))
print("3-core:", ell_core(lam, 3))

# every charge with entries summing to zero names an l-core, and back
s = parse_charge("(1,0,-1)")
core = core_of_charge(s)
print(f"\ncharge {s} has core {core}; recovered charge {charge_of_core(core, 3)}")

# tau_s sends P(l, n) onto the partitions of size l n + |core| with that core
images = {}
for mu in enumerate_multipartitions(3, 2):
    nu = tau(s, mu)
    images[mu] = nu
    print(f"  {mu} -> {nu}")
assert all(tau_inverse(s, nu) == mu for mu, nu in images.items())
print("sizes:", sorted({nu.degree for nu in images.values()}), "cores:",
      {ell_core(nu, 3) for nu in images.values()})
