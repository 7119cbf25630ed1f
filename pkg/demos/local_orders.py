"""
Hereditary orders over a discrete valuation ring
================================================

H(n1,...,nk) sits inside Mat(n, O) and is block upper triangular modulo the
maximal ideal.  Its projectives form a chain of lattices.
"""

from ncminors.hcurve import (compositions, local_order, local_projectives_and_simples,
                             morita_canonical_form)

h = local_order((2, 1))
print("valuation pattern of H(2,1):")
for row in h.pattern:
    print("   ", row)

lattices, simples = local_projectives_and_simples(h)
for lat in lattices:
    print(f"L{lat.index}: valuations {lat.valuation}")
for u in simples:
    print(f"U{u.index}: dim {u.dim}, pd {u.projective_dimension}")

# every simple has projective dimension one, so each H(n) is hereditary
for n in range(1, 5):
    comps = compositions(n)
    pds = {u.projective_dimension for c in comps for u in local_projectives_and_simples(local_order(c))[1]}
    print(f"n = {n}: {len(comps)} compositions, pd values {sorted(pds)}")

# rotating the composition gives a Morita equivalent order
print("Morita form of (3, 1, 2):", morita_canonical_form((3, 1, 2)))
