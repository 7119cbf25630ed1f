"""
Corner algebras of a three-vertex quiver algebra
=================================================

Lambda is the bound quiver algebra in data/lambda.alg: arrows a1, a2 from
vertex 1 to vertex 2, arrows b1, b2 from 2 to 3, and relations b1 a1 = b2 a2 = 0.
"""

from ncminors import minor, recollement_report, trace_ideal
from ncminors.algebra import primitive_idempotent_data
from ncminors.corpus import lambda_algebra
from ncminors.identify import identify_path_algebra
from ncminors.minors import quotient_by_trace

lam = lambda_algebra()
labels, idems = primitive_idempotent_data(lam)
e = dict(zip(labels, idems))
print("dim Lambda =", lam.dim, "with vertices", labels)

# cut down to vertices 1 and 2: only the two parallel arrows survive
e12 = [x + y for x, y in zip(e["e1"], e["e2"])]
md = minor(lam, e12)
print("dim eBe =", md.a.dim, "->", identify_path_algebra(md.a)[1])

# the trace ideal BeB and what is left after killing it
for v in ("e1+e2", "e3"):
    vec = e12 if v == "e1+e2" else e[v]
    m = minor(lam, vec)
    print(f"e = {v}: dim BeB = {trace_ideal(m).dim}, dim B/BeB = {quotient_by_trace(m).algebra.dim}")

# F and H are fully faithful adjoints of G = Hom(Be, -); every check below is explicit
for line in recollement_report(md, cap=4).lines():
    print(line)
