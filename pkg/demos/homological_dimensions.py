"""
Resolutions, Ext and global dimension
=====================================

Minimal projective resolutions are computed exactly; Ext then comes from
the complex Hom(P_*, N).
"""

from ncminors import global_dim, gldim_bound_check, heredity_chain_search, projective_resolution
from ncminors.algebra import primitive_idempotent_data
from ncminors.corpus import dual_numbers, glue_fixture, lambda_algebra
from ncminors.homalg import ext_dims
from ncminors.representations import simple_modules

lam = lambda_algebra()
s1, s2, s3 = simple_modules(lam)

# S1 needs two steps: its projective cover has a radical that is not projective
res = projective_resolution(s1)
print("pd S1 =", res.proj_dim(), "terms", res.types)
print("Ext^i(S1, S3), i = 0..3:", ext_dims(s1, s3, 3))
print("gl.dim Lambda =", global_dim(lam))

# over k[x]/(x^2) the simple resolves forever; the cap turns that into a lower bound
print("gl.dim k[x]/(x^2) =", global_dim(dual_numbers(), cap=6))

# a heredity chain of length r bounds gl.dim by 2r + 1
chain = heredity_chain_search(lam)
print("heredity chain of length", len(chain.steps), "-> gl.dim <=", 2 * len(chain.steps) + 1)

labels, idems = primitive_idempotent_data(lam)
e3 = idems[labels.index("e3")]
report = gldim_bound_check(lam, e3)
for key, value in report.values.items():
    print(f"  {key} = {value}")
print(report.checks[0].line())

# the glued subhereditary fixture stays within gl.dim 2
print("gl.dim of the glued algebra =", global_dim(glue_fixture()))
