"""Exact computations with idempotent minors of finite-dimensional algebras.

The package works over the rationals (gmpy2 ``mpq``) throughout:

* :mod:`~ncminors.exactla`: dense exact linear algebra,
* :mod:`~ncminors.algebra`, :mod:`~ncminors.quiver`, :mod:`~ncminors.representations`:
  algebras by structure constants or bound quivers, and their modules,
* :mod:`~ncminors.minors`: corner algebras eBe with the functors F, G, H,
* :mod:`~ncminors.homalg`, :mod:`~ncminors.heredity`: resolutions, Ext,
  global dimension and heredity chains,
* :mod:`~ncminors.constructions`: matrix-ring constructions,
* :mod:`~ncminors.p1`, :mod:`~ncminors.hcurve`: hereditary curves over P^1,
  their tilting sets and canonical algebras,
* :mod:`~ncminors.cli`: the ``ncminors`` command.
"""

from .algebra import (Algebra, AlgebraElement, TwoSidedIdeal, algebra_from_structure_constants,
                      center, multiply, opposite, primitive_idempotents, quotient_algebra,
                      radical)
from .constructions import endomorphism_construction, subhereditary_glue, triangular_algebra
from .hcurve import (WeightedP1, canonical_algebra, hom_and_ext_dims, hom_basis, hom_divisor,
                     local_order, local_projectives_and_simples, match_canonical,
                     morita_canonical_form, theta_maps, tilting_endomorphism_algebra,
                     tilting_set, generating_set)
from .heredity import (classical_quasi_hereditary, gldim_bound_check, heredity_chain_search,
                       is_heredity_ideal, semiorthogonality_check)
from .homalg import ext_dim, global_dim, inj_dim, proj_dim, projective_cover, projective_resolution
from .minors import (functor_F, functor_G, functor_H, minor, recollement_report, trace_ideal)
from .quiver import QuiverPresentation, algebra_from_quiver
from .representations import hom_space, regular_module, simple_modules

__all__ = ["Algebra", "AlgebraElement", "TwoSidedIdeal", "algebra_from_structure_constants",
           "center", "multiply", "opposite", "primitive_idempotents", "quotient_algebra",
           "radical", "endomorphism_construction", "subhereditary_glue", "triangular_algebra",
           "WeightedP1", "canonical_algebra", "hom_and_ext_dims", "hom_basis", "hom_divisor",
           "local_order", "local_projectives_and_simples", "match_canonical",
           "morita_canonical_form", "theta_maps", "tilting_endomorphism_algebra", "tilting_set",
           "generating_set", "classical_quasi_hereditary", "gldim_bound_check",
           "heredity_chain_search", "is_heredity_ideal", "semiorthogonality_check", "ext_dim",
           "global_dim", "inj_dim", "proj_dim", "projective_cover", "projective_resolution",
           "functor_F", "functor_G", "functor_H", "minor", "recollement_report", "trace_ideal",
           "QuiverPresentation", "algebra_from_quiver", "hom_space", "regular_module",
           "simple_modules"]

__version__ = "0.1.0"
