"""Small algebras used throughout the tests, demos and the command line.

Every builder returns a fresh :class:`Algebra`; :func:`idempotent_supports`
lists the idempotents a corpus algebra is examined at.
"""

from __future__ import annotations

from itertools import combinations

from .algebra import Algebra, primitive_idempotent_data
from .constructions import GlueData, subhereditary_glue, triangular_algebra
from .errors import NonBasicTop
from .exactla import ONE, Mat
from .hcurve import canonical_algebra
from .quiver import QuiverPresentation, algebra_from_quiver

__all__ = ["field_k", "dual_numbers", "kronecker", "lambda_algebra", "r222",
           "matrix_algebra", "a2_triangular", "a2_path", "glue_fixture", "semisimple_pair",
           "CORPUS", "corpus", "idempotent_supports"]


def field_k() -> Algebra:
    return Algebra(["1"], [[((0, ONE),)]], [ONE], name="k")


def dual_numbers() -> Algebra:
    """k[x]/(x^2)."""
    pres = QuiverPresentation(["1"], [("x", "1", "1")], [[(ONE, ("x", "x"))]])
    return algebra_from_quiver(pres, name="k[x]/(x^2)")


def kronecker() -> Algebra:
    pres = QuiverPresentation(["1", "2"], [("a1", "1", "2"), ("a2", "1", "2")])
    return algebra_from_quiver(pres, name="Kronecker")


def lambda_algebra() -> Algebra:
    """1 => 2 => 3 with arrows a1, a2 then b1, b2, subject to b1 a1 = b2 a2 = 0."""
    pres = QuiverPresentation(
        ["1", "2", "3"],
        [("a1", "1", "2"), ("a2", "1", "2"), ("b1", "2", "3"), ("b2", "2", "3")],
        [[(ONE, ("b1", "a1"))], [(ONE, ("b2", "a2"))]])
    return algebra_from_quiver(pres, name="Lambda")


def r222(lam=3) -> Algebra:
    return canonical_algebra((2, 2, 2), (lam,)).algebra()


def matrix_algebra(n: int = 2) -> Algebra:
    """Mat(n, k) on the matrix units E_ij."""
    labels = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    entries = []
    for i in range(n):
        for j in range(n):
            for l in range(n):
                entries.append((i * n + j, j * n + l, i * n + l, ONE))
    unit = [ONE if i == j else 0 for i in range(n) for j in range(n)]
    return Algebra.from_entries(labels, entries, unit, name=f"Mat({n},k)")


def a2_triangular() -> Algebra:
    """[[k, k], [0, k]], the path algebra of 1 -> 2 built as a triangular algebra."""
    k = field_k()
    return triangular_algebra(k, k, 1, [Mat.identity(1)], [Mat.identity(1)], name="A2")


def a2_path() -> Algebra:
    pres = QuiverPresentation(["1", "2"], [("a", "1", "2")])
    return algebra_from_quiver(pres, name="kA2")


def glue_data() -> GlueData:
    """k[x]/(x^2) inside the hereditary algebra kA2 via 1 -> e1 + e2, x -> a."""
    inc = [[1, 1, 0], [0, 0, 1]]
    return subhereditary_glue(dual_numbers(), a2_path(), inc)


def glue_fixture() -> Algebra:
    alg = glue_data().algebra
    alg.name = "A_H"
    return alg


def semisimple_pair() -> Algebra:
    """k x k."""
    pres = QuiverPresentation(["1", "2"], [])
    return algebra_from_quiver(pres, name="k x k")


CORPUS = {
    "k": field_k,
    "dual": dual_numbers,
    "kronecker": kronecker,
    "lambda": lambda_algebra,
    "r222": r222,
    "mat2": matrix_algebra,
    "a2": a2_triangular,
    "glue": glue_fixture,
    "kxk": semisimple_pair,
}


def corpus(names=None) -> dict[str, Algebra]:
    names = list(CORPUS) if names is None else names
    return {n: CORPUS[n]() for n in names}


def idempotent_supports(a: Algebra) -> list[tuple[str, list]]:
    """Every nonzero sum of primitive idempotents, as (expression, vector).

    For a non-basic algebra the diagonal basis idempotents E_ii stand in for
    the primitive ones.
    """
    try:
        labs, vecs = primitive_idempotent_data(a)
    except NonBasicTop:
        labs = [lab for lab in a.labels if len(lab) == 3 and lab[0] == "E" and lab[1] == lab[2]]
        if not labs:
            raise
        vecs = [a.basis_vec(a.labels.index(lab)) for lab in labs]
    out = []
    for size in range(1, len(labs) + 1):
        for idx in combinations(range(len(labs)), size):
            v = [sum((vecs[i][j] for i in idx), 0) for j in range(a.dim)]
            out.append(("+".join(labs[i] for i in idx), v))
    return out
