"""Recognising path algebras from the Gabriel quiver.

A basic algebra A is a quotient kQ/I of the path algebra of its Gabriel
quiver by an admissible ideal.  When Q is acyclic and dim kQ = dim A the
ideal is zero, which certifies A = kQ without searching for an isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Algebra, primitive_idempotent_data, radical
from .errors import NonBasicTop
from .exactla import EchelonBasis

__all__ = ["GabrielQuiver", "gabriel_quiver", "path_count", "identify_path_algebra"]


@dataclass
class GabrielQuiver:
    vertices: list[str]
    arrows: list[list[int]]     # arrows[i][j] = number of arrows i -> j

    def acyclic(self) -> bool:
        n = len(self.vertices)
        indeg = [sum(self.arrows[i][j] for i in range(n)) for j in range(n)]
        ready = [j for j in range(n) if indeg[j] == 0]
        seen = 0
        while ready:
            i = ready.pop()
            seen += 1
            for j in range(n):
                if self.arrows[i][j]:
                    indeg[j] -= self.arrows[i][j]
                    if indeg[j] == 0:
                        ready.append(j)
        return seen == n

    def describe(self) -> str:
        parts = []
        n = len(self.vertices)
        for i in range(n):
            for j in range(n):
                c = self.arrows[i][j]
                if c:
                    parts.append(f"{self.vertices[i]} -{c}-> {self.vertices[j]}" if c > 1
                                 else f"{self.vertices[i]} -> {self.vertices[j]}")
        return ", ".join(parts) if parts else "no arrows"


def gabriel_quiver(a: Algebra) -> GabrielQuiver:
    """Vertices are primitive idempotents; i -> j arrows span e_j (J/J^2) e_i."""
    labs, idems = primitive_idempotent_data(a)
    j = radical(a)
    j2 = j.product(j)
    n = len(labs)
    arrows = [[0] * n for _ in range(n)]
    for s in range(n):
        for t in range(n):
            eb = EchelonBasis.from_vectors(j2.basis_vectors(), a.dim)
            base = len(eb)
            for x in j.basis_vectors():
                eb.add(a.mul(a.mul(idems[t], x), idems[s]))
            arrows[s][t] = len(eb) - base
    return GabrielQuiver(labs, arrows)


def path_count(q: GabrielQuiver) -> int | None:
    """Number of paths (including trivial ones) in an acyclic quiver, None if cyclic."""
    if not q.acyclic():
        return None
    n = len(q.vertices)
    memo: dict = {}

    def from_(i):
        if i not in memo:
            memo[i] = 1 + sum(q.arrows[i][j] * from_(j) for j in range(n) if q.arrows[i][j])
        return memo[i]

    return sum(from_(i) for i in range(n))


_NAMES = {
    (1, ()): "k",
    (2, ()): "k x k",
    (2, (1,)): "A2 path algebra",
    (2, (2,)): "Kronecker algebra",
}


def identify_path_algebra(a: Algebra) -> tuple[bool, str]:
    """(certified, description).  Certified means A is isomorphic to kQ for its Gabriel quiver Q."""
    try:
        q = gabriel_quiver(a)
    except NonBasicTop:
        return False, "not basic"
    count = path_count(q)
    if count is None:
        return False, f"Gabriel quiver has an oriented cycle ({q.describe()})"
    if count != a.dim:
        return False, f"dim A = {a.dim} but the path algebra of {q.describe()} has dim {count}"
    mult = tuple(sorted(c for row in q.arrows for c in row if c))
    name = _NAMES.get((len(q.vertices), mult), "path algebra")
    return True, f"{name} of {q.describe()}"
