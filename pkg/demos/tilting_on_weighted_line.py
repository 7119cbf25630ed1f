"""
A tilting set on a weighted projective line
===========================================

Three points of weight 2 on P^1.  The tilting set consists of the structure
sheaf L, its twist L(-o) and one lattice-chain sheaf per special point.
"""

from ncminors import WeightedP1, canonical_algebra, match_canonical, tilting_endomorphism_algebra
from ncminors.exactla import to_q
from ncminors.hcurve import compare_presentation, hom_table
from ncminors.identify import identify_path_algebra

curve = WeightedP1([(0, 2, (1, 1)), (1, 2, (1, 1)), (2, 2, (1, 1))], 2, name="w222")
objs, h0, h1 = hom_table(curve)
names = [o.name for o in objs]
print("h0(Hom(row, column)):")
print(" " * 9 + "".join(f"{n:>9}" for n in names))
for n, row in zip(names, h0):
    print(f"{n:>9}" + "".join(f"{v:>9}" for v in row))
print("all h1 vanish:", all(v == 0 for r in h1 for v in r))

# moving the third point to mu changes only the canonical parameter
mu = to_q(3)
moved = WeightedP1([(0, 2, (1, 1)), (1, 2, (1, 1)), (mu, 2, (1, 1))], 2, name="w222 at 3")
end_t, labels = tilting_endomorphism_algebra(moved)
match = match_canonical(end_t, labels)
print("End(T) has dim", end_t.dim, "weights", match.weights, "lambda =", match.lambdas[0])

# the canonical algebra with that lambda is the same algebra, path by path
compare_presentation(end_t, match, canonical_algebra(match.weights, match.lambdas).algebra())
print("basis paths identified")

# without special points the tilting algebra is the Kronecker algebra
plain, _ = tilting_endomorphism_algebra(WeightedP1([], 1, name="P1"))
print("no special points:", identify_path_algebra(plain)[1])
