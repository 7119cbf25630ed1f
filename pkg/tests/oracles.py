"""Independent reference computations used to cross-check the library.

Nothing here imports the package's linear algebra: values are plain
``fractions.Fraction`` and elimination is done from scratch.  The library is
only consulted for its *inputs* (structure constants, action matrices).

Ext is computed from the normalized bar complex relative to the split
semisimple subalgebra S spanned by a complete set of orthogonal idempotents:

    C^i = Hom_S(W^{(x)_S i} (x)_S M, N),    A = S + W  as S-bimodules,

which computes Ext_A because S is separable.
"""

from __future__ import annotations

from fractions import Fraction


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return Fraction(int(x.numerator), int(x.denominator))


def rank(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / p
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def solve_square(cols: list[list[Fraction]], v: list[Fraction]) -> list[Fraction]:
    """Coordinates of v in the basis given by ``cols`` (must be a basis)."""
    n = len(cols)
    aug = [[cols[j][i] for j in range(n)] + [v[i]] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [aug[i][n] for i in range(n)]


def independent_subset(vectors, start=()) -> list:
    chosen = list(start)
    out = []
    for v in vectors:
        if rank(chosen + [v]) > len(chosen):
            chosen.append(v)
            out.append(v)
    return out


class RefAlgebra:
    """Structure constants copied out of a library algebra."""

    def __init__(self, alg):
        self.dim = alg.dim
        self.table = {}
        for i, j, k, c in alg.entries():
            self.table.setdefault((i, j), []).append((k, frac(c)))
        self.unit = [frac(x) for x in alg.unit]

    def mul(self, x, y):
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if b:
                    for k, c in self.table.get((i, j), ()):
                        out[k] += a * b * c
        return out

    def basis(self, i):
        return [Fraction(int(i == j)) for j in range(self.dim)]


class RefModule:
    """A left module as one matrix per basis element of the algebra."""

    def __init__(self, alg: RefAlgebra, action):
        self.alg = alg
        self.act = action
        self.dim = len(action[0]) if action else 0

    @classmethod
    def from_library(cls, alg: RefAlgebra, rep):
        act = [[[frac(x) for x in row] for row in m.data] for m in rep.action]
        if rep.dim == 0:
            act = [[] for _ in rep.action]
        return cls(alg, act)

    def matrix(self, x):
        n = self.dim
        out = [[Fraction(0)] * n for _ in range(n)]
        for c, m in zip(x, self.act):
            if c:
                for i in range(n):
                    for j in range(n):
                        if m[i][j]:
                            out[i][j] += c * m[i][j]
        return out


def _apply(m, v):
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def _matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


class _Peirce:
    """Adapted bases of A, M, N with respect to idempotents e_1..e_r."""

    def __init__(self, alg: RefAlgebra, idems):
        idems = [[frac(x) for x in e] for e in idems]
        r = len(idems)
        total = [sum(col, Fraction(0)) for col in zip(*idems)]
        assert total == alg.unit, "idempotents must sum to 1"
        for p in range(r):
            for q in range(r):
                want = idems[p] if p == q else [Fraction(0)] * alg.dim
                assert alg.mul(idems[p], idems[q]) == want, "not orthogonal idempotents"
        self.alg, self.idems, self.r = alg, idems, r
        # W basis: per block (p, q) a complement of S in e_p A e_q
        self.w = []          # list of (p, q, vector)
        for p in range(r):
            for q in range(r):
                block = [alg.mul(alg.mul(idems[p], alg.basis(i)), idems[q]) for i in range(alg.dim)]
                start = [idems[p]] if p == q else []
                for v in independent_subset(block, start):
                    self.w.append((p, q, v))
        cols = idems + [v for _, _, v in self.w]
        assert len(cols) == alg.dim
        self.cols = cols

    def w_coords(self, x):
        """Coordinates of the W-component of x (S-component dropped)."""
        return solve_square(self.cols, x)[self.r:]


class _AdaptedModule:
    def __init__(self, mod: RefModule, peirce: _Peirce):
        self.mod, self.pc = mod, peirce
        n = mod.dim
        self.types = []
        cols = []
        for p, e in enumerate(peirce.idems):
            img = mod.matrix(e)
            vecs = [[img[i][j] for i in range(n)] for j in range(n)]
            for v in independent_subset(vecs):
                cols.append(v)
                self.types.append(p)
        assert len(cols) == n
        self.cols = cols

    def act(self, x):
        """Matrix of x in the adapted basis."""
        n = self.mod.dim
        if n == 0:
            return []
        m = self.mod.matrix(x)
        images = [_apply(m, c) for c in self.cols]
        coords = [solve_square(self.cols, v) for v in images]
        return [[coords[j][i] for j in range(n)] for i in range(n)]


def _chains(pc: _Peirce, length: int):
    """Composable W-basis chains (indices) with their idempotent types c0..c_length."""
    if length == 0:
        return [((), (p,)) for p in range(pc.r)]
    out = []
    for prev, types in _chains(pc, length - 1):
        for k, (p, q, _) in enumerate(pc.w):
            if p == types[-1]:
                out.append((prev + (k,), types + (q,)))
    return out


def bar_complex(alg_lib, idems, m_lib, n_lib, upto: int):
    """(sizes of C^0..C^{upto+1}, differentials d^0..d^upto as row lists)."""
    alg = RefAlgebra(alg_lib)
    pc = _Peirce(alg, idems)
    mm = _AdaptedModule(RefModule.from_library(alg, m_lib), pc)
    nn = _AdaptedModule(RefModule.from_library(alg, n_lib), pc)
    w_act_m = [mm.act(v) for _, _, v in pc.w]
    w_act_n = [nn.act(v) for _, _, v in pc.w]
    prod_cache: dict = {}

    def wprod(a, b):
        if (a, b) not in prod_cache:
            prod_cache[(a, b)] = pc.w_coords(alg.mul(pc.w[a][2], pc.w[b][2]))
        return prod_cache[(a, b)]

    def cochain_index(i):
        idx = {}
        for chain, types in _chains(pc, i):
            for mi, mt in enumerate(mm.types):
                if mt != types[-1]:
                    continue
                for ni, nt in enumerate(nn.types):
                    if nt == types[0]:
                        idx[(chain, mi, ni)] = len(idx)
        return idx

    cochains = [cochain_index(i) for i in range(upto + 2)]

    def differential(i):
        src, tgt = cochains[i], cochains[i + 1]
        rows = []
        for (chain, mi, ni) in tgt:
            row = [Fraction(0)] * len(src)
            w1 = chain[0]
            # w_1 . f(w_2 .. w_{i+1}, m)
            for n2, _ in enumerate(nn.types):
                c = w_act_n[w1][ni][n2]
                if c and (chain[1:], mi, n2) in src:
                    row[src[(chain[1:], mi, n2)]] += c
            # (-1)^k f(.., w_k w_{k+1}, ..)
            for k in range(i):
                coeffs = wprod(chain[k], chain[k + 1])
                sign = -1 if (k + 1) % 2 else 1
                for wk, c in enumerate(coeffs):
                    if c:
                        key = (chain[:k] + (wk,) + chain[k + 2:], mi, ni)
                        if key in src:
                            row[src[key]] += sign * c
            # (-1)^{i+1} f(w_1 .. w_i, w_{i+1} m)
            sign = -1 if (i + 1) % 2 else 1
            last = chain[-1]
            for m2, _ in enumerate(mm.types):
                c = w_act_m[last][m2][mi]
                if c and (chain[:-1], m2, ni) in src:
                    row[src[(chain[:-1], m2, ni)]] += sign * c
            rows.append(row)
        return rows

    return [len(c) for c in cochains], [differential(i) for i in range(upto + 1)]


def bar_ext_dims(alg_lib, idems, m_lib, n_lib, upto: int) -> list[int]:
    """dim Ext^i_A(M, N) for i = 0..upto from the relative bar complex."""
    sizes, ds = bar_complex(alg_lib, idems, m_lib, n_lib, upto)
    ranks = [rank(d) if sizes[i] and sizes[i + 1] else 0 for i, d in enumerate(ds)]
    return [sizes[i] - ranks[i] - (ranks[i - 1] if i else 0) for i in range(upto + 1)]


def is_cochain_complex(alg_lib, idems, m_lib, n_lib, upto: int = 3) -> bool:
    """d^{i+1} d^i = 0, a sanity check of the oracle itself."""
    sizes, ds = bar_complex(alg_lib, idems, m_lib, n_lib, upto)
    for i in range(upto):
        a, b = ds[i], ds[i + 1]
        if not a or not b:
            continue
        if any(any(x for x in row) for row in _matmul(b, a)):
            return False
    return True


def reference_simples(alg_lib, idems):
    """One-dimensional simples S_p for a basic algebra, via the S-component."""
    alg = RefAlgebra(alg_lib)
    pc = _Peirce(alg, idems)
    out = []
    for p in range(pc.r):
        act = []
        for i in range(alg.dim):
            coords = solve_square(pc.cols, alg.basis(i))
            act.append([[coords[p]]])
        out.append(RefModule(alg, act))
    return out


class _Wrap:
    """Presents a RefModule with the ``action``/``dim`` shape bar_ext_dims reads."""

    class _M:
        def __init__(self, rows):
            self.data = rows

    def __init__(self, mod: RefModule):
        self.dim = mod.dim
        self.action = [self._M(m) for m in mod.act]


def reference_gldim(alg_lib, idems, upto: int = 5) -> int:
    """max i <= upto with Ext^i(S_p, S_q) != 0, over the reference simples."""
    simples = [_Wrap(s) for s in reference_simples(alg_lib, idems)]
    best = 0
    for s in simples:
        for t in simples:
            dims = bar_ext_dims(alg_lib, idems, s, t, upto)
            for i, d in enumerate(dims):
                if d:
                    best = max(best, i)
    return best


def monomial_path_count(vertices, arrows, zero_relations, max_len: int = 16) -> int:
    """Paths of a quiver avoiding the given monomial zero relations.

    ``arrows`` are (name, src, tgt); a relation is a tuple of arrow names in
    composition order, e.g. ("b1", "a1") for b1 after a1.
    """
    by_src: dict = {}
    for name, s, t in arrows:
        by_src.setdefault(s, []).append((name, t))
    bad = {tuple(r) for r in zero_relations}
    count = len(vertices)
    frontier = [((name,), t) for name, s, t in arrows]
    length = 1
    while frontier and length <= max_len:
        count += len(frontier)
        nxt = []
        for path, end in frontier:
            for name, t in by_src.get(end, ()):
                new = (name,) + path
                if any(new[i:i + len(r)] == r for r in bad for i in range(len(new) - len(r) + 1)):
                    continue
                nxt.append((new, t))
        frontier = nxt
        length += 1
    assert not frontier, "infinite dimensional"
    return count


def center_dim(alg_lib) -> int:
    """dim Z(A) by solving x b_j = b_j x for every basis element."""
    alg = RefAlgebra(alg_lib)
    n = alg.dim
    rows = []
    for j in range(n):
        bj = alg.basis(j)
        cols = [[l - r for l, r in zip(alg.mul(alg.basis(i), bj), alg.mul(bj, alg.basis(i)))]
                for i in range(n)]
        rows.extend([[cols[i][k] for i in range(n)] for k in range(n)])
    return n - rank(rows)


def corner_data(alg_lib, e):
    """(dim eAe, basis vectors) for an idempotent e, by brute force."""
    alg = RefAlgebra(alg_lib)
    e = [frac(x) for x in e]
    vecs = [alg.mul(alg.mul(e, alg.basis(i)), e) for i in range(alg.dim)]
    basis = independent_subset(vecs)
    return len(basis), basis


def trace_ideal_dim(alg_lib, e) -> int:
    """dim AeA, spanned by products b_i e b_j."""
    alg = RefAlgebra(alg_lib)
    e = [frac(x) for x in e]
    vecs = [alg.mul(alg.mul(alg.basis(i), e), alg.basis(j))
            for i in range(alg.dim) for j in range(alg.dim)]
    return rank(vecs)
