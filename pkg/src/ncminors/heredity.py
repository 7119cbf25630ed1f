"""Heredity ideals, relating chains and the global dimension bounds they give.

For an idempotent e of B with A = eBe and I = BeB the relevant properties are

* I projective as a left B-module (pre-heredity step),
* I projective as a right B-module (flat step; finitely generated flat
  modules over a finite-dimensional algebra are projective),
* Be projective as a right A-module.

A chain B = B_1 -> B_2 = B_1/I_1 -> ... -> B_{r+1} whose steps have all
three properties, hereditary corners e_i B_i e_i and hereditary last term
makes B quasi-hereditary of level r, and then gl.dim B <= 2r + 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .algebra import Algebra, is_semisimple, opposite, primitive_idempotent_data
from .homalg import DEFAULT_CAP, AtLeast, dim_str, global_dim, is_finite, is_projective, proj_dim
from .minors import (Check, MinorData, _right_mult_on_p, ideal_as_left_module,
                     ideal_as_right_module, minor, quotient_by_trace, semi_orthogonality,
                     trace_ideal)
from .representations import Representation

__all__ = ["HeredityFlags", "is_heredity_ideal", "HeredityChain", "heredity_chain_search",
           "gldim_bound_check", "chain_bound_checks", "semiorthogonality_check",
           "classical_quasi_hereditary", "BoundReport"]


def _gldim(a: Algebra, cap: int):
    return 0 if a.dim == 0 or is_semisimple(a) else global_dim(a, cap)


def _pd(m: Representation, cap: int):
    if m.dim == 0 or is_semisimple(m.parent):
        return 0
    return proj_dim(m, cap)


def _projective(m: Representation) -> bool:
    return m.dim == 0 or is_semisimple(m.parent) or is_projective(m)


def p_as_right_module(md: MinorData) -> Representation:
    """Be as a right eBe-module, i.e. a left module over the opposite of eBe."""
    op = opposite(md.a)
    return Representation(op, md.p_dim, [_right_mult_on_p(md, v) for v in md.a_vectors],
                          name="Be_A")


@dataclass
class HeredityFlags:
    md: MinorData
    ideal_dim: int
    left_projective: bool
    right_projective: bool
    p_right_projective: bool
    minor_gldim: object
    cap: int

    @property
    def is_heredity(self) -> bool:
        return self.left_projective and self.right_projective and self.p_right_projective

    def lines(self) -> list[str]:
        yes = {True: "true", False: "false"}
        return [f"dim I = {self.ideal_dim}",
                f"I left projective = {yes[self.left_projective]}",
                f"I right projective = {yes[self.right_projective]}",
                f"Be right projective over eBe = {yes[self.p_right_projective]}",
                f"gl.dim eBe = {dim_str(self.minor_gldim)}"]


def is_heredity_ideal(b: Algebra, e, cap: int = DEFAULT_CAP,
                      md: MinorData | None = None) -> HeredityFlags:
    """Side projectivity of BeB, of Be over eBe, and gl.dim of eBe."""
    if md is None:
        md = minor(b, e, verify=False)
    ideal = trace_ideal(md)
    return HeredityFlags(
        md=md,
        ideal_dim=ideal.dim,
        left_projective=_projective(ideal_as_left_module(ideal)),
        right_projective=_projective(ideal_as_right_module(ideal)),
        p_right_projective=_projective(p_as_right_module(md)),
        minor_gldim=_gldim(md.a, cap),
        cap=cap,
    )


@dataclass
class ChainStep:
    support: tuple[str, ...]
    flags: HeredityFlags
    ideal_pd: object


@dataclass
class HeredityChain:
    """Algebras B_1, ..., B_{r+1} with the idempotent used at each step."""

    algebras: list[Algebra]
    steps: list[ChainStep] = field(default_factory=list)

    @property
    def level(self) -> int:
        return len(self.steps)

    @property
    def last(self) -> Algebra:
        return self.algebras[-1]

    def verify(self, cap: int = DEFAULT_CAP) -> list[Check]:
        """Re-derive each quotient and re-check the step conditions."""
        out = []
        for i, st in enumerate(self.steps):
            md = st.flags.md
            q = quotient_by_trace(md).algebra
            nxt = self.algebras[i + 1]
            same = q.dim == nxt.dim and q.table == nxt.table
            out.append(Check(f"step_{i + 1}_quotient", same,
                             f"dim B_{i + 1} = {md.b.dim}, dim I = {st.flags.ideal_dim}, "
                             f"dim B_{i + 2} = {nxt.dim}"))
            ok = st.flags.is_heredity and _le(st.flags.minor_gldim, 1)
            out.append(Check(f"step_{i + 1}_heredity", ok, "; ".join(st.flags.lines())))
        g = _gldim(self.last, cap)
        out.append(Check("last_hereditary", _le(g, 1), f"gl.dim B_{self.level + 1} = {dim_str(g)}"))
        return out

    def lines(self) -> list[str]:
        out = [f"level = {self.level}"]
        for i, st in enumerate(self.steps):
            out.append(f"step {i + 1}: e = {'+'.join(st.support)}, dim B_{i + 1} = "
                       f"{st.flags.md.b.dim}, dim I = {st.flags.ideal_dim}, "
                       f"pd I = {dim_str(st.ideal_pd)}, gl.dim A_{i + 1} = {dim_str(st.flags.minor_gldim)}")
        out.append(f"dim B_{self.level + 1} = {self.last.dim}")
        return out


def _le(v, bound: int) -> bool:
    return is_finite(v) and v <= bound


def _supports(b: Algebra) -> list[tuple[tuple[str, ...], list]]:
    """Nonzero sums of primitive idempotents, smallest support first, lexicographic."""
    labs, vecs = primitive_idempotent_data(b)
    out = []
    for size in range(1, len(labs) + 1):
        for idx in combinations(range(len(labs)), size):
            v = [sum((vecs[i][j] for i in idx), 0) for j in range(b.dim)]
            out.append((tuple(labs[i] for i in idx), v))
    return out


def _search(b: Algebra, cap: int, corner_bound: int, last_bound: int,
            need_flat: bool, depth: int) -> HeredityChain | None:
    if _le(_gldim(b, cap), last_bound):
        return HeredityChain([b])
    if b.dim == 0 or depth == 0:
        return None
    for support, e in _supports(b):
        md = minor(b, e, verify=False)
        flags = is_heredity_ideal(b, e, cap, md=md)
        if not flags.left_projective or not _le(flags.minor_gldim, corner_bound):
            continue
        if need_flat and not (flags.right_projective and flags.p_right_projective):
            continue
        rest = _search(quotient_by_trace(md).algebra, cap, corner_bound, last_bound,
                       need_flat, depth - 1)
        if rest is not None:
            step = ChainStep(support, flags, _pd(ideal_as_left_module(trace_ideal(md)), cap))
            return HeredityChain([b] + rest.algebras, [step] + rest.steps)
    return None


def heredity_chain_search(b: Algebra, cap: int = DEFAULT_CAP) -> HeredityChain | None:
    """First heredity chain with hereditary corners and hereditary last term.

    Supports are tried smallest first and lexicographically; the search
    backtracks when a quotient admits no admissible continuation.
    """
    if not b.dim or is_semisimple(b):
        return HeredityChain([b])
    primitive_idempotent_data(b)   # raises NonBasicTop early
    return _search(b, cap, corner_bound=1, last_bound=1, need_flat=True, depth=b.dim)


def classical_quasi_hereditary(b: Algebra, cap: int = DEFAULT_CAP) -> HeredityChain | None:
    """A chain of heredity ideals in the classical sense, ending at the zero algebra.

    Each step needs I = BeB projective as a left module and eBe semisimple.
    """
    if not b.dim:
        return HeredityChain([b])
    primitive_idempotent_data(b)
    return _classical(b, cap)


def _classical(b: Algebra, cap: int) -> HeredityChain | None:
    if b.dim == 0:
        return HeredityChain([b])
    for support, e in _supports(b):
        md = minor(b, e, verify=False)
        if not is_semisimple(md.a):
            continue
        flags = is_heredity_ideal(b, e, cap, md=md)
        if not flags.left_projective:
            continue
        rest = _classical(quotient_by_trace(md).algebra, cap)
        if rest is not None:
            return HeredityChain([b] + rest.algebras, [ChainStep(support, flags, 0)] + rest.steps)
    return None


# -- bounds ---------------------------------------------------------------------------

@dataclass
class BoundReport:
    values: dict
    checks: list[Check]
    notes: list[str] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = [f"{k} = {dim_str(v) if not isinstance(v, str) else v}" for k, v in self.values.items()]
        out += [f"note: {n}" for n in self.notes]
        return out + [c.line() for c in self.checks]


def _compare(lhs, rhs) -> str:
    """'holds', 'violated' or 'undecided' for lhs <= rhs with capped values."""
    if isinstance(rhs, AtLeast):
        return "undecided" if isinstance(lhs, AtLeast) or lhs > rhs.bound else "holds"
    if isinstance(lhs, AtLeast):
        return "violated" if lhs.bound > rhs else "undecided"
    return "holds" if lhs <= rhs else "violated"


def _plus(*vals):
    total, capped = 0, False
    for v in vals:
        if isinstance(v, AtLeast):
            total += v.bound
            capped = True
        else:
            total += v
    return AtLeast(total) if capped else total


def _max(*vals):
    finite = [v for v in vals if not isinstance(v, AtLeast)]
    capped = [v.bound for v in vals if isinstance(v, AtLeast)]
    if capped:
        return AtLeast(max(capped + finite))
    return max(finite)


def _verdict_check(name: str, lhs, rhs, text: str) -> Check:
    v = _compare(lhs, rhs)
    return Check(name, v != "violated", f"{text}: {v}")


def gldim_bound_check(b: Algebra, e, cap: int = DEFAULT_CAP) -> BoundReport:
    """gl.dim B <= max{m + d + 2, n} with d = pd of BeB, n = gl.dim eBe, m = gl.dim B/BeB.

    The inequality is asserted only when Be is projective as a right
    eBe-module; values beyond the cap make the verdict undecided rather
    than wrong.
    """
    md = minor(b, e, verify=False)
    flags = is_heredity_ideal(b, e, cap, md=md)
    d = _pd(ideal_as_left_module(trace_ideal(md)), cap)
    n = flags.minor_gldim
    m = _gldim(quotient_by_trace(md).algebra, cap)
    g = _gldim(b, cap)
    rhs = _max(_plus(m, d, 2), n)
    values = {"dim B": b.dim, "dim A": md.a.dim, "dim I": flags.ideal_dim,
              "d (pd I)": d, "n (gl.dim A)": n, "m (gl.dim B/I)": m, "gl.dim B": g,
              "max{m+d+2, n}": rhs,
              "hypothesis (Be right projective over A)": "true" if flags.p_right_projective else "false"}
    if flags.p_right_projective and flags.ideal_dim == b.dim:
        # BeB = B: Be is a progenerator, so B and eBe are Morita equivalent and gl.dim B = n
        checks = [Check("gldim_inequality", True,
                        f"{dim_str(g)} <= {dim_str(rhs)}: holds (BeB = B, gl.dim B = n by Morita equivalence)")]
    elif flags.p_right_projective:
        checks = [_verdict_check("gldim_inequality", g, rhs, f"{dim_str(g)} <= {dim_str(rhs)}")]
    else:
        v = _compare(g, rhs)
        checks = [Check("gldim_inequality", True,
                        f"hypothesis fails, not asserted; {dim_str(g)} <= {dim_str(rhs)}: {v}")]
    return BoundReport(values, checks)


def chain_bound_checks(b: Algebra, chain: HeredityChain, cap: int = DEFAULT_CAP) -> BoundReport:
    """The bounds implied by a relating chain.

    With d the largest pd of the step ideals (one uniform d across steps)
    and n the largest gl.dim of the step corners:
    gl.dim B <= r(d+2) + max{gl.dim B_{r+1}, n-d-2}, gl.dim B <= gl.dim B_{r+1} + 2r
    for pre-heredity chains, and gl.dim B <= 2r+1 for hereditary corners.
    """
    r = chain.level
    g = _gldim(b, cap)
    last = _gldim(chain.last, cap)
    d = _max(0, *[s.ideal_pd for s in chain.steps]) if chain.steps else 0
    n = _max(0, *[s.flags.minor_gldim for s in chain.steps]) if chain.steps else 0
    checks = []
    if isinstance(d, AtLeast) or isinstance(n, AtLeast) or isinstance(last, AtLeast):
        general = AtLeast(0)
    else:
        general = r * (d + 2) + max(last, n - d - 2)
    checks.append(_verdict_check("chain_bound", g, general,
                                 f"{dim_str(g)} <= r(d+2)+max{{gl.dim B_r+1, n-d-2}} = {dim_str(general)}"))
    if all(s.flags.left_projective for s in chain.steps):
        pre = _plus(last, 2 * r)
        checks.append(_verdict_check("pre_heredity_bound", g, pre, f"{dim_str(g)} <= {dim_str(pre)}"))
    qh = all(s.flags.is_heredity and _le(s.flags.minor_gldim, 1) for s in chain.steps) and _le(last, 1)
    if qh:
        checks.append(_verdict_check("quasi_hereditary_bound", g, 2 * r + 1,
                                     f"{dim_str(g)} <= 2r+1 = {2 * r + 1}"))
    values = {"level r": r, "gl.dim B": g, "gl.dim B_r+1": last, "d": d, "n": n}
    notes = ["d and n are maxima over all steps"] if r > 1 else []
    return BoundReport(values, checks, notes)


def semiorthogonality_check(b: Algebra, e, cap: int = 4) -> Check:
    """Ext^k_B(F P, S) = 0 for projective eBe-modules P and simple B/BeB-modules S."""
    return semi_orthogonality(minor(b, e, verify=False), cap)
