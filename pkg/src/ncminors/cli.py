"""Command line driver.

Usage: ``ncminors <command> [options]``.  Every command prints a report of
``key = value`` lines, aligned tables and ``PASS``/``FAIL`` check lines,
ending with ``status = PASS`` or ``status = FAIL``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on input
errors (unreadable or malformed files, unknown idempotent labels, invalid
parameters).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .algebra import Algebra, check_axioms, parse_idempotent, primitive_idempotent_data
from .constructions import endomorphism_construction, subhereditary_glue
from .errors import (AssociativityViolation, NcMinorsError, NonBasicTop, NotCanonicalShape,
                     ParseError, UnitViolation)
from .exactla import Mat, fmt_q, to_q
from .fileformats import load_curve, parse_algebra
from .hcurve import (canonical_algebra, compare_presentation, hom_and_ext_dims,
                     local_order, local_projectives_and_simples, match_canonical,
                     morita_canonical_form, theta_maps, tilting_endomorphism_algebra,
                     tilting_set)
from .heredity import (chain_bound_checks, classical_quasi_hereditary, gldim_bound_check,
                       heredity_chain_search, is_heredity_ideal, semiorthogonality_check)
from .homalg import AtLeast, dim_str, ext_dims, global_dim, inj_dim, inj_dim_via_dual, proj_dim
from .identify import identify_path_algebra
from .minors import Check, minor, quotient_by_trace, recollement_report, trace_ideal
from .p1 import fmt_point
from .representations import indecomposable_projectives, regular_module, simple_modules

COMMANDS = ["minor", "trace-ideal", "recollement", "gldim", "ext", "inj-dim", "qhered",
            "gldim-bound", "semiorth", "endo", "glue", "curve-hom-table", "curve-tilting",
            "curve-local-order", "canonical"]


class InputError(Exception):
    """Bad command-line input; reported with exit code 2."""


class Report:
    def __init__(self, command: str):
        self.lines = [f"command = {command}"]
        self.failed: list[str] = []

    def kv(self, key: str, value) -> None:
        self.lines.append(f"{key} = {value}")

    def add(self, line: str) -> None:
        self.lines.append(line)

    def check(self, c: Check) -> None:
        self.lines.append(c.line())
        if not c.passed:
            self.failed.append(c.name)

    def table(self, title: str, header: Sequence[str], rows: Sequence[Sequence]) -> None:
        cells = [list(map(str, header))] + [[str(x) for x in r] for r in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
        self.lines.append(f"table {title}")
        for r in cells:
            self.lines.append("  " + " | ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())

    def text(self) -> str:
        status = "FAIL" if self.failed else "PASS"
        tail = [f"status = {status}"]
        if self.failed:
            tail.append("failed = " + ", ".join(self.failed))
        return "\n".join(self.lines + tail) + "\n"


# -- input helpers ------------------------------------------------------------------------

def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: cannot read file ({exc.strerror})") from exc


def _load_algebra(path: str | None, rep: Report, flag: str = "--algebra") -> Algebra | None:
    """Parse, build without validation, then report the axioms as a check.

    Returns None when the axioms fail, so the caller stops there.
    """
    if path is None:
        raise InputError(f"{flag} FILE is required")
    spec = parse_algebra(_read(path), path)
    a = spec.build(validate=False)
    rep.kv("algebra" if flag == "--algebra" else flag.lstrip("-"), a.name or Path(path).stem)
    rep.kv("dim" if flag == "--algebra" else f"dim {flag.lstrip('-')}", a.dim)
    try:
        check_axioms(a)
        rep.check(Check("algebra_axioms", True, f"associative and unital on {a.dim ** 3} basis triples"))
        return a
    except AssociativityViolation as exc:
        i, j, l = exc.indices
        rep.check(Check("algebra_axioms", False,
                        f"(b_i b_j) b_l != b_i (b_j b_l) for (b_i, b_j, b_l) = "
                        f"({a.labels[i]}, {a.labels[j]}, {a.labels[l]})"))
    except UnitViolation as exc:
        rep.check(Check("algebra_axioms", False, f"unit fails on {a.labels[exc.index]}"))
    return None


def _idempotent(a: Algebra, text: str | None, path: str) -> list:
    if text is None:
        raise InputError("--idempotent is required for this command")
    try:
        return parse_idempotent(a, text)
    except ValueError as exc:
        raise InputError(f"{path}: --idempotent {text!r}: {exc}") from exc


def _module(a: Algebra, spec: str):
    """regular | simple:LABEL | projective:LABEL (S:/P: abbreviations allowed)."""
    s = spec.strip()
    if s in ("regular", "A"):
        return regular_module(a)
    kind, _, lab = s.partition(":")
    kinds = {"simple": "S", "S": "S", "projective": "P", "P": "P"}
    if kind not in kinds or not lab:
        raise InputError(f"--module {spec!r}: expected regular, simple:LABEL or projective:LABEL")
    try:
        labs = primitive_idempotent_data(a)[0]
    except NonBasicTop as exc:
        raise InputError(f"--module {spec!r}: the algebra is not basic") from exc
    if lab not in labs:
        raise InputError(f"--module {spec!r}: unknown idempotent {lab!r}; known: {', '.join(labs)}")
    idx = labs.index(lab)
    return (simple_modules(a) if kinds[kind] == "S" else indecomposable_projectives(a))[idx]


def _ints(text: str, flag: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise InputError(f"{flag} {text!r}: expected comma separated integers") from exc


def _rationals(text: str, flag: str) -> list:
    try:
        return [to_q(x) for x in text.replace(" ", "").split(",") if x]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{flag} {text!r}: expected comma separated rationals") from exc


def _vec(a: Algebra, v) -> str:
    return a.format_vec(v)


def _ident(rep: Report, key: str, a: Algebra) -> None:
    ok, text = identify_path_algebra(a)
    rep.kv(key, f"{text} (certified)" if ok else f"none ({text})")


# -- commands -------------------------------------------------------------------------------

def cmd_minor(args, rep: Report) -> None:
    b = _load_algebra(args.algebra, rep)
    if b is None:
        return
    e = _idempotent(b, args.idempotent, args.algebra)
    md = minor(b, e)
    rep.kv("idempotent", args.idempotent)
    rep.kv("dim P = Be", md.p_dim)
    rep.kv("dim A = eBe", md.a.dim)
    rep.kv("basis A", ", ".join(md.a.labels))
    _ident(rep, "identification", md.a)
    rep.check(md.endomorphism_check)


def cmd_trace_ideal(args, rep: Report) -> None:
    b = _load_algebra(args.algebra, rep)
    if b is None:
        return
    e = _idempotent(b, args.idempotent, args.algebra)
    md = minor(b, e, verify=False)
    ideal = trace_ideal(md)
    rep.kv("idempotent", args.idempotent)
    rep.kv("dim BeB", ideal.dim)
    rep.kv("basis BeB", "; ".join(_vec(b, v) for v in ideal.basis_vectors()) or "(none)")
    sq = ideal.product(ideal)
    rep.check(Check("trace_ideal_idempotent", sq == ideal, f"dim (BeB)^2 = {sq.dim}, dim BeB = {ideal.dim}"))
    q = quotient_by_trace(md).algebra
    rep.kv("dim B/BeB", q.dim)
    if q.dim:
        rep.kv("basis B/BeB", ", ".join(q.labels))
        _ident(rep, "identification B/BeB", q)


def cmd_recollement(args, rep: Report) -> None:
    b = _load_algebra(args.algebra, rep)
    if b is None:
        return
    e = _idempotent(b, args.idempotent, args.algebra)
    md = minor(b, e)
    r = recollement_report(md, cap=min(args.cap, 6))
    rep.kv("idempotent", args.idempotent)
    rep.kv("dim A", md.a.dim)
    rep.kv("B-modules tested", len(r.b_modules))
    rep.kv("A-modules tested", len(r.a_modules))
    for n in r.notes:
        rep.add(f"note: {n}")
    if b.dim and _basic(b):
        killed = [s.name for s in simple_modules(b) if not any(
            x for row in s.act(e).data for x in row)]
        rep.kv("simples killed by G", ", ".join(killed) or "(none)")
    for c in r.checks:
        rep.check(c)


def _basic(a: Algebra) -> bool:
    try:
        primitive_idempotent_data(a)
        return True
    except NonBasicTop:
        return False


def cmd_gldim(args, rep: Report) -> None:
    a = _load_algebra(args.algebra, rep)
    if a is None:
        return
    g = global_dim(a, args.cap)
    rep.kv("gl.dim", dim_str(g))
    if _basic(a) and a.dim:
        rows = [(s.name, s.dim, dim_str(proj_dim(s, args.cap))) for s in simple_modules(a)]
        rep.table("projective dimensions of simples", ["simple", "dim", "pd"], rows)
    if isinstance(g, AtLeast):
        rep.add(f"note: resolutions did not stop within cap {args.cap}")


def cmd_ext(args, rep: Report) -> None:
    a = _load_algebra(args.algebra, rep)
    if a is None:
        return
    mods = args.module or []
    if len(mods) not in (0, 2):
        raise InputError("ext takes either no --module or exactly two (M then N)")
    upto = min(args.cap, 8)
    if mods:
        pairs = [(_module(a, mods[0]), _module(a, mods[1]))]
    else:
        if not _basic(a):
            raise InputError("ext without --module needs a basic algebra")
        ss = simple_modules(a)
        pairs = [(m, n) for m in ss for n in ss]
    rows = [(m.name, n.name, *ext_dims(m, n, upto)) for m, n in pairs]
    rep.table("dim Ext^i(M, N)", ["M", "N"] + [str(i) for i in range(upto + 1)], rows)


def cmd_inj_dim(args, rep: Report) -> None:
    a = _load_algebra(args.algebra, rep)
    if a is None:
        return
    if args.module:
        mods = [_module(a, s) for s in args.module]
    else:
        if not _basic(a):
            raise InputError("inj-dim without --module needs a basic algebra")
        mods = simple_modules(a) + [regular_module(a)]
    rows, bad = [], None
    for m in mods:
        x, y = inj_dim(m, args.cap), inj_dim_via_dual(m, args.cap)
        rows.append((m.name or "A", dim_str(x), dim_str(y)))
        both_capped = isinstance(x, AtLeast) and isinstance(y, AtLeast)
        if not both_capped and x != y and bad is None:
            bad = f"{m.name}: {dim_str(x)} from Ext(simples, M), {dim_str(y)} from pd of the dual"
    rep.table("injective dimensions", ["module", "inj.dim", "pd D(M)"], rows)
    rep.check(Check("dual_cross_check", bad is None, bad or f"{len(mods)} modules agree"))


def cmd_qhered(args, rep: Report) -> None:
    b = _load_algebra(args.algebra, rep)
    if b is None:
        return
    chain = heredity_chain_search(b, args.cap)
    rep.kv("heredity chain", "found" if chain else "none")
    if chain:
        for line in chain.lines():
            rep.add(line)
        for c in chain.verify(args.cap):
            rep.check(c)
        bounds = chain_bound_checks(b, chain, args.cap)
        for k, v in bounds.values.items():
            if k != "level r":
                rep.kv(k, dim_str(v))
        for c in bounds.checks:
            rep.check(c)
    classical = classical_quasi_hereditary(b, args.cap)
    rep.kv("classical quasi-hereditary", f"yes, level {classical.level}" if classical else "no")


def cmd_gldim_bound(args, rep: Report) -> None:
    b = _load_algebra(args.algebra, rep)
    if b is None:
        return
    if args.idempotent:
        targets = [(args.idempotent, _idempotent(b, args.idempotent, args.algebra))]
    else:
        from .corpus import idempotent_supports
        targets = idempotent_supports(b)
    for name, e in targets:
        r = gldim_bound_check(b, e, args.cap)
        rep.kv("idempotent", name)
        for line in r.lines()[:-len(r.checks)]:
            rep.add("  " + line)
        for c in r.checks:
            rep.check(Check(f"{c.name}[{name}]", c.passed, c.witness))


def cmd_semiorth(args, rep: Report) -> None:
    b = _load_algebra(args.algebra, rep)
    if b is None:
        return
    e = _idempotent(b, args.idempotent, args.algebra)
    rep.kv("idempotent", args.idempotent)
    rep.kv("Ext degrees", f"0..{min(args.cap, 6)}")
    rep.check(semiorthogonality_check(b, e, min(args.cap, 6)))


def cmd_endo(args, rep: Report) -> None:
    a = _load_algebra(args.algebra, rep)
    if a is None:
        return
    spec = (args.module or ["regular"])
    if len(spec) != 1:
        raise InputError("endo takes at most one --module")
    f = _module(a, spec[0])
    big, e = endomorphism_construction(a, f)
    rep.kv("module F", f.name or spec[0])
    rep.kv("dim F", f.dim)
    rep.kv("dim A_F", big.dim)
    rep.kv("basis A_F", ", ".join(big.labels))
    md = minor(big, e)
    rep.check(md.endomorphism_check)
    # the first dim A basis vectors of A_F are the right multiplications by A
    bad = None
    if md.a.dim != a.dim:
        bad = f"dim eA_Fe = {md.a.dim}, dim A = {a.dim}"
    else:
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = big.mul(big.basis_vec(i), big.basis_vec(j))
                rhs = list(a.mul(a.basis_vec(i), a.basis_vec(j))) + [0] * (big.dim - a.dim)
                if lhs != rhs:
                    bad = f"product {a.labels[i]} * {a.labels[j]} not preserved"
                    break
            if bad:
                break
    rep.check(Check("corner_is_A", bad is None, bad or "b -> right multiplication by b is an isomorphism A -> eA_Fe"))
    r = recollement_report(md, cap=min(args.cap, 4))
    for c in r.checks:
        if c.name != "endomorphism_ring":
            rep.check(c)


def _inclusion(text: str | None, a: Algebra, h: Algebra) -> Mat:
    if not text:
        raise InputError("--inclusion is required: images of the basis of A in H, ';' separated")
    cols = [c.split() for c in text.split(";")]
    if len(cols) != a.dim or any(len(c) != h.dim for c in cols):
        raise InputError(f"--inclusion: need {a.dim} columns of length {h.dim}")
    try:
        return Mat.from_columns([[to_q(x) for x in c] for c in cols], h.dim)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"--inclusion: {exc}") from exc


def cmd_glue(args, rep: Report) -> None:
    a = _load_algebra(args.algebra, rep)
    if a is None:
        return
    h = _load_algebra(args.over, rep, flag="--over")
    if h is None:
        return
    inc = _inclusion(args.inclusion, a, h)
    gh = global_dim(h, args.cap)
    rep.kv("gl.dim H", dim_str(gh))
    if isinstance(gh, AtLeast) or gh > 1:
        raise InputError(f"{args.over}: H must be hereditary, gl.dim H = {dim_str(gh)}")
    g = subhereditary_glue(a, h, inc)
    alg = g.algebra
    rep.kv("dim conductor", len(g.conductor))
    rep.kv("basis conductor", "; ".join(_vec(a, v) for v in g.conductor) or "(none)")
    rep.kv("dim A_H", alg.dim)
    flags = is_heredity_ideal(alg, g.p_idempotent, args.cap)
    for line in flags.lines():
        rep.add("  " + line)
    rep.check(Check("heredity_step", flags.is_heredity,
                    "idempotent [[0,0],[0,1]] generates a heredity ideal" if flags.is_heredity
                    else "idempotent [[0,0],[0,1]] fails the heredity conditions"))
    gd = global_dim(alg, args.cap)
    rep.kv("gl.dim A_H", dim_str(gd))
    ok = not isinstance(gd, AtLeast) and gd <= 2
    rep.check(Check("gldim_at_most_2", ok, f"gl.dim A_H = {dim_str(gd)}"))


def _curve(args, rep: Report):
    if not args.curve:
        raise InputError("--curve FILE is required")
    c = load_curve(args.curve)
    rep.kv("curve", c.name or Path(args.curve).stem)
    for line in c.describe():
        rep.add(line)
    return c


def _expected_h0(curve, src, tgt) -> int:
    """The case analysis for pairs from the tilting set."""
    lo = curve.L_minus_o()
    L = curve.L()
    if src == tgt:
        return 1
    if src == lo and tgt == L:
        return 2
    if src == lo and tgt.indices:
        return 1
    if src.indices and tgt == L:
        return 1
    if src.indices and tgt.indices and src.indices[0][0] == tgt.indices[0][0]:
        return 1 if src.indices[0][1] > tgt.indices[0][1] else 0
    return 0


def cmd_curve_hom_table(args, rep: Report) -> None:
    c = _curve(args, rep)
    objs = tilting_set(c)
    names = [o.name for o in objs]
    h0 = [[hom_and_ext_dims(c, s, t)[0] for t in objs] for s in objs]
    h1 = [[hom_and_ext_dims(c, s, t)[1] for t in objs] for s in objs]
    rep.kv("tilting set", ", ".join(names))
    rep.table("h0 = dim Hom(row, column)", ["src\\tgt"] + names, [[n] + r for n, r in zip(names, h0)])
    rep.table("h1 = dim Ext^1(row, column)", ["src\\tgt"] + names, [[n] + r for n, r in zip(names, h1)])
    bad = [(s.name, t.name) for i, s in enumerate(objs) for j, t in enumerate(objs) if h1[i][j]]
    rep.check(Check("ext_vanishing", not bad, f"Ext^1 nonzero on {bad}" if bad else
                    f"h1 = 0 on all {len(objs) ** 2} ordered pairs"))
    bad = [(s.name, t.name, h0[i][j], _expected_h0(c, s, t)) for i, s in enumerate(objs)
           for j, t in enumerate(objs) if h0[i][j] != _expected_h0(c, s, t)]
    rep.check(Check("hom_case_table", not bad, f"mismatches {bad}" if bad else
                    "h0 agrees with the case analysis (1, 2 or 0) on every pair"))


def cmd_curve_tilting(args, rep: Report) -> None:
    c = _curve(args, rep)
    end_t, lab = tilting_endomorphism_algebra(c)
    rep.kv("tilting set", ", ".join(o.name for o in lab.objects))
    rep.kv("dim End(T)", end_t.dim)
    rep.check(Check("ext_vanishing", True, "h1 = 0 on every ordered pair of the tilting set"))
    try:
        check_axioms(end_t)
        rep.check(Check("end_algebra_axioms", True, "composition table associative and unital"))
    except (AssociativityViolation, UnitViolation) as exc:
        rep.check(Check("end_algebra_axioms", False, str(exc)))
        return
    for p in c.points:
        thetas, total = theta_maps(c, p.xi)
        rep.kv(f"theta at {fmt_point(p.xi)}", ", ".join(str(t) for t in thetas) + f"; composite {total}")
    try:
        m = match_canonical(end_t, lab)
    except NotCanonicalShape as exc:
        rep.check(Check("canonical_match", False, str(exc)))
        return
    for line in m.lines():
        rep.add(line)
    rep.check(Check("canonical_match", True,
                    f"End(T)^op = {m.presentation.name} by basis-path identification"))


def cmd_curve_local_order(args, rep: Report) -> None:
    if args.composition:
        comps = [("composition", tuple(_ints(args.composition, "--composition")))]
    else:
        c = _curve(args, rep)
        comps = [(f"point {fmt_point(p.xi)}", p.composition) for p in c.points]
    for where, comp in comps:
        order = local_order(comp)
        rep.kv(where, ",".join(map(str, comp)))
        rep.kv("  Morita canonical form", ",".join(map(str, morita_canonical_form(comp))))
        rep.table("valuation pattern of H", ["row"] + [str(j) for j in range(order.n)],
                  [[i] + list(r) for i, r in enumerate(order.pattern)])
        lattices, simples = local_projectives_and_simples(order)
        rep.table("lattice chain", ["i", "valuations"],
                  [(l.index, ",".join(map(str, l.valuation))) for l in lattices])
        rep.table("simples U_i = L_i/L_{i+1}", ["i", "dim", "pd"],
                  [(s.index, s.dim, s.projective_dimension) for s in simples])
        bad = [s for s in simples if s.projective_dimension != 1]
        rep.check(Check(f"pd_simples_equal_1[{','.join(map(str, comp))}]", not bad,
                        bad[0].certificate if bad else f"{len(simples)} non-split sequences of lattices"))


def cmd_canonical(args, rep: Report) -> None:
    if args.curve:
        c = _curve(args, rep)
        end_t, lab = tilting_endomorphism_algebra(c)
        try:
            m = match_canonical(end_t, lab)
        except NotCanonicalShape as exc:
            rep.check(Check("canonical_match", False, str(exc)))
            return
        pres = m.presentation
        for line in m.lines():
            rep.add(line)
        rep.check(Check("canonical_match", True, f"End(T)^op = {pres.name}"))
        if args.algebra:
            other = _load_algebra(args.algebra, rep)
            if other is None:
                return
            try:
                compare_presentation(end_t, m, other)
                rep.check(Check("presentation_matches_end_T", True,
                                f"{other.name or args.algebra} = End(T)^op on all basis paths"))
            except NotCanonicalShape as exc:
                rep.check(Check("presentation_matches_end_T", False, str(exc)))
        return
    if not args.weights:
        raise InputError("canonical needs --weights (with --lambdas) or --curve")
    pres = canonical_algebra(_ints(args.weights, "--weights"),
                             _rationals(args.lambdas or "", "--lambdas"))
    a = pres.algebra()
    rep.kv("algebra", pres.name)
    rep.kv("vertices", ", ".join(pres.quiver.vertices))
    rep.kv("arrows", ", ".join(f"{x.label}: {x.source} -> {x.target}" for x in pres.quiver.arrows))
    for rel in pres.quiver.relations:
        rep.kv("relation", " ".join(f"{'+' if c > 0 else '-'} {fmt_q(abs(c))} {'.'.join(p)}"
                                    for c, p in rel) + " = 0")
    rep.kv("dim", a.dim)
    rep.kv("gl.dim", dim_str(global_dim(a, args.cap)))
    rep.kv("basis", ", ".join(a.labels))


HANDLERS = {
    "minor": cmd_minor, "trace-ideal": cmd_trace_ideal, "recollement": cmd_recollement,
    "gldim": cmd_gldim, "ext": cmd_ext, "inj-dim": cmd_inj_dim, "qhered": cmd_qhered,
    "gldim-bound": cmd_gldim_bound, "semiorth": cmd_semiorth, "endo": cmd_endo,
    "glue": cmd_glue, "curve-hom-table": cmd_curve_hom_table,
    "curve-tilting": cmd_curve_tilting, "curve-local-order": cmd_curve_local_order,
    "canonical": cmd_canonical,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ncminors", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--algebra", metavar="FILE")
    p.add_argument("--curve", metavar="FILE")
    p.add_argument("--idempotent", metavar="E", help='sum of primitive idempotent labels, e.g. "e1+e2"')
    p.add_argument("--cap", type=int, default=12, help="resolution length cap (default 12)")
    p.add_argument("--module", action="append", metavar="SPEC",
                   help="regular, simple:LABEL or projective:LABEL (repeatable)")
    p.add_argument("--over", metavar="FILE", help="glue: the hereditary over-algebra H")
    p.add_argument("--inclusion", metavar="COLS", help='glue: images of the basis of A in H, "1 1 0; 0 0 1"')
    p.add_argument("--composition", metavar="N1,N2,...", help="curve-local-order: a single composition")
    p.add_argument("--weights", metavar="K1,K2,...", help="canonical: arm lengths")
    p.add_argument("--lambdas", metavar="L3,...", help="canonical: parameters")
    p.add_argument("--out", metavar="FILE", help="write the report to FILE instead of standard output")
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if args.cap < 1:
        print("error: --cap must be positive", file=sys.stderr)
        return 2
    rep = Report(args.command)
    try:
        HANDLERS[args.command](args, rep)
    except (InputError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NcMinorsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    text = rep.text()
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"error: {args.out}: cannot write ({exc.strerror})", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 1 if rep.failed else 0


def main() -> None:
    sys.exit(run())
