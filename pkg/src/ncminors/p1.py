"""Points, divisors and rational functions on the projective line over Q.

A point is either a rational number or the string ``"inf"``.  Sections of
O(D) are the rational functions f in Q(t) with div(f) + D >= 0; they are
computed in a fixed partial-fraction frame so that bases are canonical.
Polynomials are coefficient lists (highest degree first) handled by the
dense routines of sympy over QQ.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable, Mapping

from sympy.polys.densearith import dup_add, dup_div, dup_mul, dup_mul_ground, dup_neg
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_gcd

from .exactla import ONE, ZERO, Mat, Q, fmt_q, rref, solve, to_q

INF = "inf"

__all__ = ["INF", "parse_point", "point_key", "fmt_point", "Divisor", "RationalFunction",
           "sections", "SectionSpace"]


def parse_point(text) -> object:
    if isinstance(text, str) and text.strip().lower() in ("inf", "infinity", "oo"):
        return INF
    return to_q(text)


def point_key(p) -> tuple:
    """Sort key: finite points by value, then infinity."""
    return (1, ZERO) if p == INF else (0, Q(p))


def fmt_point(p) -> str:
    return "inf" if p == INF else fmt_q(p)


class Divisor:
    """A finite integer combination of points."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        out: dict = {}
        for p, m in items:
            p = INF if p == INF else Q(p)
            out[p] = out.get(p, 0) + int(m)
        self.coeffs = {p: m for p, m in out.items() if m}

    @classmethod
    def point(cls, p, m: int = 1) -> "Divisor":
        return cls([(p, m)])

    @property
    def degree(self) -> int:
        return sum(self.coeffs.values())

    def __getitem__(self, p) -> int:
        return self.coeffs.get(INF if p == INF else Q(p), 0)

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor(list(self.coeffs.items()) + list(other.coeffs.items()))

    def __neg__(self) -> "Divisor":
        return Divisor({p: -m for p, m in self.coeffs.items()})

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Divisor) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items(), key=lambda kv: point_key(kv[0]))))

    def items(self) -> list:
        return sorted(self.coeffs.items(), key=lambda kv: point_key(kv[0]))

    def positive_part(self) -> "Divisor":
        return Divisor({p: m for p, m in self.coeffs.items() if m > 0})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for p, m in self.items():
            name = f"[{fmt_point(p)}]"
            parts.append(name if m == 1 else f"-{name}" if m == -1 else f"{m}{name}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


# -- polynomials ----------------------------------------------------------------------

def _strip(p: list) -> list:
    i = 0
    while i < len(p) and not p[i]:
        i += 1
    return p[i:]


def _linear(xi) -> list:
    return [ONE, -Q(xi)]


def _power(p: list, k: int) -> list:
    out = [ONE]
    for _ in range(k):
        out = dup_mul(out, p, QQ)
    return out


def _exact_div(p: list, q: list) -> list | None:
    quo, rem = dup_div(p, q, QQ)
    return None if _strip(list(rem)) else [Q(c) for c in quo]


def _fmt_poly(p: list, var: str = "t") -> str:
    p = _strip(p)
    if not p:
        return "0"
    terms = []
    deg = len(p) - 1
    for i, c in enumerate(p):
        if not c:
            continue
        e = deg - i
        mono = "" if e == 0 else var if e == 1 else f"{var}^{e}"
        if mono and c == 1:
            s = mono
        elif mono and c == -1:
            s = "-" + mono
        else:
            s = fmt_q(c) + ("*" + mono if mono else "")
        terms.append(s)
    return " + ".join(terms).replace("+ -", "- ")


class RationalFunction:
    """num/den in Q(t), stored reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Iterable, den: Iterable = (1,)):
        num = _strip([Q(c) for c in num])
        den = _strip([Q(c) for c in den])
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = [], [ONE]
            return
        g = dup_gcd(num, den, QQ)
        if len(g) > 1:
            num = _exact_div(num, g)
            den = _exact_div(den, g)
        lead = den[0]
        self.num = [Q(c) / lead for c in num]
        self.den = [Q(c) / lead for c in den]

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        return cls([to_q(c)])

    @classmethod
    def monomial(cls, k: int) -> "RationalFunction":
        return cls([ONE] + [ZERO] * k)

    @classmethod
    def pole(cls, xi, j: int) -> "RationalFunction":
        """(t - xi)^(-j)."""
        return cls([ONE], _power(_linear(xi), j))

    def is_zero(self) -> bool:
        return not self.num

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            return RationalFunction(dup_mul_ground(self.num, Q(other), QQ), self.den)
        return RationalFunction(dup_mul(self.num, other.num, QQ), dup_mul(self.den, other.den, QQ))

    __rmul__ = __mul__

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        num = dup_add(dup_mul(self.num, other.den, QQ), dup_mul(other.num, self.den, QQ), QQ)
        return RationalFunction(num, dup_mul(self.den, other.den, QQ))

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(dup_neg(self.num, QQ), self.den)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalFunction) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((tuple(self.num), tuple(self.den)))

    def order_at(self, p) -> int | float:
        """Valuation at p (zero order positive, pole order negative)."""
        if self.is_zero():
            return float("inf")
        if p == INF:
            return (len(self.den) - 1) - (len(self.num) - 1)
        lin = _linear(p)

        def mult(poly):
            k = 0
            while True:
                q = _exact_div(poly, lin)
                if q is None:
                    return k
                poly, k = q, k + 1
        return mult(self.num) - mult(self.den)

    def __str__(self) -> str:
        n = _fmt_poly(self.num)
        if len(self.den) == 1:
            return n
        d = _fmt_poly(self.den)
        if len([c for c in self.num if c]) > 1:
            n = f"({n})"
        if len([c for c in self.den if c]) > 1 or "^" in d:
            d = f"({d})"
        return f"{n}/{d}"

    __repr__ = __str__


def satisfies(f: RationalFunction, d: Divisor) -> tuple[bool, object]:
    """Whether div(f) + D >= 0; returns the first offending point otherwise."""
    if f.is_zero():
        return True, None
    cands = set(d.coeffs) | {INF}
    # finite poles of f are roots of its denominator; test the candidate points
    for p in sorted(cands, key=point_key):
        if f.order_at(p) < -d[p]:
            return False, p
    # any other pole must be a root of the denominator not among the candidates
    den = f.den
    for p in cands:
        if p != INF:
            while True:
                q = _exact_div(den, _linear(p))
                if q is None:
                    break
                den = q
    if len(den) > 1:
        return False, "a pole outside the divisor support"
    return True, None


class SectionSpace:
    """Global sections of O(D) with a canonical basis.

    Every section lies in the space of D+ (positive part of D), which has the
    partial-fraction frame {t^k : k <= D+(inf)} + {(t - p)^(-j) : j <= D(p)}.
    The basis of O(D) is the reduced echelon form of its frame coordinates,
    pivoting on high powers of t first and on deep poles next.
    """

    def __init__(self, d: Divisor):
        self.divisor = d
        self.deg = d.degree
        pos = d.positive_part()
        self.m_inf = pos[INF]
        self.poles = [(p, m) for p, m in pos.items() if p != INF]
        # frame entries as (kind, point, power)
        self.frame = [("t", None, k) for k in range(self.m_inf + 1)]
        for p, m in self.poles:
            self.frame += [("pole", p, j) for j in range(1, m + 1)]
        self.delta = reduce(lambda a, b: dup_mul(a, b, QQ),
                            [_power(_linear(p), m) for p, m in self.poles], [ONE])
        self._frame_matrix = None
        self.basis: list[RationalFunction] = []
        self._pivots: list[int] = []
        self._rows: list[list] = []
        if self.deg >= 0:
            self._build()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _frame_function(self, idx: int) -> RationalFunction:
        kind, p, k = self.frame[idx]
        return RationalFunction.monomial(k) if kind == "t" else RationalFunction.pole(p, k)

    def _frame_poly(self, f: RationalFunction) -> list | None:
        prod = _exact_div(dup_mul(f.num, self.delta, QQ), f.den)
        if prod is None:
            return None
        size = len(self.frame)
        prod = _strip(prod)
        if len(prod) > size:
            return None
        return [ZERO] * (size - len(prod)) + prod

    def frame_coords(self, f: RationalFunction) -> list | None:
        """Coordinates of f in the frame, or None if f is not a section of O(D+)."""
        if self._frame_matrix is None:
            cols = [self._frame_poly(self._frame_function(i)) for i in range(len(self.frame))]
            self._frame_matrix = Mat.from_columns(cols, len(self.frame))
        b = self._frame_poly(f)
        if b is None:
            return None
        return solve(self._frame_matrix, b)

    def _column_order(self) -> list[int]:
        # pivot preference: highest power of t, then poles by point and depth
        order = [i for i in reversed(range(self.m_inf + 1))]
        start = self.m_inf + 1
        for p, m in self.poles:
            order += [start + j for j in reversed(range(m))]
            start += m
        return order

    def _build(self) -> None:
        num = reduce(lambda a, b: dup_mul(a, b, QQ),
                     [_power(_linear(p), -m) for p, m in self.divisor.items()
                      if p != INF and m < 0], [ONE])
        h = RationalFunction(num, self.delta)
        span = [h * RationalFunction.monomial(k) for k in range(self.deg + 1)]
        order = self._column_order()
        rows = []
        for f in span:
            c = self.frame_coords(f)
            if c is None:
                raise ArithmeticError("section outside the partial-fraction frame")
            rows.append([c[i] for i in order])
        red, piv = rref(Mat.from_rows(rows, len(order)))
        basis = []
        for r, pc in enumerate(piv):
            coords = [ZERO] * len(order)
            for j, i in enumerate(order):
                coords[i] = red.data[r][j]
            basis.append((order[pc], coords))
        # presentation order: polynomial part by ascending degree, then poles
        basis.sort(key=lambda t: t[0])
        self._pivots = [p for p, _ in basis]
        self._rows = [c for _, c in basis]
        self.basis = [self._combine(c) for c in self._rows]

    def _combine(self, coords: list) -> RationalFunction:
        out = RationalFunction([])
        for i, c in enumerate(coords):
            if c:
                out = out + self._frame_function(i) * c
        return out

    def contains(self, f: RationalFunction) -> bool:
        return self.coords(f) is not None

    def coords(self, f: RationalFunction) -> list | None:
        """Coordinates in :attr:`basis`, or None when f is not a section."""
        ok, _ = satisfies(f, self.divisor)
        if not ok:
            return None
        if f.is_zero():
            return [ZERO] * self.dim
        c = self.frame_coords(f)
        if c is None:
            return None
        out = [c[p] for p in self._pivots]
        check = [sum((x * row[i] for x, row in zip(out, self._rows)), ZERO)
                 for i in range(len(self.frame))]
        return out if check == list(c) else None


def sections(d: Divisor) -> list[RationalFunction]:
    return SectionSpace(d).basis
