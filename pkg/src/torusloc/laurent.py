"""Sparse Laurent polynomials and rational functions over prod (1 - t^nu)^m.

Coefficients are rationals (kept as ``int`` while they stay integral) or
``Coefficient`` objects that are affine-linear in named unknowns.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from . import linalg
from .weights import Weight, as_weight, unimodular_to_axis

Exps = tuple[int, ...]


class Coefficient:
    """constant + sum of coeff * symbol, with products capped at degree one."""

    __slots__ = ("constant", "linear")

    def __init__(self, constant=0, linear: Mapping[str, Rational] | None = None):
        self.constant = Fraction(constant)
        lin = {}
        for s, c in (linear or {}).items():
            c = Fraction(c)
            if c:
                lin[s] = c
        self.linear = dict(sorted(lin.items()))

    @classmethod
    def symbol(cls, name: str) -> "Coefficient":
        return cls(0, {name: 1})

    @staticmethod
    def lift(x) -> "Coefficient":
        return x if isinstance(x, Coefficient) else Coefficient(x)

    def simplify(self):
        """Plain rational when no unknowns remain."""
        if self.linear:
            return self
        c = self.constant
        return int(c) if c.denominator == 1 else c

    def __add__(self, other):
        o = Coefficient.lift(other)
        lin = dict(self.linear)
        for s, c in o.linear.items():
            lin[s] = lin.get(s, 0) + c
        return Coefficient(self.constant + o.constant, lin).simplify()

    __radd__ = __add__

    def __neg__(self):
        return Coefficient(-self.constant, {s: -c for s, c in self.linear.items()})

    def __sub__(self, other):
        return self + (-Coefficient.lift(other))

    def __rsub__(self, other):
        return Coefficient.lift(other) - self

    def __mul__(self, other):
        o = Coefficient.lift(other)
        if self.linear and o.linear:
            raise ArithmeticError("product of two coefficients with unknowns is not affine-linear")
        if o.linear:
            self, o = o, self
        k = o.constant
        return Coefficient(self.constant * k, {s: c * k for s, c in self.linear.items()}).simplify()

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.constant) or bool(self.linear)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return not self.linear and self.constant == other
        if isinstance(other, Coefficient):
            return self.constant == other.constant and self.linear == other.linear
        return NotImplemented

    def __hash__(self):
        return hash((self.constant, tuple(self.linear.items())))

    def substitute(self, values: Mapping[str, Rational]) -> Fraction:
        missing = set(self.linear) - set(values)
        if missing:
            raise KeyError(f"no value for {sorted(missing)}")
        return self.constant + sum((c * Fraction(values[s]) for s, c in self.linear.items()), Fraction(0))

    def __str__(self) -> str:
        parts = []
        for s, c in self.linear.items():
            if c == 1:
                parts.append(s)
            elif c == -1:
                parts.append(f"-{s}")
            else:
                parts.append(f"{c}*{s}")
        if self.constant or not parts:
            parts.append(str(self.constant))
        return "(" + " + ".join(parts).replace("+ -", "- ") + ")"

    __repr__ = __str__

    def to_json(self):
        return {"constant": str(self.constant), "linear": {s: str(c) for s, c in self.linear.items()}}


def _has_unknowns(c) -> bool:
    return isinstance(c, Coefficient) and bool(c.linear)


def _coeff_json(c):
    return c.to_json() if isinstance(c, Coefficient) else str(c)


def _coeff_from_json(data):
    if isinstance(data, dict):
        return Coefficient(Fraction(data["constant"]), {s: Fraction(v) for s, v in data["linear"].items()}).simplify()
    c = Fraction(data)
    return int(c) if c.denominator == 1 else c


class LaurentPoly:
    """Finite sum of coeff * t^e over integer exponent vectors e."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Sequence[int], object] | None = None):
        self.rank = rank
        clean: dict[Exps, object] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != rank:
                raise ValueError(f"exponent {e} does not have rank {rank}")
            if c:
                clean[e] = c
        self.terms = clean

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "LaurentPoly":
        exps = tuple(int(x) for x in exps)
        return cls(len(exps), {exps: coeff})

    @classmethod
    def constant(cls, rank: int, c=1) -> "LaurentPoly":
        return cls(rank, {(0,) * rank: c})

    @classmethod
    def zero(cls, rank: int) -> "LaurentPoly":
        return cls(rank, {})

    def _check(self, other: "LaurentPoly") -> None:
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.constant(self.rank, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly(self.rank, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return LaurentPoly(self.rank, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[Exps, object] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out[e] + c1 * c2
        return LaurentPoly(self.rank, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        out = LaurentPoly.constant(self.rank)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        return LaurentPoly(self.rank, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            if self.rank is not None:
                other = LaurentPoly.constant(self.rank, other)
            else:
                return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def has_unknowns(self) -> bool:
        return any(_has_unknowns(c) for c in self.terms.values())

    def unknowns(self) -> set[str]:
        out = set()
        for c in self.terms.values():
            if isinstance(c, Coefficient):
                out |= set(c.linear)
        return out

    def min_exponents(self) -> Exps:
        if not self.terms:
            return (0,) * self.rank
        return tuple(min(e[i] for e in self.terms) for i in range(self.rank))

    def transform(self, matrix: Sequence[Sequence[int]]) -> "LaurentPoly":
        """Apply the linear map e -> matrix . e to every exponent."""
        out: dict[Exps, object] = defaultdict(int)
        for e, c in self.terms.items():
            ne = tuple(sum(a * b for a, b in zip(row, e)) for row in matrix)
            out[ne] = out[ne] + c
        return LaurentPoly(len(matrix), out)

    def specialize(self, lam: Sequence[int]) -> "LaurentPoly":
        return self.transform([list(lam)])

    def value_at_one(self):
        """Sum of coefficients, i.e. the value at t = (1, ..., 1)."""
        return sum(self.terms.values(), 0)

    def substitute(self, values: Mapping[str, Rational]) -> "LaurentPoly":
        return LaurentPoly(
            self.rank,
            {e: (c.substitute(values) if isinstance(c, Coefficient) else c) for e, c in self.terms.items()},
        )

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(tuple(int(x) for x in exps), 0)

    def sorted_terms(self) -> list[tuple[Exps, object]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for e, c in self.sorted_terms():
            mono = _mono_str(e)
            if isinstance(c, Coefficient):
                sign, body = _coefficient_str(c)
                body = f"{body}*{mono}" if mono else body
            else:
                sign = "-" if c < 0 else "+"
                a = -c if c < 0 else c
                body = (mono if a == 1 else f"{a}*{mono}") if mono else str(a)
            if not out:
                out = body if sign == "+" else "-" + body
            else:
                out += f" {sign} {body}"
        return out

    __repr__ = __str__

    def to_json(self) -> list:
        return [{"exp": list(e), "coeff": _coeff_json(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, rank: int, data: list) -> "LaurentPoly":
        return cls(rank, {tuple(t["exp"]): _coeff_from_json(t["coeff"]) for t in data})


def _coefficient_str(c: Coefficient) -> tuple[str, str]:
    """Sign and body; a lone unknown prints bare, anything else in parentheses."""
    if not c.constant and len(c.linear) == 1:
        (s, v), = c.linear.items()
        if abs(v) == 1:
            return ("-" if v < 0 else "+"), s
    return "+", str(c)


def _mono_str(e: Exps) -> str:
    if not any(e):
        return ""
    if len(e) == 1:
        return "t" if e[0] == 1 else f"t^{e[0]}"
    return "t^(" + ",".join(str(x) for x in e) + ")"


def _positive(nu: Exps) -> bool:
    return next(x for x in nu if x) > 0


class NotDivisible(ArithmeticError):
    def __init__(self, nu: Sequence[int]):
        self.nu = tuple(nu)
        super().__init__(f"numerator is not divisible by (1 - t^{self.nu})")


@lru_cache(maxsize=4096)
def _axis_change(nu: Exps) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...], int]:
    u = unimodular_to_axis(Weight(nu))
    inv = linalg.inverse(u)
    g = linalg.primitive_int(nu)
    scale = next(a // b for a, b in zip(nu, g) if b)
    return tuple(map(tuple, u)), tuple(tuple(int(x) for x in row) for row in inv), scale


def divide_by_factor(p: LaurentPoly, nu) -> tuple[LaurentPoly | None, bool]:
    """Exact division of p by (1 - t^nu), via a unimodular change of exponents."""
    nu = tuple(as_weight(nu).ints())
    if not any(nu):
        raise ValueError("cannot divide by 1 - t^0")
    if len(nu) != p.rank:
        raise ValueError("rank mismatch")
    if p.is_zero():
        return p, True
    u, uinv, g = _axis_change(nu)
    # in the new exponents t^nu = s_1^g; g > 0 because U sends the primitive part to e_1
    q = p.transform(u)
    groups: dict[Exps, dict[int, object]] = defaultdict(dict)
    for e, c in q.terms.items():
        groups[e[1:]][e[0]] = c
    quotient: dict[Exps, object] = {}
    for rest, uni in groups.items():
        top = max(uni)
        remaining = dict(uni)
        while remaining:
            a = min(remaining)
            c = remaining.pop(a)
            if a + g > top:
                return None, False
            quotient[(a,) + rest] = c
            v = remaining.get(a + g, 0) + c
            if v:
                remaining[a + g] = v
            else:
                remaining.pop(a + g, None)
    return LaurentPoly(q.rank, quotient).transform(uinv), True


@dataclass(frozen=True)
class LinearEquation:
    """sum coeffs[s] * s = rhs"""

    coeffs: tuple[tuple[str, Fraction], ...]
    rhs: Fraction

    @classmethod
    def from_coefficient(cls, c) -> "LinearEquation":
        c = Coefficient.lift(c)
        items = list(c.linear.items())
        rhs = -c.constant
        if items and items[0][1] < 0:
            items = [(s, -v) for s, v in items]
            rhs = -rhs
        return cls(tuple(items), rhs)

    def holds(self, values: Mapping[str, Rational]) -> bool:
        return sum((v * Fraction(values[s]) for s, v in self.coeffs), Fraction(0)) == self.rhs

    def is_trivial(self) -> bool:
        return not self.coeffs and self.rhs == 0

    def __str__(self) -> str:
        if not self.coeffs:
            return f"0 = {self.rhs}"
        parts = []
        for s, v in self.coeffs:
            term = s if abs(v) == 1 else f"{abs(v)}{s}"
            parts.append(("- " if v < 0 else "+ ") + term)
        lhs = " ".join(parts)
        lhs = lhs[2:] if lhs.startswith("+ ") else "-" + lhs[2:]
        return f"{lhs} = {self.rhs}"

    def to_json(self) -> dict:
        return {"coeffs": {s: str(v) for s, v in self.coeffs}, "rhs": str(self.rhs)}


class RationalFn:
    """t^prefactor * numerator / prod (1 - t^nu)^m, every nu positive.

    "Positive" means the first nonzero coordinate is positive; factors with
    negative nu are rewritten as (1 - t^-nu) = -t^-nu (1 - t^nu) on entry.
    The numerator is kept with componentwise minimal exponent zero.
    """

    __slots__ = ("rank", "numerator", "denominator", "prefactor")

    def __init__(self, numerator: LaurentPoly, factors: Iterable[tuple[Sequence[int], int]] = (), prefactor: Sequence[int] | None = None):
        rank = numerator.rank
        num = numerator
        pre = [0] * rank if prefactor is None else [int(x) for x in prefactor]
        den: dict[Exps, int] = defaultdict(int)
        for nu, m in factors:
            nu = tuple(as_weight(nu).ints()) if not isinstance(nu, tuple) else tuple(int(x) for x in nu)
            if len(nu) != rank:
                raise ValueError("factor rank mismatch")
            if not any(nu):
                raise ValueError("zero weight in the denominator")
            if m <= 0:
                raise ValueError("factor multiplicities must be positive")
            if not _positive(nu):
                num = num * (-1) ** m
                pre = [p - m * x for p, x in zip(pre, nu)]
                nu = tuple(-x for x in nu)
            den[nu] += m
        shift = num.min_exponents()
        if any(shift):
            num = num.shift([-s for s in shift])
            pre = [p + s for p, s in zip(pre, shift)]
        if num.is_zero():
            pre = [0] * rank
            den = {}
        self.rank = rank
        self.numerator = num
        self.denominator = dict(sorted(den.items()))
        self.prefactor = tuple(pre)

    @classmethod
    def point_term(cls, mu: Sequence[int], compass: Iterable[tuple[Sequence[int], int]], coeff=1) -> "RationalFn":
        mu = tuple(int(x) for x in mu)
        return cls(LaurentPoly.monomial(mu, coeff), compass)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFn":
        return cls(p)

    def factors(self) -> list[tuple[Exps, int]]:
        return list(self.denominator.items())

    def full_numerator(self) -> LaurentPoly:
        return self.numerator.shift(self.prefactor)

    def denominator_poly(self) -> LaurentPoly:
        out = LaurentPoly.constant(self.rank)
        for nu, m in self.denominator.items():
            out = out * (LaurentPoly.constant(self.rank) - LaurentPoly.monomial(nu)) ** m
        return out

    def has_unknowns(self) -> bool:
        return self.numerator.has_unknowns()

    def __add__(self, other: "RationalFn") -> "RationalFn":
        return add(self, other)

    def __mul__(self, other) -> "RationalFn":
        if isinstance(other, RationalFn):
            if other.rank != self.rank:
                raise ValueError("rank mismatch")
            factors = list(self.denominator.items()) + list(other.denominator.items())
            pre = [a + b for a, b in zip(self.prefactor, other.prefactor)]
            return RationalFn(self.numerator * other.numerator, factors, pre)
        if isinstance(other, LaurentPoly):
            return RationalFn(self.numerator * other, self.denominator.items(), self.prefactor)
        return RationalFn(self.numerator * other, self.denominator.items(), self.prefactor)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFn):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.denominator == other.denominator
            and self.prefactor == other.prefactor
            and self.numerator == other.numerator
        )

    def equivalent(self, other: "RationalFn") -> bool:
        """Equality as functions, comparing cross-multiplied numerators."""
        lhs = self.full_numerator() * other.denominator_poly()
        rhs = other.full_numerator() * self.denominator_poly()
        return lhs == rhs

    def substitute(self, values: Mapping[str, Rational]) -> "RationalFn":
        return RationalFn(self.numerator.substitute(values), self.denominator.items(), self.prefactor)

    def __str__(self) -> str:
        pre = _mono_str(self.prefactor)
        num = str(self.numerator)
        if num == "1" and pre:
            top = pre
        elif pre:
            top = f"{pre} ({num})"
        else:
            top = num if len(self.numerator.terms) <= 1 else f"({num})"
        if not self.denominator:
            return top
        parts = []
        for nu, m in self.denominator.items():
            f = f"(1-{_mono_str(nu)})"
            parts.append(f + (f"^{m}" if m > 1 else ""))
        bottom = parts[0] if len(parts) == 1 else "(" + " ".join(parts) + ")"
        return f"{top}/{bottom}"

    __repr__ = __str__

    def to_json(self) -> dict:
        return {
            "numerator": self.numerator.to_json(),
            "denominator_factors": [{"nu": list(nu), "mult": m} for nu, m in self.denominator.items()],
            "monomial_prefactor": list(self.prefactor),
        }


def add(f: RationalFn, g: RationalFn) -> RationalFn:
    if f.rank != g.rank:
        raise ValueError("rank mismatch")
    if f.numerator.is_zero():
        return g
    if g.numerator.is_zero():
        return f
    den = dict(f.denominator)
    for nu, m in g.denominator.items():
        den[nu] = max(den.get(nu, 0), m)
    one = LaurentPoly.constant(f.rank)

    def lift(h: RationalFn) -> LaurentPoly:
        num = h.full_numerator()
        for nu, m in den.items():
            extra = m - h.denominator.get(nu, 0)
            if extra:
                num = num * (one - LaurentPoly.monomial(nu)) ** extra
        return num

    return RationalFn(lift(f) + lift(g), den.items())


def sum_all(terms: Iterable[RationalFn], rank: int) -> RationalFn:
    """Sum over a common denominator in one pass."""
    terms = list(terms)
    if not terms:
        return RationalFn(LaurentPoly.zero(rank))
    den: dict[Exps, int] = {}
    for t in terms:
        for nu, m in t.denominator.items():
            den[nu] = max(den.get(nu, 0), m)
    one = LaurentPoly.constant(rank)
    cache: dict[tuple[Exps, int], LaurentPoly] = {}

    def power(nu: Exps, k: int) -> LaurentPoly:
        if (nu, k) not in cache:
            cache[(nu, k)] = (one - LaurentPoly.monomial(nu)) ** k
        return cache[(nu, k)]

    total = LaurentPoly.zero(rank)
    for t in terms:
        num = t.full_numerator()
        for nu, m in den.items():
            extra = m - t.denominator.get(nu, 0)
            if extra:
                num = num * power(nu, extra)
        total = total + num
    return RationalFn(total, den.items())


def to_laurent(f: RationalFn, order: Sequence[Exps] | None = None) -> LaurentPoly:
    """Cancel every denominator factor; raises NotDivisible on the first failure."""
    if f.has_unknowns():
        raise ValueError("to_laurent needs numeric coefficients; substitute the unknowns first")
    num = f.numerator
    factors = list(f.denominator.items())
    if order is not None:
        rank_of = {nu: i for i, nu in enumerate(order)}
        factors.sort(key=lambda item: rank_of.get(item[0], len(rank_of)))
    for nu, m in factors:
        for _ in range(m):
            num, ok = divide_by_factor(num, nu)
            if not ok:
                raise NotDivisible(nu)
    return num.shift(f.prefactor)


def cancel_factors(f: RationalFn) -> RationalFn:
    """Divide out every denominator factor that divides the numerator."""
    num = f.numerator
    left = []
    for nu, m in f.denominator.items():
        k = 0
        while k < m:
            q, ok = divide_by_factor(num, nu)
            if not ok:
                break
            num, k = q, k + 1
        if k < m:
            left.append((nu, m - k))
    return RationalFn(num, left, f.prefactor)


def specialize(f: RationalFn, lam: Sequence[int]) -> RationalFn:
    """Substitute t_i -> s^lam_i, giving a function of one variable."""
    lam = [int(x) for x in lam]
    if len(lam) != f.rank:
        raise ValueError("covector rank mismatch")
    factors = []
    for nu, m in f.denominator.items():
        k = sum(a * b for a, b in zip(lam, nu))
        if k == 0:
            raise ValueError(f"the factor (1 - t^{nu}) collapses under {tuple(lam)}")
        factors.append(((k,), m))
    pre = (sum(a * b for a, b in zip(lam, f.prefactor)),)
    return RationalFn(f.numerator.specialize(lam), factors, pre)


def _cyclotomic(d: int) -> list[int]:
    """Coefficients (lowest degree first) of the d-th cyclotomic polynomial."""
    poly = [-1] + [0] * (d - 1) + [1]  # t^d - 1
    for e in range(1, d):
        if d % e == 0:
            poly = _exact_div(poly, _cyclotomic(e))
    return poly


def _exact_div(num: list, den: list[int]) -> list:
    """Quotient of num by a monic den, assuming divisibility."""
    q, r = _divmod(num, den)
    if any(r):
        raise ArithmeticError("inexact division")
    return q


def _divmod(num: list, den: list[int]) -> tuple[list, list]:
    num = list(num)
    n, m = len(num) - 1, len(den) - 1
    if n < m:
        return [0], num
    q = [0] * (n - m + 1)
    for i in range(n - m, -1, -1):
        c = num[i + m]
        if c:
            q[i] = c
            for j, dj in enumerate(den):
                if dj:
                    num[i + j] = num[i + j] - c * dj
    return q, num[:m]


def laurent_conditions(f: RationalFn) -> list[LinearEquation]:
    """Linear conditions on the unknowns for f to be a Laurent polynomial.

    Only one-variable functions are handled.  For (1 - t^k)^m factors the
    numerator must vanish at each k-th root of unity to the combined order;
    at t = 1 this is read off from Taylor coefficients (derivatives), and at
    other roots of unity from the remainder modulo a cyclotomic power.
    """
    if f.rank != 1:
        if f.has_unknowns():
            raise ValueError("unknowns with several variables: specialize to one variable first")
        try:
            to_laurent(f)
            return []
        except NotDivisible:
            return [LinearEquation((), Fraction(1))]
    num = f.numerator  # minimal exponent already zero
    coeffs: dict[int, object] = {e[0]: c for e, c in num.terms.items()}
    order: dict[int, int] = defaultdict(int)
    for (k,), m in f.denominator.items():
        for d in range(1, k + 1):
            if k % d == 0:
                order[d] += m
    conditions = []
    for d in sorted(order):
        e = order[d]
        if d == 1:
            # Taylor coefficients N^(j)(1)/j! for j < e
            for j in range(e):
                conditions.append(sum((c * comb(a, j) for a, c in coeffs.items()), 0))
        else:
            top = max(coeffs, default=0)
            poly = [coeffs.get(i, 0) for i in range(top + 1)]
            phi = [1]
            base = _cyclotomic(d)
            for _ in range(e):
                phi = _poly_mul(phi, base)
            _, rem = _divmod(poly, phi)
            conditions.extend(rem)
    out = []
    for c in conditions:
        eq = LinearEquation.from_coefficient(c)
        if not eq.is_trivial():
            out.append(eq)
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


class SolveError(ValueError):
    def __init__(self, message: str, residual: list[LinearEquation]):
        self.residual = residual
        super().__init__(message + ": " + "; ".join(str(e) for e in residual))


def solve_linear(equations: Sequence[LinearEquation], symbols: Sequence[str] | None = None) -> dict[str, Fraction]:
    """Unique solution of a linear system, or SolveError with the reduced system."""
    if symbols is None:
        symbols = sorted({s for eq in equations for s, _ in eq.coeffs})
    symbols = list(symbols)
    rows = []
    for eq in equations:
        d = dict(eq.coeffs)
        rows.append([d.get(s, Fraction(0)) for s in symbols] + [eq.rhs])
    red, pivots = linalg.rref(rows) if rows else ([], [])
    n = len(symbols)
    residual = [LinearEquation(tuple((s, v) for s, v in zip(symbols, row[:n]) if v), row[n]) for row in red]
    if n in pivots:
        raise SolveError("inconsistent system", residual)
    if len(pivots) < n:
        raise SolveError("solution is not unique", residual)
    return {symbols[p]: row[n] for row, p in zip(red, pivots)}
