"""Riemann-Roch for contact manifolds of dimension d = 2n + 1.

The tangent bundle sits in 0 -> F -> TX -> L -> 0 with F of rank 2n and
F = F* (x) L.  Classes live in a truncated graded ring on l = c1(L) and the
even Chern classes c2, c4, ..., c_2n of F; the odd ones are eliminated by
the symmetry of F.  Top-degree monomials are intersection numbers; the
Hilbert polynomial p(m) = chi(L^m) is expressed through deg = l^d and the
values p(1), p(2), ... after imposing p(0) = 1 and p(-1) = p(-2) = 0
(only p(-1) = 0 in dimension 3).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd
from typing import Mapping

from . import linalg
from .laurent import Coefficient

Monomial = tuple[int, ...]

DEGREE = "deg"


class ChernRing:
    """Graded ring Q[l, c2, c4, ..., c_2n] truncated above degree 2n + 1."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.n = n
        self.top = 2 * n + 1
        self.names = ["l"] + [f"c{2 * k}" for k in range(1, n + 1)]
        self.degrees = [1] + [2 * k for k in range(1, n + 1)]

    def degree(self, mono: Monomial) -> int:
        return sum(a * b for a, b in zip(mono, self.degrees))

    def gen(self, name: str) -> "ChernExpression":
        i = self.names.index(name)
        mono = tuple(int(j == i) for j in range(len(self.names)))
        return ChernExpression(self, {mono: Fraction(1)})

    def one(self) -> "ChernExpression":
        return ChernExpression(self, {(0,) * len(self.names): Fraction(1)})

    def zero(self) -> "ChernExpression":
        return ChernExpression(self, {})

    def top_monomials(self) -> list[Monomial]:
        out = []

        def rec(i: int, left: int, acc: list[int]):
            if i == len(self.degrees):
                if left == 0:
                    out.append(tuple(acc))
                return
            for a in range(left // self.degrees[i] + 1):
                rec(i + 1, left - a * self.degrees[i], acc + [a])

        rec(0, self.top, [])
        return sorted(out)

    def monomial_name(self, mono: Monomial) -> str:
        parts = []
        for name, a in zip(self.names, mono):
            if a:
                parts.append(name if a == 1 else f"{name}^{a}")
        return "*".join(parts) or "1"


class ChernExpression:
    """Element of a ChernRing; products drop everything above the top degree."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: ChernRing, terms: Mapping[Monomial, Fraction]):
        self.ring = ring
        self.terms = {m: Fraction(c) for m, c in terms.items() if c and ring.degree(m) <= ring.top}

    def __add__(self, other) -> "ChernExpression":
        if not isinstance(other, ChernExpression):
            other = self.ring.one() * other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return ChernExpression(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "ChernExpression":
        return ChernExpression(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "ChernExpression":
        return self + (-other)

    def __mul__(self, other) -> "ChernExpression":
        if not isinstance(other, ChernExpression):
            k = Fraction(other)
            return ChernExpression(self.ring, {m: c * k for m, c in self.terms.items()})
        out: dict[Monomial, Fraction] = defaultdict(Fraction)
        top = self.ring.top
        for m1, c1 in self.terms.items():
            d1 = self.ring.degree(m1)
            for m2, c2 in other.terms.items():
                if d1 + self.ring.degree(m2) > top:
                    continue
                out[tuple(a + b for a, b in zip(m1, m2))] += c1 * c2
        return ChernExpression(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ChernExpression":
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChernExpression):
            return NotImplemented
        return self.terms == other.terms

    def part(self, degree: int) -> "ChernExpression":
        return ChernExpression(self.ring, {m: c for m, c in self.terms.items() if self.ring.degree(m) == degree})

    def constant(self) -> Fraction:
        return self.terms.get((0,) * len(self.ring.names), Fraction(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda mc: (-self.ring.degree(mc[0]), [-a for a in mc[0]]))
        out = ""
        for m, c in items:
            name = self.ring.monomial_name(m)
            a = abs(c)
            body = name if a == 1 and name != "1" else (str(a) if name == "1" else f"{a}*{name}")
            sign = "-" if c < 0 else "+"
            out = (body if sign == "+" else "-" + body) if not out else f"{out} {sign} {body}"
        return out

    __repr__ = __str__


@lru_cache(maxsize=None)
def _ring(n: int) -> ChernRing:
    return ChernRing(n)


@lru_cache(maxsize=None)
def chern_classes_of_f(n: int) -> tuple[ChernExpression, ...]:
    """c_0(F), ..., c_2n(F) with the odd classes eliminated.

    Expanding c(F* (x) L) = sum_k (-1)^k c_k (1 + l)^(2n-k) and comparing
    degree j with c_j gives, for odd j,
        c_j = 1/2 sum_{k<j} (-1)^k C(2n-k, j-k) c_k l^(j-k).
    """
    ring = _ring(n)
    l = ring.gen("l")
    cs = [ring.one()]
    for j in range(1, 2 * n + 1):
        if j % 2 == 0:
            cs.append(ring.gen(f"c{j}"))
            continue
        acc = ring.zero()
        for k in range(j):
            acc = acc + cs[k] * (l ** (j - k)) * ((-1) ** k * comb(2 * n - k, j - k))
        cs.append(acc * Fraction(1, 2))
    return tuple(cs)


def odd_chern_relations(n: int) -> dict[str, ChernExpression]:
    cs = chern_classes_of_f(n)
    return {f"c{j}": cs[j] for j in range(1, 2 * n + 1, 2)}


def symmetry_defects(n: int) -> list[ChernExpression]:
    """Even-degree parts of c(F* (x) L) - c(F); all vanish when the relations are consistent."""
    ring = _ring(n)
    l = ring.gen("l")
    cs = chern_classes_of_f(n)
    out = []
    for j in range(2, 2 * n + 1, 2):
        acc = ring.zero()
        for k in range(j + 1):
            acc = acc + cs[k] * (l ** (j - k)) * ((-1) ** k * comb(2 * n - k, j - k))
        out.append(acc - cs[j])
    return out


# ------------------------------------------------------------- power series


def _series_inverse(a: list[Fraction], order: int) -> list[Fraction]:
    out = [Fraction(1) / a[0]]
    for k in range(1, order + 1):
        s = sum((a[i] * out[k - i] for i in range(1, min(k, len(a) - 1) + 1)), Fraction(0))
        out.append(-s / a[0])
    return out


def _series_log(a: list[Fraction], order: int) -> list[Fraction]:
    """log of a series with constant term 1, via (log a)' = a'/a."""
    inv = _series_inverse(a, order)
    deriv = [a[k + 1] * (k + 1) if k + 1 < len(a) else Fraction(0) for k in range(order)]
    prod = [sum((deriv[i] * inv[k - i] for i in range(k + 1)), Fraction(0)) for k in range(order)]
    return [Fraction(0)] + [prod[k - 1] / k for k in range(1, order + 1)]


@lru_cache(maxsize=None)
def todd_series(order: int) -> tuple[Fraction, ...]:
    """Coefficients of x / (1 - e^-x) up to x^order."""
    denom = [Fraction((-1) ** k, factorial(k + 1)) for k in range(order + 1)]  # (1 - e^-x)/x
    return tuple(_series_inverse(denom, order))


def _exp(x: ChernExpression) -> ChernExpression:
    """exp of a nilpotent element (no constant term)."""
    ring = x.ring
    out, power = ring.one(), ring.one()
    for k in range(1, ring.top + 1):
        power = power * x * Fraction(1, k)
        out = out + power
    return out


@lru_cache(maxsize=None)
def todd_tx(n: int) -> ChernExpression:
    """td(TX) = td(F) td(L) through power sums of the Chern roots of F."""
    ring = _ring(n)
    top = ring.top
    cs = list(chern_classes_of_f(n))
    e = cs + [ring.zero()] * (top + 1 - len(cs))
    # Newton: p_k = sum_{i<k} (-1)^(i-1) e_i p_(k-i) + (-1)^(k-1) k e_k
    p = [ring.zero()]
    for k in range(1, top + 1):
        acc = e[k] * ((-1) ** (k - 1) * k)
        for i in range(1, k):
            acc = acc + e[i] * p[k - i] * ((-1) ** (i - 1))
        p.append(acc)
    logq = _series_log(list(todd_series(top)), top)
    log_td_f = ring.zero()
    for k in range(1, top + 1):
        if logq[k]:
            log_td_f = log_td_f + p[k] * logq[k]
    q = todd_series(top)
    l = ring.gen("l")
    td_l = ring.zero()
    for k in range(top + 1):
        td_l = td_l + (l ** k) * q[k]
    return _exp(log_td_f) * td_l


# --------------------------------------------------------- Hilbert polynomial

LinearForm = dict  # top monomial -> Fraction


def _integral(x: ChernExpression) -> LinearForm:
    return {m: c for m, c in x.part(x.ring.top).terms.items()}


@lru_cache(maxsize=None)
def _raw_coefficients(n: int) -> tuple[LinearForm, ...]:
    """Forms L_j with p(m) = sum_j m^j L_j, L_j = (1/j!) integral of l^j td_(d-j)."""
    ring = _ring(n)
    td = todd_tx(n)
    l = ring.gen("l")
    out = []
    for j in range(ring.top + 1):
        out.append({m: c / factorial(j) for m, c in _integral((l ** j) * td.part(ring.top - j)).items()})
    return tuple(out)


def _value_form(n: int, m: int) -> LinearForm:
    acc: dict = defaultdict(Fraction)
    for j, form in enumerate(_raw_coefficients(n)):
        for mono, c in form.items():
            acc[mono] += c * Fraction(m) ** j
    return dict(acc)


class NotDetermined(ValueError):
    pass


@dataclass(frozen=True)
class Elimination:
    """Rewrites intersection-number forms through deg and p(1), p(2), ...

    The rows are forms whose values are prescribed (p(0) = 1, p(-1) =
    p(-2) = 0) or kept as symbols (deg, p(1), ...).  ``dependencies`` are
    the relations found among all of these, each checked for consistency.
    """

    n: int
    monomials: tuple[Monomial, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    names: tuple[str, ...]
    values: tuple[Coefficient, ...]

    def express(self, form: LinearForm) -> Coefficient:
        target = [Fraction(form.get(m, 0)) for m in self.monomials]
        # solve c . rows = target
        cols = [list(col) for col in zip(*self.rows)] if self.rows else []
        sol = linalg.solve(cols, target) if cols else None
        if sol is None:
            raise NotDetermined("the form is not determined by deg and the imposed values")
        out = Coefficient(0)
        for c, v in zip(sol, self.values):
            out = out + Coefficient.lift(v) * c
        return Coefficient.lift(out)


def _dependencies(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    if not rows:
        return []
    return linalg.nullspace([list(col) for col in zip(*rows)], len(rows))


@lru_cache(maxsize=None)
def elimination(n: int) -> Elimination:
    ring = _ring(n)
    monos = tuple(ring.top_monomials())
    deg_mono = tuple([ring.top] + [0] * n)

    def row(form: LinearForm) -> list[Fraction]:
        return [Fraction(form.get(m, 0)) for m in monos]

    # K = -(n+1)L, so Kodaira vanishing gives p(-k) = 0 only for k <= n
    vanishing = range(1, min(n, 2) + 1)
    rows = [row({deg_mono: 1}), row(_value_form(n, 0))] + [row(_value_form(n, -k)) for k in vanishing]
    names = [DEGREE, "p(0)"] + [f"p({-k})" for k in vanishing]
    values = [Coefficient.symbol(DEGREE), Coefficient(1)] + [Coefficient(0) for _ in vanishing]
    raw = _raw_coefficients(n)

    def determined() -> bool:
        cols = [list(col) for col in zip(*rows)]
        return all(linalg.solve(cols, row(f)) is not None for f in raw)

    k = 1
    while not determined():
        if k > ring.top:
            raise NotDetermined(f"p(m) is not determined for n = {n}")
        rows.append(row(_value_form(n, k)))
        names.append(f"p({k})")
        values.append(Coefficient.symbol(f"p{k}"))
        k += 1
    for z in _dependencies(rows):
        combo = Coefficient(0)
        for c, v in zip(z, values):
            combo = combo + Coefficient.lift(v) * c
        if Coefficient.lift(combo):
            raise ArithmeticError(f"inconsistent constraints: {combo} should vanish")
    return Elimination(n, monos, tuple(tuple(r) for r in rows), tuple(names), tuple(values))


def _coeff_str(c: Coefficient) -> str:
    c = Coefficient.lift(c)
    parts = []
    for s, v in c.linear.items():
        name = {"deg": "deg", "p1": "p(1)", "p2": "p(2)", "p3": "p(3)"}.get(s, s)
        a = abs(v)
        body = name if a == 1 else f"{a}{name}" if a.denominator == 1 else f"({a}){name}"
        parts.append(("-" if v < 0 else "+", body))
    if c.constant or not parts:
        parts.append(("-" if c.constant < 0 else "+", str(abs(c.constant))))
    s = "".join(f" {sg} {b}" for sg, b in parts).strip()
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


@dataclass(frozen=True)
class HilbertPoly:
    """p(m) with coefficients affine in deg and p(1), p(2), ...

    ``power`` holds the coefficients of m^j; ``binomial`` those of
    C(m + j, j), which is how the polynomial is usually displayed.
    """

    n: int
    power: tuple[Coefficient, ...]
    binomial: tuple[Coefficient, ...]

    @property
    def dim(self) -> int:
        return 2 * self.n + 1

    @property
    def symbols(self) -> list[str]:
        return sorted({s for c in self.power for s in Coefficient.lift(c).linear})

    def __call__(self, m, values: Mapping[str, object] | None = None):
        m = Fraction(m)
        total = Coefficient(0)
        for j, c in enumerate(self.power):
            total = total + Coefficient.lift(c) * (m ** j)
        total = Coefficient.lift(total)
        if values is None:
            return total.simplify()
        return total.substitute({k: Fraction(v) for k, v in values.items()})

    def binomial_terms(self) -> list[tuple[int, Coefficient]]:
        return [(j, Coefficient.lift(c)) for j, c in enumerate(self.binomial) if Coefficient.lift(c)]

    def __str__(self) -> str:
        out = ""
        for j, c in reversed(self.binomial_terms()):
            s = _coeff_str(c)
            simple = len(c.linear) + bool(c.constant) == 1
            neg = s.startswith("-") and simple
            body = s[1:] if neg else s
            if body == "1":
                term = f"C(m+{j},{j})"
            elif simple:
                term = f"{body}*C(m+{j},{j})"
            else:
                term = f"({body})*C(m+{j},{j})"
            if not out:
                out = "-" + term if neg else term
            else:
                out += f" {'-' if neg else '+'} {term}"
        return f"p(m) = {out}"

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "binomial": {str(j): c.to_json() for j, c in self.binomial_terms()},
            "power": [Coefficient.lift(c).to_json() for c in self.power],
        }


def _power_to_binomial(power: list[Coefficient]) -> list[Coefficient]:
    """Coefficients b_j with sum_j b_j C(m + j, j) = sum_j a_j m^j."""
    d = len(power) - 1
    # C(m + j, j) evaluated at m = 0..d is triangular in the Newton-like basis; solve on samples
    out = []
    residual = [Coefficient.lift(c) for c in power]
    for j in range(d, -1, -1):
        lead = residual[j]
        # leading coefficient of C(m + j, j) is 1/j!
        b = Coefficient.lift(lead * factorial(j))
        out.append(b)
        poly = _binomial_poly(j)
        for i in range(j + 1):
            residual[i] = Coefficient.lift(residual[i] - b * poly[i])
    out.reverse()
    if any(Coefficient.lift(r) for r in residual):
        raise ArithmeticError("binomial conversion left a remainder")
    return out


@lru_cache(maxsize=None)
def _binomial_poly(j: int) -> tuple[Fraction, ...]:
    """Power-basis coefficients of C(m + j, j) = (m+1)...(m+j)/j!."""
    poly = [Fraction(1)]
    for k in range(1, j + 1):
        nxt = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i] += c * k
            nxt[i + 1] += c
        poly = nxt
    return tuple(c / factorial(j) for c in poly)


@lru_cache(maxsize=None)
def hilbert_polynomial(n: int) -> HilbertPoly:
    elim = elimination(n)
    power = [elim.express(f) for f in _raw_coefficients(n)]
    return HilbertPoly(n, tuple(power), tuple(_power_to_binomial(power)))


# ------------------------------------------------------ identities and bounds


@dataclass(frozen=True)
class Identity:
    lhs: str
    rhs: Coefficient

    def __str__(self) -> str:
        return f"{self.lhs} = {_coeff_str(self.rhs)}"


def tx_classes(n: int) -> tuple[ChernExpression, ChernExpression]:
    """c1(TX) and c2(TX) from c(TX) = c(F)(1 + l)."""
    ring = _ring(n)
    l = ring.gen("l")
    cs = chern_classes_of_f(n)
    return cs[1] + l, cs[2] + cs[1] * l


def intersection_identities(n: int) -> list[Identity]:
    """c1(TX)^2 l^(d-2) and c2(TX) l^(d-2) through deg and p(1), p(2), ..."""
    ring = _ring(n)
    d = ring.top
    l = ring.gen("l")
    c1, c2 = tx_classes(n)
    elim = elimination(n)
    tail = l ** (d - 2)
    return [
        Identity(f"c1(TX)^2 c1(L)^{d - 2}", elim.express(_integral(c1 * c1 * tail))),
        Identity(f"c2(TX) c1(L)^{d - 2}", elim.express(_integral(c2 * tail))),
    ]


@dataclass(frozen=True)
class Bound:
    """form >= 0, with form affine in deg and p(1), p(2), ..."""

    n: int
    form: Coefficient

    def normalized(self) -> Coefficient:
        """The form scaled to coprime integer coefficients."""
        c = Coefficient.lift(self.form)
        vals = list(c.linear.values()) + [c.constant]
        den = linalg.common_denominator(vals)
        ints = [int(v * den) for v in vals]
        g = 0
        for x in ints:
            g = gcd(g, x)
        return Coefficient.lift(c * Fraction(den, g or 1))

    def p1_threshold(self) -> Coefficient:
        """The right-hand side of p(1) >= ..., when only deg and p(1) occur."""
        c = Coefficient.lift(self.form)
        if set(c.linear) - {DEGREE, "p1"} or "p1" not in c.linear:
            raise ValueError("the bound is not a lower bound on p(1) alone")
        k = c.linear["p1"]
        rest = Coefficient(c.constant, {s: v for s, v in c.linear.items() if s != "p1"})
        return Coefficient.lift(rest * Fraction(-1) * (1 / k))

    def min_p1(self, degree: int) -> int:
        """Least integer p(1) allowed for a numeric degree."""
        thr = Coefficient.lift(self.p1_threshold()).substitute({DEGREE: degree})
        return -((-thr.numerator) // thr.denominator)

    def holds(self, values: Mapping[str, object]) -> bool:
        return Coefficient.lift(self.form).substitute({k: Fraction(v) for k, v in values.items()}) >= 0

    def __str__(self) -> str:
        c = self.normalized()
        pos = [(s, v) for s, v in c.linear.items() if v > 0]
        neg = [(s, -v) for s, v in c.linear.items() if v < 0]
        if c.constant > 0:
            pos.append(("", c.constant))
        elif c.constant < 0:
            neg.append(("", -c.constant))

        def side(items):
            if not items:
                return "0"
            names = {"deg": "deg", "p1": "p(1)", "p2": "p(2)"}
            return " + ".join(f"{v}" if not s else (names.get(s, s) if v == 1 else f"{v}{names.get(s, s)}") for s, v in items)

        left = sorted(pos, key=lambda sv: (sv[0] == "", sv[0] == DEGREE, sv[0]), reverse=False)
        right = sorted(neg, key=lambda sv: (sv[0] == "", sv[0] == DEGREE, sv[0]))
        return f"{side(left)} >= {side(right)}"


def bg_bound(n: int) -> Bound:
    """(2d c2(TX) - (d-1) c1(TX)^2) l^(d-2) >= 0 in terms of deg and p-values."""
    d = 2 * n + 1
    c1sq, c2 = (i.rhs for i in intersection_identities(n))
    form = Coefficient.lift(Coefficient.lift(c2) * (2 * d) - Coefficient.lift(c1sq) * (d - 1))
    return Bound(n, form)


@dataclass(frozen=True)
class Congruence:
    modulus: int
    residue: int

    def holds(self, value: int) -> bool:
        return (value - self.residue) % self.modulus == 0

    def __str__(self) -> str:
        return f"deg = {self.residue} mod {self.modulus}" if self.modulus > 1 else "no condition on deg"


def degree_congruence(n: int) -> Congruence:
    """Condition on deg making every binomial coefficient of p(m) an integer.

    p-values are integers; their coefficients must then be integral, and
    a deg + c in Z pins deg modulo the denominator of a.
    """
    mod, res = 1, 0
    for _, c in hilbert_polynomial(n).binomial_terms():
        for s, v in c.linear.items():
            if s != DEGREE and v.denominator != 1:
                raise ArithmeticError(f"non-integral coefficient {v} of {s}")
        a = c.linear.get(DEGREE, Fraction(0))
        q = a.denominator
        if q == 1:
            if c.constant.denominator != 1:
                raise ArithmeticError("a coefficient is never integral")
            continue
        # a*deg + c in Z  <=>  a.num * deg = -c*q (mod q)
        rhs = -c.constant * q
        if rhs.denominator != 1:
            raise ArithmeticError("a coefficient is never integral")
        inv = pow(a.numerator % q, -1, q)
        r = (int(rhs) * inv) % q
        mod, res = _crt(mod, res, q, r)
    return Congruence(mod, res)


def _crt(m1: int, r1: int, m2: int, r2: int) -> tuple[int, int]:
    g = gcd(m1, m2)
    if (r2 - r1) % g:
        raise ArithmeticError("incompatible congruences on deg")
    lcm = m1 // g * m2
    for x in range(r1, lcm, m1):
        if x % m2 == r2 % m2:
            return lcm, x % lcm
    raise ArithmeticError("no solution")


@dataclass(frozen=True)
class ParityVerdict:
    congruence: Congruence
    degree: int | None
    passed: bool | None


def parity_check(n: int = 4, degree: int | None = None) -> ParityVerdict:
    cong = degree_congruence(n)
    if degree is None:
        return ParityVerdict(cong, None, None)
    return ParityVerdict(cong, degree, cong.holds(degree))


def solve_degree(n: int, values: Mapping[int, int]) -> dict[str, Fraction]:
    """Solve for deg (and p(1), p(2), ... if missing) from known values p(m)."""
    hp = hilbert_polynomial(n)
    symbols = hp.symbols
    rows, rhs = [], []
    for m, v in sorted(values.items()):
        c = Coefficient.lift(hp(m))
        rows.append([c.linear.get(s, Fraction(0)) for s in symbols])
        rhs.append(Fraction(v) - c.constant)
    red, piv = linalg.rref([r + [b] for r, b in zip(rows, rhs)])
    if len(symbols) in piv:
        raise ValueError("the given values are inconsistent with p(m)")
    if len(piv) < len(symbols):
        raise ValueError("not enough values to determine deg")
    return {symbols[p]: row[-1] for row, p in zip(red, piv)}
