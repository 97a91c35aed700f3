"""Fixed-point data, compass calculus and equivariant Euler characteristics.

The character of a fixed point y is t^mu(y) / prod_nu (1 - t^nu) over its
compass; a fixed curve contributes
    t^mu / prod (1 - t^nu)^rank * (1 - g + deg + sum n t^nu / (1 - t^nu))
where (nu, rank, n) runs over the conormal summands.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .laurent import (
    Coefficient,
    LaurentPoly,
    NotDivisible,
    RationalFn,
    SolveError,
    laurent_conditions,
    solve_linear,
    specialize,
    sum_all,
    to_laurent,
)
from .polytope import Cone, Polytope, cone_intersect_lattice, tangent_cone
from .weights import Lattice, Projection, Weight, as_weight, project


@dataclass(frozen=True)
class Compass:
    """Multiset of nonzero weights, stored as sorted (weight, multiplicity) pairs."""

    entries: tuple[tuple[Weight, int], ...]

    def __init__(self, entries: Iterable = ()):
        counts: Counter = Counter()
        for item in entries:
            if isinstance(item, tuple) and len(item) == 2 and isinstance(item[1], int) and not isinstance(item[0], (int, Fraction)):
                w, m = as_weight(item[0]), item[1]
            else:
                w, m = as_weight(item), 1
            if w.is_zero():
                raise ValueError("a compass cannot contain the zero weight")
            if m <= 0:
                raise ValueError("compass multiplicities must be positive")
            counts[w] += m
        object.__setattr__(self, "entries", tuple(sorted(counts.items())))

    @classmethod
    def from_weights(cls, weights: Iterable) -> "Compass":
        return cls(as_weight(w) for w in weights)

    def __len__(self) -> int:
        return sum(m for _, m in self.entries)

    size = property(__len__)

    def __iter__(self):
        return iter(self.entries)

    def weights(self) -> list[Weight]:
        """Entries repeated by multiplicity."""
        return [w for w, m in self.entries for _ in range(m)]

    def multiplicity(self, w) -> int:
        w = as_weight(w)
        return next((m for v, m in self.entries if v == w), 0)

    def total(self, rank: int) -> Weight:
        out = Weight.zero(rank)
        for w, m in self.entries:
            out = out + w * m
        return out

    def to_json(self) -> list:
        return [{"nu": w.to_json(), "mult": m} for w, m in self.entries]

    @classmethod
    def from_json(cls, data) -> "Compass":
        return cls((Weight.from_json(e["nu"]), int(e.get("mult", 1))) for e in data)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{w}" + (f"^{m}" if m > 1 else "") for w, m in self.entries) + "}"


@dataclass(frozen=True)
class FixedPoint:
    label: str
    mu: Weight
    compass: Compass

    def __post_init__(self):
        object.__setattr__(self, "mu", as_weight(self.mu))
        if not isinstance(self.compass, Compass):
            object.__setattr__(self, "compass", Compass(self.compass))

    def key(self):
        return (self.mu, self.compass.entries)

    def to_json(self) -> dict:
        return {"label": self.label, "mu": self.mu.to_json(), "compass": self.compass.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "FixedPoint":
        return cls(data.get("label", ""), Weight.from_json(data["mu"]), Compass.from_json(data["compass"]))


@dataclass(frozen=True)
class ConormalSummand:
    nu: Weight
    rank: int
    c1: int

    def __post_init__(self):
        object.__setattr__(self, "nu", as_weight(self.nu))
        if self.nu.is_zero():
            raise ValueError("conormal weights must be nonzero")
        if self.rank <= 0:
            raise ValueError("conormal ranks must be positive")


@dataclass(frozen=True)
class FixedCurve:
    label: str
    mu: Weight
    genus: int
    degree: int
    conormal: tuple[ConormalSummand, ...]

    def __post_init__(self):
        object.__setattr__(self, "mu", as_weight(self.mu))
        summands = tuple(s if isinstance(s, ConormalSummand) else ConormalSummand(*s) for s in self.conormal)
        object.__setattr__(self, "conormal", tuple(sorted(summands, key=lambda s: (s.nu, s.rank, s.c1))))
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")

    @property
    def codim(self) -> int:
        return sum(s.rank for s in self.conormal)

    def key(self):
        return (self.mu, self.genus, self.degree, tuple((s.nu, s.rank, s.c1) for s in self.conormal))

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "mu": self.mu.to_json(),
            "genus": self.genus,
            "degree": self.degree,
            "conormal": [{"nu": s.nu.to_json(), "rank": s.rank, "c1": s.c1} for s in self.conormal],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FixedCurve":
        return cls(
            data.get("label", ""),
            Weight.from_json(data["mu"]),
            int(data.get("genus", 0)),
            int(data["degree"]),
            tuple(ConormalSummand(Weight.from_json(s["nu"]), int(s["rank"]), int(s["c1"])) for s in data["conormal"]),
        )


@dataclass(frozen=True)
class UnknownTemplate:
    """An unknown number ``symbol`` of isolated points sharing mu and compass."""

    symbol: str
    mu: Weight
    compass: Compass

    def __post_init__(self):
        object.__setattr__(self, "mu", as_weight(self.mu))
        if not isinstance(self.compass, Compass):
            object.__setattr__(self, "compass", Compass(self.compass))

    def key(self):
        return (self.symbol, self.mu, self.compass.entries)

    def to_json(self) -> dict:
        return {"symbol": self.symbol, "mu": self.mu.to_json(), "compass": self.compass.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "UnknownTemplate":
        return cls(data["symbol"], Weight.from_json(data["mu"]), Compass.from_json(data["compass"]))


@dataclass(frozen=True)
class FixedPointData:
    """Fixed components of a torus action on a d-dimensional manifold.

    ``complete`` says whether the components listed are the whole fixed
    locus; partial data skips the global consistency rules.  ``lattice`` is
    an optional character lattice for lattice-sensitive checks.
    """

    ambient_dim: int
    rank: int
    points: tuple[FixedPoint, ...] = ()
    curves: tuple[FixedCurve, ...] = ()
    unknowns: tuple[UnknownTemplate, ...] = ()
    lattice: Lattice | None = field(default=None, compare=False)
    complete: bool = True

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "curves", tuple(self.curves))
        object.__setattr__(self, "unknowns", tuple(self.unknowns))
        d, r = self.ambient_dim, self.rank
        for p in list(self.points) + list(self.unknowns):
            name = getattr(p, "label", None) or getattr(p, "symbol", "")
            if len(p.mu) != r or any(len(w) != r for w, _ in p.compass):
                raise ValueError(f"{name}: weights must have rank {r}")
            if len(p.compass) != d:
                raise ValueError(f"{name}: compass of an isolated point must have {d} entries, found {len(p.compass)}")
        for c in self.curves:
            if len(c.mu) != r or any(len(s.nu) != r for s in c.conormal):
                raise ValueError(f"{c.label}: weights must have rank {r}")
            if c.codim != d - 1:
                raise ValueError(f"{c.label}: conormal ranks of a curve must add up to {d - 1}, found {c.codim}")
        if self.complete:
            _check_two_components(self)

    @property
    def symbols(self) -> list[str]:
        return sorted({u.symbol for u in self.unknowns})

    def components(self) -> int:
        return len(self.points) + len(self.curves) + len(self.unknowns)

    def exponent(self, w: Weight) -> tuple[int, ...]:
        """Integer exponent vector of the character t^w."""
        if w.is_integral():
            return w.ints()
        if self.lattice is None:
            raise ValueError(f"{w} is not integral; attach a lattice to use lattice coordinates")
        coords = self.lattice.coordinates(w)
        if coords is None or any(c.denominator != 1 for c in coords):
            raise ValueError(f"{w} is not in the attached lattice")
        return tuple(int(c) for c in coords)

    def with_points(self, points: Iterable[FixedPoint]) -> "FixedPointData":
        return FixedPointData(self.ambient_dim, self.rank, tuple(points), self.curves, self.unknowns, self.lattice, self.complete)

    def scaled(self, m: int) -> "FixedPointData":
        """Data for L^m: every mu multiplied by m, compasses unchanged."""
        return FixedPointData(
            self.ambient_dim,
            self.rank,
            tuple(FixedPoint(p.label, p.mu * m, p.compass) for p in self.points),
            tuple(FixedCurve(c.label, c.mu * m, c.genus, c.degree * m, c.conormal) for c in self.curves),
            tuple(UnknownTemplate(u.symbol, u.mu * m, u.compass) for u in self.unknowns),
            self.lattice,
            self.complete,
        )

    def to_json(self) -> dict:
        out = {
            "rank": self.rank,
            "ambient_dim": self.ambient_dim,
            "points": [p.to_json() for p in self.points],
            "curves": [c.to_json() for c in self.curves],
            "unknowns": [u.to_json() for u in self.unknowns],
        }
        if self.lattice is not None:
            out["lattice"] = self.lattice.to_json()
        if not self.complete:
            out["complete"] = False
        return out

    @classmethod
    def from_json(cls, data: dict) -> "FixedPointData":
        return cls(
            int(data["ambient_dim"]),
            int(data["rank"]),
            tuple(FixedPoint.from_json(p) for p in data.get("points", [])),
            tuple(FixedCurve.from_json(c) for c in data.get("curves", [])),
            tuple(UnknownTemplate.from_json(u) for u in data.get("unknowns", [])),
            Lattice.from_json(data["lattice"]) if "lattice" in data else None,
            bool(data.get("complete", True)),
        )


def _check_two_components(data: FixedPointData) -> None:
    """A rank-1 action with two fixed components, one a point, has the other a divisor."""
    if data.rank != 1 or data.unknowns or data.components() != 2 or not data.points:
        return
    dims = [0] * len(data.points) + [1] * len(data.curves)
    other = dims[1] if len(dims) == 2 and dims[0] == 0 else dims[0]
    if other != data.ambient_dim - 1:
        raise ValueError(
            f"two fixed components, one a point: the other must have dimension {data.ambient_dim - 1}, not {other}"
        )


# ---------------------------------------------------------------- characters


def point_term(data: FixedPointData, mu: Weight, compass: Compass, coeff=1) -> RationalFn:
    factors = [(data.exponent(w), m) for w, m in compass]
    return RationalFn(LaurentPoly.monomial(data.exponent(mu), coeff), factors)


def curve_term(data: FixedPointData, c: FixedCurve) -> RationalFn:
    r = data.rank
    one = LaurentPoly.constant(r)
    factors = [(data.exponent(s.nu), s.rank) for s in c.conormal]
    # bracket = (1 - g + deg) + sum n t^nu / (1 - t^nu), over the common denominator prod (1 - t^nu)
    nus = sorted({data.exponent(s.nu) for s in c.conormal})
    den = {nu: one - LaurentPoly.monomial(nu) for nu in nus}
    base = one
    for nu in nus:
        base = base * den[nu]
    bracket = base * (1 - c.genus + c.degree)
    for s in c.conormal:
        nu = data.exponent(s.nu)
        rest = LaurentPoly.monomial(nu, s.c1)
        for other in nus:
            if other != nu:
                rest = rest * den[other]
        bracket = bracket + rest
    factors += [(nu, 1) for nu in nus]
    return RationalFn(bracket.shift(data.exponent(c.mu)), factors)


def euler_characteristic(data: FixedPointData) -> RationalFn:
    terms = [point_term(data, p.mu, p.compass) for p in data.points]
    terms += [curve_term(data, c) for c in data.curves]
    terms += [point_term(data, u.mu, u.compass, Coefficient.symbol(u.symbol)) for u in data.unknowns]
    return sum_all(terms, data.rank)


def certify_laurent(data: FixedPointData) -> LaurentPoly:
    """The Euler characteristic as a Laurent polynomial; NotDivisible flags bad data."""
    if data.unknowns:
        raise ValueError("certify_laurent needs data without unknown multiplicities")
    return to_laurent(euler_characteristic(data))


class MultiplicityError(ValueError):
    pass


def solve_multiplicities(data: FixedPointData, lam: Sequence[int] | None = None) -> dict[str, int]:
    """Unknown point counts forced by the Euler characteristic being Laurent."""
    f = euler_characteristic(data)
    if lam is not None:
        f = specialize(f, lam)
    elif data.rank != 1:
        raise ValueError("pass a specialization for data of rank > 1")
    eqs = laurent_conditions(f)
    sol = solve_linear(eqs, data.symbols)
    out = {}
    for s, v in sol.items():
        if v.denominator != 1 or v < 0:
            raise MultiplicityError(f"{s} = {v} is not a nonnegative integer; the data are inconsistent")
        out[s] = int(v)
    return out


# ----------------------------------------------------------------- compasses


@dataclass(frozen=True)
class Pairing:
    ok: bool
    pairs: tuple[tuple[Weight, Weight], ...] = ()
    singleton: Weight | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def contact_dual_check(p: FixedPoint) -> Pairing:
    """Split the compass into pairs summing to -mu plus the single entry -mu."""
    d = len(p.compass)
    if d % 2 == 0:
        return Pairing(False, reason=f"compass size {d} is even")
    target = -p.mu
    counts = Counter(dict(p.compass.entries))
    if counts[target] < 1:
        return Pairing(False, reason=f"{target} is not in the compass")
    counts[target] -= 1
    pairs = []
    for w in sorted(counts):
        m = counts[w]
        if m == 0:
            continue
        partner = target - w
        if partner == w:
            if m % 2:
                return Pairing(False, reason=f"{w} has odd multiplicity but pairs with itself")
            pairs += [(w, w)] * (m // 2)
            counts[w] = 0
            continue
        if counts[partner] != m:
            return Pairing(False, reason=f"{w} (x{m}) has no matching {partner} (x{counts[partner]})")
        pairs += [(w, partner)] * m
        counts[w] = counts[partner] = 0
    return Pairing(True, tuple(pairs), target)


def project_compass(c: Compass, p: Projection) -> tuple[Compass, Compass]:
    """Images of nonzero entries, and the kernel entries in kernel coordinates."""
    image, kernel = [], []
    basis = [list(k) for k in p.kernel_basis]
    for w, m in c:
        v = project(p, w)
        if not v.is_zero():
            image.append((v, m))
            continue
        if not basis:
            raise ValueError(f"{w} lies in the kernel but the projection has no kernel basis")
        coords = linalg.solve([list(col) for col in zip(*basis)], list(w))
        if coords is None:
            raise ValueError(f"{w} is in the kernel but not in the span of the kernel basis")
        kernel.append((Weight(coords), m))
    return Compass(image), Compass(kernel)


@dataclass(frozen=True)
class ConeReport:
    vertex: Weight
    violations: tuple[tuple[Weight, str], ...]
    minus_vertex_multiplicity: int | None

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed


def compass_cone_certificate(p: FixedPoint, delta: Polytope, contact: bool = True) -> ConeReport:
    """Check compass entries against the tangent cone sigma at mu.

    Every entry must lie in sigma.  For contact data it must also lie in
    -mu - sigma, and -mu must occur exactly once.
    """
    v = p.mu
    sigma = tangent_cone(delta, v)  # raises unless mu is a vertex
    dual = sigma.negated().shifted(-v)
    bad = []
    for w, m in p.compass:
        if not sigma.contains(w):
            bad.append((w, "outside the tangent cone"))
        elif contact and not dual.contains(w):
            bad.append((w, "its dual -mu-nu is outside the tangent cone"))
    mult = None
    if contact and len(p.compass):
        mult = p.compass.multiplicity(-v)
        if mult != 1:
            bad.append((-v, f"-mu has multiplicity {mult}, expected 1"))
    return ConeReport(v, tuple(bad), mult)


def cone_box(sigma: Cone, v: Weight) -> tuple[list[Fraction], list[Fraction]]:
    """A box containing sigma ∩ (-v - sigma), for a pointed cone sigma at 0.

    phi = sum of the normals is strictly negative on sigma minus 0, and both
    u and -v - u lie in sigma, so phi(u) >= phi(-v); writing u as a positive
    combination of generators bounds each coordinate.
    """
    k = len(v)
    phi = Weight.zero(k)
    for n in sigma.normals:
        phi = phi + n
    reach = -phi.dot(-v)
    if reach < 0:
        return [Fraction(1)] * k, [Fraction(-1)] * k  # empty
    bound = []
    for i in range(k):
        b = Fraction(0)
        for g in sigma.generators:
            b = max(b, abs(g[i]) / -phi.dot(g))
        bound.append(b * reach)
    return [-b for b in bound], bound


def compass_candidates(delta: Polytope, v, lattice: Lattice) -> list[Weight]:
    """Lattice points of sigma ∩ (-v - sigma) other than 0 and -v."""
    v = as_weight(v)
    sigma = tangent_cone(delta, v)
    box = cone_box(sigma, v)
    pts = cone_intersect_lattice(sigma, sigma.negated().shifted(-v), lattice, box)
    return [u for u in pts if not u.is_zero() and u != -v]


def anticanonical_weight(p: FixedPoint) -> Weight:
    return -p.compass.total(len(p.mu))


# ------------------------------------------------------------------- models


@dataclass(frozen=True)
class Comparison:
    match: bool
    only_in_first: tuple = ()
    only_in_second: tuple = ()
    characters_agree: bool | None = None

    def __bool__(self) -> bool:
        return self.match


def compare_models(a: FixedPointData, b: FixedPointData, check_characters: bool = True) -> Comparison:
    """Exact multiset matching of components by (mu, compass) and curve data."""
    if a.rank != b.rank:
        raise ValueError("data of different ranks")
    ka = Counter([("point", p.key()) for p in a.points] + [("curve", c.key()) for c in a.curves] + [("unknown", u.key()) for u in a.unknowns])
    kb = Counter([("point", p.key()) for p in b.points] + [("curve", c.key()) for c in b.curves] + [("unknown", u.key()) for u in b.unknowns])
    only_a = tuple(sorted((ka - kb).elements(), key=repr))
    only_b = tuple(sorted((kb - ka).elements(), key=repr))
    match = a.ambient_dim == b.ambient_dim and not only_a and not only_b
    agree = None
    if match and check_characters and not a.unknowns:
        agree = euler_characteristic(a).equivalent(euler_characteristic(b))
    return Comparison(match, only_a, only_b, agree)


@dataclass(frozen=True)
class IntervalVerdict:
    kind: str  # P1_O1, P1_O2, Pd, Qd or inconsistent
    d: int
    reason: str = ""


def _num(x: Fraction):
    return int(x) if x.denominator == 1 else x


def classify_interval_case(data: FixedPointData) -> IntervalVerdict:
    """Recognize (P^1, O(1)), (P^1, O(2)), (P^d, O(1)) or (Q^d, O(1)) from Delta = [0, 2].

    mu is shifted so that its minimum is 0; the extremal compasses decide.
    """
    if data.rank != 1:
        raise ValueError("classify_interval_case needs rank-1 data")
    d = data.ambient_dim
    values = [p.mu[0] for p in data.points] + [c.mu[0] for c in data.curves] + [u.mu[0] for u in data.unknowns]
    lo, hi = min(values), max(values)
    if hi - lo != 2:
        raise ValueError(f"Delta is [{lo}, {hi}], not an interval of length 2")
    if any(c.mu[0] in (lo, hi) for c in data.curves) or any(u.mu[0] in (lo, hi) for u in data.unknowns):
        raise ValueError("extremal components must be isolated points")
    sources = [p for p in data.points if p.mu[0] == lo]
    sinks = [p for p in data.points if p.mu[0] == hi]
    if len(sources) != 1 or len(sinks) != 1:
        return IntervalVerdict("inconsistent", d, "each end of Delta needs exactly one fixed point")
    src = sorted(_num(w[0]) for w in sources[0].compass.weights())
    snk = sorted(_num(-w[0]) for w in sinks[0].compass.weights())
    if src != snk:
        return IntervalVerdict("inconsistent", d, f"source compass {src} and sink compass {[-x for x in snk]} do not mirror")
    if d == 1:
        if src == [2]:
            return IntervalVerdict("P1_O1", 1)
        if src == [1]:
            return IntervalVerdict("P1_O2", 1)
        return IntervalVerdict("inconsistent", 1, f"compass {src}")
    if src == [1] * (d - 1) + [2]:
        return IntervalVerdict("Pd", d)
    if d >= 3 and src == [1] * d:
        return IntervalVerdict("Qd", d)
    return IntervalVerdict("inconsistent", d, f"compass {src} matches neither (1^(d-1),2) nor (1^d)")


@dataclass(frozen=True)
class QuadricVerdict:
    passed: bool
    violations: tuple[tuple[str, Weight], ...]
    d: int | None


def quadric_recognition(data: FixedPointData, delta: Polytope, h0_zero: int | None = None) -> QuadricVerdict:
    """Check the extremal compasses at +-x_i exclude -+2x_i; report d = 2r + h0_0 - 2.

    ``h0_zero`` is the weight-0 multiplicity of H^0(L); when omitted it is
    read off the certified character if the data are complete.
    """
    verts = list(delta.vertices)
    r = data.rank
    vs = set(verts)
    if len(verts) != 2 * r or any(-v not in vs for v in verts):
        raise ValueError("Delta must be conv(+-x_1, ..., +-x_r)")
    xs = sorted({max(v, -v) for v in verts})
    if linalg.rank([list(x) for x in xs]) != r:
        raise ValueError("the vertices +-x_i must come from a basis")
    bad = []
    by_mu: dict[Weight, list[FixedPoint]] = {}
    for p in data.points:
        by_mu.setdefault(p.mu, []).append(p)
    for v in verts:
        here = by_mu.get(v, [])
        if any(c.mu == v for c in data.curves) or any(u.mu == v for u in data.unknowns) or len(here) != 1:
            raise ValueError(f"the extremal component at {v} must be a single isolated point")
        if here[0].compass.multiplicity(-2 * v):
            bad.append((here[0].label, -2 * v))
    if h0_zero is None and data.complete and not data.unknowns and not bad:
        h0_zero = int(certify_laurent(data).coefficient(data.exponent(Weight.zero(r))))
    d = 2 * r + h0_zero - 2 if h0_zero is not None and not bad else None
    return QuadricVerdict(not bad, tuple(bad), d)


def curve_through_points(p: FixedPoint, q: FixedPoint, lam: Sequence[int], label: str = "") -> FixedCurve:
    """Fixed-curve data for the rank-1 subtorus lam, from the two points of an invariant P^1.

    The curve joins p and q; its tangent weight at p is the unique compass
    entry killed by lam.  Degrees follow from mu(q) - mu(p) = deg * nu_p, and
    the conormal summand of lam-weight k has c1 equal to the sum of the
    weight differences of its entries divided by nu_p.
    """
    lam = [Fraction(x) for x in lam]

    def val(w: Weight) -> Fraction:
        return sum((a * b for a, b in zip(lam, w)), Fraction(0))

    if val(p.mu) != val(q.mu):
        raise ValueError("the two points must have the same lam-weight")
    tangent_p = [w for w in p.compass.weights() if val(w) == 0]
    tangent_q = [w for w in q.compass.weights() if val(w) == 0]
    if len(tangent_p) != 1 or len(tangent_q) != 1:
        raise ValueError("lam must kill exactly one compass entry at each point")
    nu_p = tangent_p[0]

    def ratio(diff: Weight) -> Fraction:
        k = next(i for i, x in enumerate(nu_p) if x)
        c = diff[k] / nu_p[k]
        if diff != nu_p * c:
            raise ValueError(f"{diff} is not a multiple of the tangent weight {nu_p}")
        return c

    degree = ratio(q.mu - p.mu)
    classes: dict[Fraction, list[list[Weight]]] = {}
    for pt in (p, q):
        for w in pt.compass.weights():
            k = val(w)
            if k:
                classes.setdefault(k, [[], []])[pt is q].append(w)
    summands = []
    for k, (at_p, at_q) in sorted(classes.items()):
        if len(at_p) != len(at_q):
            raise ValueError(f"lam-weight {k} has {len(at_p)} entries at p but {len(at_q)} at q")
        diff = Weight.zero(len(nu_p))
        for a, b in zip(at_p, at_q):
            diff = diff + b - a
        c1 = ratio(diff) if not diff.is_zero() else Fraction(0)
        if c1.denominator != 1 or degree.denominator != 1 or k.denominator != 1:
            raise ValueError("non-integral curve data")
        summands.append(ConormalSummand(Weight([k]), len(at_p), int(c1)))
    return FixedCurve(label, Weight([val(p.mu)]), 0, int(degree), tuple(summands))


__all__ = [
    "Compass",
    "FixedPoint",
    "FixedCurve",
    "ConormalSummand",
    "UnknownTemplate",
    "FixedPointData",
    "euler_characteristic",
    "certify_laurent",
    "solve_multiplicities",
    "MultiplicityError",
    "SolveError",
    "NotDivisible",
    "contact_dual_check",
    "project_compass",
    "compass_cone_certificate",
    "compass_candidates",
    "anticanonical_weight",
    "compare_models",
    "classify_interval_case",
    "quadric_recognition",
    "curve_through_points",
]
