"""Root systems of simple type in Bourbaki coordinates.

Types A-D carry the explicit weight-lattice presentations used throughout
the package; for E, F, G the weight lattice is generated by fundamental
weights computed from a choice of simple roots.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .polytope import Polytope, hull
from .weights import Lattice, Projection, Weight

HALF = Fraction(1, 2)

# aliases the classification never computes with
ALIASES = {("B", 2), ("D", 3)}


@dataclass(frozen=True)
class RootSystemType:
    family: str
    rank: int

    def __post_init__(self):
        f, r = self.family, self.rank
        ok = (
            (f == "A" and r >= 1)
            or (f == "B" and r >= 2)
            or (f == "C" and r >= 2)
            or (f == "D" and r >= 3)
            or (f == "E" and r in (6, 7, 8))
            or (f == "F" and r == 4)
            or (f == "G" and r == 2)
        )
        if not ok:
            raise ValueError(f"invalid root system type {f}{r}")

    @classmethod
    def parse(cls, name: str) -> "RootSystemType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", name)
        if not m:
            raise ValueError(f"cannot parse root system type {name!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def is_alias(self) -> bool:
        return (self.family, self.rank) in ALIASES

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class RootSystem:
    type: RootSystemType
    ambient_rank: int
    roots: tuple[Weight, ...]
    long_roots: tuple[Weight, ...]
    short_roots: tuple[Weight, ...]
    weight_lattice: Lattice

    @property
    def simple_roots(self) -> list[Weight]:
        return simple_roots(self.roots)

    def reflect(self, alpha: Weight, w: Weight) -> Weight:
        """The reflection s_alpha applied to w."""
        return w - alpha * (2 * alpha.dot(w) / alpha.norm2())

    def simple_reflections(self):
        return [lambda w, a=a: self.reflect(a, w) for a in self.simple_roots]

    def flattening(self) -> Projection:
        """Coordinates with respect to a Z-basis of the weight lattice."""
        return coordinate_projection(self.weight_lattice)

    def to_json(self) -> dict:
        return {
            "type": str(self.type),
            "roots": [r.to_json() for r in self.roots],
            "long": [r.to_json() for r in self.long_roots],
            "short": [r.to_json() for r in self.short_roots],
            "lattice": self.weight_lattice.to_json(),
        }


def _vec(n: int, entries: dict) -> Weight:
    return Weight(entries.get(i, 0) for i in range(n))


def _pm_pairs(n: int, idx: range) -> list[Weight]:
    out = []
    for i, j in itertools.combinations(idx, 2):
        for s, t in itertools.product((1, -1), repeat=2):
            out.append(_vec(n, {i: s, j: t}))
    return out


def _roots(f: str, r: int) -> tuple[int, list[Weight]]:
    if f == "A":
        n = r + 1
        return n, [_vec(n, {i: 1, j: -1}) for i in range(n) for j in range(n) if i != j]
    if f == "B":
        return r, _pm_pairs(r, range(r)) + [_vec(r, {i: s}) for i in range(r) for s in (1, -1)]
    if f == "C":
        return r, _pm_pairs(r, range(r)) + [_vec(r, {i: 2 * s}) for i in range(r) for s in (1, -1)]
    if f == "D":
        return r, _pm_pairs(r, range(r))
    if f == "E":
        half = []
        if r == 8:
            roots = _pm_pairs(8, range(8))
            for signs in itertools.product((1, -1), repeat=8):
                if signs.count(-1) % 2 == 0:
                    half.append(Weight(s * HALF for s in signs))
        elif r == 7:
            roots = _pm_pairs(8, range(6)) + [_vec(8, {6: 1, 7: -1}), _vec(8, {6: -1, 7: 1})]
            for signs in itertools.product((1, -1), repeat=6):
                if signs.count(-1) % 2 == 1:
                    for e in (1, -1):
                        half.append(Weight([e * s * HALF for s in signs] + [e * HALF, -e * HALF]))
        else:
            roots = _pm_pairs(8, range(5))
            for signs in itertools.product((1, -1), repeat=5):
                if signs.count(-1) % 2 == 0:
                    for e in (1, -1):
                        half.append(Weight([e * s * HALF for s in signs] + [-e * HALF, -e * HALF, e * HALF]))
        return 8, roots + half
    if f == "F":
        roots = _pm_pairs(4, range(4)) + [_vec(4, {i: s}) for i in range(4) for s in (1, -1)]
        roots += [Weight(s * HALF for s in signs) for signs in itertools.product((1, -1), repeat=4)]
        return 4, roots
    if f == "G":
        short = [_vec(3, {i: 1, j: -1}) for i in range(3) for j in range(3) if i != j]
        long_ = []
        for i in range(3):
            v = _vec(3, {j: -1 for j in range(3)})
            v = v + _vec(3, {i: 3})
            long_ += [v, -v]
        return 3, short + long_
    raise ValueError(f)


def simple_roots(roots) -> list[Weight]:
    """Simple roots for the positive system cut out by a generic functional."""
    roots = list(roots)
    n = len(roots[0])
    # irrational-free generic functional: rapidly decreasing integer weights
    for base in itertools.count(7):
        fn = [base ** (n - i) + i for i in range(n)]
        vals = [r.dot(fn) for r in roots]
        if all(v != 0 for v in vals):
            break
    positive = [r for r, v in zip(roots, vals) if v > 0]
    pos_set = set(positive)
    decomposable = {a + b for a, b in itertools.combinations(positive, 2)} & pos_set
    return sorted(r for r in positive if r not in decomposable)


def fundamental_weights(roots) -> list[Weight]:
    """Fundamental weights dual to the simple coroots, inside the root span."""
    simple = simple_roots(roots)
    m = len(simple)
    # omega_i = sum_k c_ik alpha_k with 2 (omega_i, alpha_j) / (alpha_j, alpha_j) = delta_ij
    cartan = [[2 * a.dot(b) / b.norm2() for b in simple] for a in simple]
    inv = linalg.inverse(cartan)
    n = len(simple[0])
    out = []
    for i in range(m):
        w = Weight.zero(n)
        for k in range(m):
            w = w + simple[k] * inv[i][k]
        out.append(w)
    return out


def _lattice(f: str, r: int, n: int, roots: list[Weight]) -> Lattice:
    if f == "A":
        gens = [_vec(n, {i: 1, i + 1: -1}) for i in range(r)]
        shift = Weight([1 - Fraction(1, n)] + [-Fraction(1, n)] * r)
        return Lattice(n, gens + [shift])
    if f in ("B", "D"):
        return Lattice(n, [_vec(n, {i: 1}) for i in range(n)] + [Weight([HALF] * n)])
    if f == "C":
        return Lattice.standard(n)
    return Lattice(n, fundamental_weights(roots))


def build(t) -> RootSystem:
    if isinstance(t, str):
        t = RootSystemType.parse(t)
    return _build(t)


@lru_cache(maxsize=None)
def _build(t: RootSystemType) -> RootSystem:
    n, roots = _roots(t.family, t.rank)
    roots = sorted(set(roots))
    norms = {r.norm2() for r in roots}
    top = max(norms)
    if len(norms) == 1:
        long_, short = roots, []
    else:
        long_ = [r for r in roots if r.norm2() == top]
        short = [r for r in roots if r.norm2() != top]
    return RootSystem(t, n, tuple(roots), tuple(long_), tuple(short), _lattice(t.family, t.rank, n, roots))


@lru_cache(maxsize=None)
def _root_polytope(t: RootSystemType) -> Polytope:
    return hull(_build(t).roots)


def root_polytope(rs: RootSystem) -> Polytope:
    return _root_polytope(rs.type)


def coordinate_projection(lattice: Lattice) -> Projection:
    """Map the span of ``lattice`` onto Z^dim via coordinates in its basis."""
    basis = lattice.basis
    gram = [[a.dot(b) for b in basis] for a in basis]
    ginv = linalg.inverse(gram)
    rows = []
    for i in range(len(basis)):
        rows.append([sum((ginv[i][j] * basis[j][t] for j in range(len(basis))), Fraction(0)) for t in range(lattice.rank)])
    return Projection(rows)


def expected_root_count(t: RootSystemType) -> int:
    r = t.rank
    return {
        "A": r * (r + 1),
        "B": 2 * r * r,
        "C": 2 * r * r,
        "D": 2 * r * (r - 1),
        "E": {6: 72, 7: 126, 8: 240}.get(r, 0),
        "F": 48,
        "G": 12,
    }[t.family]
