"""Weights, weight lattices and linear maps between them.

A weight is written additively as a vector of rationals.  Half-integral
coordinates are allowed, since the weight lattices of B_r, D_r and
friends contain them; lattice membership is a separate query.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

from . import linalg


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@dataclass(frozen=True, order=True)
class Weight:
    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable = ()):
        object.__setattr__(self, "coords", tuple(_frac(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def unit(cls, rank: int, i: int, scale=1) -> "Weight":
        return cls(scale if j == i else 0 for j in range(rank))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: "Weight") -> None:
        if len(other.coords) != len(self.coords):
            raise ValueError(f"rank mismatch: {len(self.coords)} vs {len(other.coords)}")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self.coords)

    def __mul__(self, k) -> "Weight":
        k = _frac(k)
        return Weight(k * a for a in self.coords)

    __rmul__ = __mul__

    def __truediv__(self, k) -> "Weight":
        k = _frac(k)
        return Weight(a / k for a in self.coords)

    def dot(self, other: "Weight | Sequence") -> Fraction:
        other = other.coords if isinstance(other, Weight) else tuple(map(_frac, other))
        if len(other) != len(self.coords):
            raise ValueError("rank mismatch in dot product")
        return sum((a * b for a, b in zip(self.coords, other)), Fraction(0))

    def norm2(self) -> Fraction:
        return self.dot(self)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"{self} is not integral")
        return tuple(int(c) for c in self.coords)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]

    @classmethod
    def from_json(cls, data: Sequence) -> "Weight":
        return cls(data)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        return f"Weight{self}"


def as_weight(w) -> Weight:
    return w if isinstance(w, Weight) else Weight(w)


@dataclass(frozen=True)
class Lattice:
    """A lattice given by generators; ``rank`` is the ambient rank."""

    rank: int
    generators: tuple[Weight, ...]

    def __init__(self, rank: int, generators: Iterable):
        gens = tuple(as_weight(g) for g in generators)
        for g in gens:
            if len(g) != rank:
                raise ValueError(f"generator {g} does not have rank {rank}")
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "generators", gens)

    @classmethod
    def standard(cls, rank: int) -> "Lattice":
        return cls(rank, [Weight.unit(rank, i) for i in range(rank)])

    @cached_property
    def _scaled(self) -> tuple[int, list[list[int]]]:
        den = linalg.common_denominator(c for g in self.generators for c in g)
        rows = linalg.echelon_basis([[int(c * den) for c in g] for g in self.generators])
        return den, rows

    @property
    def basis(self) -> list[Weight]:
        """A Z-basis in echelon form."""
        den, rows = self._scaled
        return [Weight(Fraction(x, den) for x in r) for r in rows]

    @property
    def dim(self) -> int:
        return len(self._scaled[1])

    def coordinates(self, w: Weight) -> list[Fraction] | None:
        """Coordinates of ``w`` in ``basis``; None when w is outside the span."""
        w = as_weight(w)
        if len(w) != self.rank:
            raise ValueError(f"dimension mismatch: lattice rank {self.rank}, weight rank {len(w)}")
        den, rows = self._scaled
        target = [c * den for c in w]
        coeffs: list[Fraction] = []
        residual = list(target)
        for row in rows:
            lead = next(i for i, x in enumerate(row) if x)
            k = residual[lead] / row[lead]
            coeffs.append(k)
            residual = [r - k * x for r, x in zip(residual, row)]
        if any(residual):
            return None
        return coeffs

    def contains(self, w: Weight) -> bool:
        coords = self.coordinates(w)
        return coords is not None and all(c.denominator == 1 for c in coords)

    def from_coordinates(self, m: Sequence) -> Weight:
        out = Weight.zero(self.rank)
        for k, b in zip(m, self.basis):
            out = out + b * k
        return out

    def index_in(self, other: "Lattice") -> int:
        """Index [other : self] for full-rank sublattices of ``other``."""
        sub = [self.coordinates_in(other, b) for b in self.basis]
        return abs(int(linalg.det(sub)))

    @staticmethod
    def coordinates_in(other: "Lattice", w: Weight) -> list[Fraction]:
        c = other.coordinates(w)
        if c is None:
            raise ValueError(f"{w} is outside the span of the lattice")
        return c

    def to_json(self) -> dict:
        return {"rank": self.rank, "generators": [g.to_json() for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> "Lattice":
        return cls(int(data["rank"]), [Weight.from_json(g) for g in data["generators"]])


def lattice_contains(lattice: Lattice, w: Weight) -> bool:
    return lattice.contains(as_weight(w))


@dataclass(frozen=True)
class Projection:
    """Linear map of weights, ``matrix`` acting on column vectors."""

    matrix: tuple[tuple[Fraction, ...], ...]
    kernel_basis: tuple[Weight, ...]

    def __init__(self, matrix: Sequence[Sequence], kernel_basis: Iterable | None = None):
        mat = tuple(tuple(_frac(x) for x in row) for row in matrix)
        object.__setattr__(self, "matrix", mat)
        if kernel_basis is None:
            ncols = len(mat[0]) if mat else 0
            kernel_basis = [_clear_denominators(v) for v in linalg.nullspace(mat, ncols)] if mat else []
        kb = tuple(as_weight(k) for k in kernel_basis)
        for k in kb:
            if any(sum((a * b for a, b in zip(row, k)), Fraction(0)) for row in mat):
                raise ValueError(f"{k} is not in the kernel")
        object.__setattr__(self, "kernel_basis", kb)

    @classmethod
    def from_functionals(cls, functionals: Iterable, kernel_basis: Iterable | None = None) -> "Projection":
        return cls([as_weight(f).coords for f in functionals], kernel_basis)

    @classmethod
    def identity(cls, rank: int) -> "Projection":
        return cls([[int(i == j) for j in range(rank)] for i in range(rank)], [])

    @property
    def source_rank(self) -> int:
        return len(self.matrix[0]) if self.matrix else len(self.kernel_basis[0])

    @property
    def target_rank(self) -> int:
        return len(self.matrix)

    def __call__(self, w: Weight) -> Weight:
        return project(self, w)


def _clear_denominators(v: Sequence[Fraction]) -> Weight:
    den = linalg.common_denominator(v)
    return Weight(linalg.primitive_int([int(x * den) for x in v]))


def project(p: Projection, w: Weight) -> Weight:
    w = as_weight(w)
    if p.matrix and len(w) != len(p.matrix[0]):
        raise ValueError(f"dimension mismatch: projection expects rank {len(p.matrix[0])}, got {len(w)}")
    return Weight(sum((a * b for a, b in zip(row, w)), Fraction(0)) for row in p.matrix)


def primitive_part(v) -> Weight:
    v = as_weight(v)
    ints = v.ints()
    if not any(ints):
        raise ValueError("the zero vector has no primitive part")
    return Weight(linalg.primitive_int(ints))


def unimodular_to_axis(v) -> list[list[int]]:
    """Integer matrix U with det ±1 and U . primitive_part(v) = e_1."""
    ints = list(as_weight(v).ints())
    if not any(ints):
        raise ValueError("unimodular_to_axis needs a nonzero vector")
    n = len(ints)
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    x = list(ints)
    for i in range(n - 1, 0, -1):
        p, q = x[i - 1], x[i]
        if q == 0:
            continue
        g, s, t = linalg.xgcd(p, q)
        a, b = p // g, q // g
        # [[s, t], [-b, a]] has determinant 1 and sends (p, q) to (g, 0)
        ri, rj = u[i - 1], u[i]
        u[i - 1] = [s * y + t * z for y, z in zip(ri, rj)]
        u[i] = [-b * y + a * z for y, z in zip(ri, rj)]
        x[i - 1], x[i] = g, 0
    if x[0] < 0:
        u[0] = [-y for y in u[0]]
    return u


def gcd_of(values: Iterable[int]) -> int:
    g = 0
    for x in values:
        g = gcd(g, int(x))
    return g
