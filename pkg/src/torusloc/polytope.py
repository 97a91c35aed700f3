"""Exact convex hulls, faces, tangent cones and lattice points.

Hulls are computed by gift wrapping in homogeneous integer coordinates.
A facet is an integer vector f with f . (x, 1) >= 0 on every input point;
the neighbour across a ridge is found by rotating f about the ridge.
Ridges of a simplicial facet come from one integer adjugate; other facets
are hulled one dimension down, seeded with the facet they were reached from.
All arithmetic is integral, so results are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import ceil, floor
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .weights import Lattice, Weight, as_weight

_SAFE = 1 << 30


def _primitive(v: Sequence[int]) -> tuple[int, ...]:
    return linalg.primitive_int(v)


class _PointSet:
    """Integer points in homogeneous form, with a fallback to Python ints."""

    def __init__(self, rows: Sequence[Sequence[int]]):
        self.rows = [tuple(int(x) for x in r) + (1,) for r in rows]
        self.n = len(self.rows)
        self.k = len(self.rows[0]) - 1
        self.bound = max((abs(x) for r in self.rows for x in r), default=1)
        self.arr = np.array(self.rows, dtype=np.int64)
        self.obj = None

    def values(self, f: Sequence[int]) -> np.ndarray:
        fb = max(max(f), -min(f))
        if fb * self.bound * (self.k + 1) < _SAFE:
            return self.arr @ np.array(f, dtype=np.int64)
        if self.obj is None:
            self.obj = np.array(self.rows, dtype=object)
        return self.obj @ np.array([int(x) for x in f], dtype=object)


def _argmin_ratio(num: np.ndarray, den: np.ndarray, mask: np.ndarray) -> int:
    """Index minimizing num/den over mask (den > 0 there), exactly."""
    idx = np.flatnonzero(mask)
    n, d = num[idx], den[idx]
    j = 0
    while True:
        cross = n * d[j] - n[j] * d
        bad = np.flatnonzero(cross < 0)
        if bad.size == 0:
            return int(idx[j])
        j = int(bad[np.argmin(cross[bad])])


def _rotate(ps: _PointSet, f: Sequence[int], g: Sequence[int]) -> tuple[tuple[int, ...], frozenset]:
    """Rotate facet f about the ridge where f = g = 0 (g >= 0 on the facet)."""
    sigma = ps.values(f)
    gamma = ps.values(g)
    j = _argmin_ratio(gamma, sigma, sigma > 0)
    sj, gj = int(sigma[j]), int(gamma[j])
    new = _primitive([sj * int(b) - gj * int(a) for a, b in zip(f, g)])
    vals = ps.values(new)
    tight = frozenset(int(i) for i in np.flatnonzero(vals == 0))
    return new, tight


def _affine_rank(rows: Sequence[Sequence[int]]) -> int:
    return linalg.rank([list(r) for r in rows])


def _int_nullspace(rows: Sequence[Sequence[int]], ncols: int) -> list[tuple[int, ...]]:
    out = []
    for v in linalg.nullspace([list(r) for r in rows], ncols) if rows else linalg.nullspace([], ncols):
        den = linalg.common_denominator(v)
        out.append(_primitive([int(x * den) for x in v]))
    return out


def _parallel(a: Sequence[int], b: Sequence[int]) -> bool:
    return linalg.rank([list(a), list(b)]) < 2


def _initial_facet(ps: _PointSet) -> tuple[tuple[int, ...], frozenset]:
    k = ps.k
    top = max(r[0] for r in ps.rows)
    f = tuple([-1] + [0] * (k - 1) + [top])
    tight = frozenset(i for i, r in enumerate(ps.rows) if r[0] == top)
    while _affine_rank([ps.rows[i] for i in tight]) < k:
        null = _int_nullspace([ps.rows[i] for i in tight], k + 1)
        g = next(v for v in null if not _parallel(v, f))
        f, tight = _rotate(ps, f, g)
    return f, tight


def _facets_full(points: Sequence[Sequence[int]], seed=None) -> dict[tuple[int, ...], frozenset]:
    """Facets of the hull of full-dimensional integer points.

    Returns a map from homogeneous primitive facet vectors to the indices of
    the points lying on each facet.
    """
    ps = _PointSet(points)
    k = ps.k
    if k == 1:
        xs = [r[0] for r in ps.rows]
        lo, hi = min(xs), max(xs)
        return {
            (1, -lo): frozenset(i for i, x in enumerate(xs) if x == lo),
            (-1, hi): frozenset(i for i, x in enumerate(xs) if x == hi),
        }
    if seed is None:
        f0, s0 = _initial_facet(ps)
    else:
        f0 = seed
        s0 = frozenset(int(i) for i in np.flatnonzero(ps.values(f0) == 0))
    facets = {f0: s0}
    parent_of: dict[tuple[int, ...], tuple[int, ...]] = {}
    stack = [f0]
    done: set[frozenset] = set()
    while stack:
        f = stack.pop()
        for g, ridge in _ridges(ps, f, facets[f], parent_of.get(f)):
            if ridge in done:
                continue
            done.add(ridge)
            f2, s2 = _rotate(ps, f, g)
            if f2 not in facets:
                facets[f2] = s2
                parent_of[f2] = f
                stack.append(f2)
    return facets


def _ridges(ps: _PointSet, f: tuple[int, ...], tight: frozenset, parent=None):
    k = ps.k
    members = sorted(tight)
    if len(members) == k:
        # simplex facet: column j of adj(M) vanishes on every row but j
        outside = next(i for i in range(ps.n) if i not in tight)
        mat = [ps.rows[i] for i in members] + [ps.rows[outside]]
        adj, d = linalg.adjugate(mat)
        sign = 1 if d > 0 else -1
        for j in range(k):
            g = _primitive([sign * adj[i][j] for i in range(k + 1)])
            yield g, frozenset(members[:j] + members[j + 1:])
        return
    drop = min((i for i in range(k) if f[i] != 0), key=lambda i: abs(f[i]))
    sub = [ps.rows[i][:drop] + ps.rows[i][drop + 1:k] for i in members]
    seed = None
    if parent is not None:
        fi, pi = f[drop], parent[drop]
        s = 1 if fi > 0 else -1
        h = [s * (fi * p - pi * q) for p, q in zip(parent, f)]
        seed = _primitive(h[:drop] + h[drop + 1:])
    for h, local in _facets_full(sub, seed).items():
        g = h[:drop] + (0,) + h[drop:]
        yield g, frozenset(members[i] for i in local)


@dataclass(frozen=True)
class Polytope:
    """V- and H-representation of a polytope.

    ``facets`` are pairs (normal, offset) meaning normal . x <= offset;
    ``equations`` cut out the affine hull when it is not the whole space.
    ``facet_vertices`` lists, per facet, the indices of the vertices on it.
    """

    ambient_rank: int
    vertices: tuple[Weight, ...]
    facets: tuple[tuple[Weight, Fraction], ...]
    equations: tuple[tuple[Weight, Fraction], ...] = ()
    facet_vertices: tuple[frozenset, ...] = field(default=(), compare=False, repr=False)

    @property
    def dim(self) -> int:
        return self.ambient_rank - len(self.equations)

    def inequalities(self) -> list[tuple[Weight, Fraction]]:
        """All inequalities, with equations written as opposite pairs."""
        out = list(self.facets)
        for n, b in self.equations:
            out.append((n, b))
            out.append((-n, -b))
        return out

    def contains(self, x) -> bool:
        x = as_weight(x)
        return all(n.dot(x) <= b for n, b in self.facets) and all(n.dot(x) == b for n, b in self.equations)

    def vertex_index(self, v) -> int:
        v = as_weight(v)
        try:
            return self.vertices.index(v)
        except ValueError:
            raise ValueError(f"{v} is not a vertex") from None

    @cached_property
    def _vertex_facets(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in self.vertices]
        for fi, vs in enumerate(self.facet_vertices):
            for v in vs:
                out[v].append(fi)
        return out

    def scaled(self, m) -> "Polytope":
        m = Fraction(m)
        if m <= 0:
            raise ValueError("scale factor must be positive")
        return Polytope(
            self.ambient_rank,
            tuple(v * m for v in self.vertices),
            tuple((n, b * m) for n, b in self.facets),
            tuple((n, b * m) for n, b in self.equations),
            self.facet_vertices,
        )

    def to_json(self) -> dict:
        return {
            "vertices": [v.to_json() for v in self.vertices],
            "facets": [{"normal": n.to_json(), "offset": str(b)} for n, b in self.facets],
            "equations": [{"normal": n.to_json(), "offset": str(b)} for n, b in self.equations],
        }


def hull(points: Iterable) -> Polytope:
    pts = sorted({as_weight(p) for p in points})
    if not pts:
        raise ValueError("hull of an empty set")
    r = len(pts[0])
    if any(len(p) != r for p in pts):
        raise ValueError("points of different ranks")
    den = linalg.common_denominator(c for p in pts for c in p)
    ints = [[int(c * den) for c in p] for p in pts]
    base = ints[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in ints[1:]]
    red, pivots = linalg.rref(diffs) if diffs else ([], [])
    eq_normals = _int_nullspace(red, r) if red else _int_nullspace([], r)
    equations = tuple(
        (Weight(n), Weight(n).dot(pts[0])) for n in eq_normals
    )
    k = len(pivots)
    if k == 0:
        return Polytope(r, (pts[0],), (), equations, ())
    proj = [[p[i] for i in pivots] for p in ints]
    raw = _facets_full(proj)
    facets = []
    tights = []
    for f, tight in raw.items():
        normal = [0] * r
        for c, i in enumerate(pivots):
            normal[i] = -f[c]
        facets.append((Weight(normal), Fraction(f[k], den)))
        tights.append(tight)
    # a point is a vertex iff the facets through it meet in that point alone
    through: list[list[int]] = [[] for _ in pts]
    for fi, t in enumerate(tights):
        for i in t:
            through[i].append(fi)
    vertex_ids = []
    for i, fs in enumerate(through):
        if not fs:
            continue
        common = set(tights[fs[0]])
        for fi in fs[1:]:
            common &= tights[fi]
            if len(common) == 1:
                break
        if common == {i}:
            vertex_ids.append(i)
    renum = {old: new for new, old in enumerate(vertex_ids)}
    order = sorted(range(len(facets)), key=lambda i: (facets[i][0], facets[i][1]))
    facets = [facets[i] for i in order]
    facet_vertices = tuple(frozenset(renum[i] for i in tights[j] if i in renum) for j in order)
    return Polytope(r, tuple(pts[i] for i in vertex_ids), tuple(facets), equations, facet_vertices)


def edges_at_vertex(p: Polytope, v, method: str = "faces") -> list[Weight]:
    """Primitive directions of the edges of ``p`` leaving the vertex ``v``.

    ``method="faces"`` intersects the vertex sets of the facets shared by v
    and a candidate w; ``method="rank"`` checks that the shared facet normals
    have rank dim - 1.  Both are exact given the full H-representation.
    """
    iv = p.vertex_index(v)
    v = p.vertices[iv]
    if p.dim == 0:
        return []
    mine = p._vertex_facets[iv]
    out = []
    for iw, w in enumerate(p.vertices):
        if iw == iv:
            continue
        shared = [fi for fi in mine if iw in p.facet_vertices[fi]]
        if method == "faces":
            if p.dim == 1:
                is_edge = True
            elif not shared:
                is_edge = False
            else:
                common = set(p.facet_vertices[shared[0]])
                for fi in shared[1:]:
                    common &= p.facet_vertices[fi]
                is_edge = common == {iv, iw}
        elif method == "rank":
            rows = [list(p.facets[fi][0]) for fi in shared] + [list(n) for n, _ in p.equations]
            is_edge = linalg.rank(rows) == p.ambient_rank - 1 if rows else p.ambient_rank == 1
        else:
            raise ValueError(f"unknown method {method!r}")
        if is_edge:
            out.append(_primitive_direction(w - v))
    return sorted(out)


def _primitive_direction(d: Weight) -> Weight:
    den = linalg.common_denominator(d)
    return Weight(_primitive([int(c * den) for c in d]))


@dataclass(frozen=True)
class Cone:
    """The cone apex + cone(generators), also cut out by normal . (x - apex) <= 0."""

    apex: Weight
    generators: tuple[Weight, ...]
    normals: tuple[Weight, ...]

    def contains(self, x) -> bool:
        d = as_weight(x) - self.apex
        return all(n.dot(d) <= 0 for n in self.normals)

    def negated(self) -> "Cone":
        return Cone(-self.apex, tuple(-g for g in self.generators), tuple(-n for n in self.normals))

    def shifted(self, w) -> "Cone":
        return Cone(self.apex + as_weight(w), self.generators, self.normals)

    def inequalities(self) -> list[tuple[Weight, Fraction]]:
        return [(n, n.dot(self.apex)) for n in self.normals]


def tangent_cone(p: Polytope, v) -> Cone:
    """The cone generated by p - v, with apex at the origin."""
    iv = p.vertex_index(v)
    normals = [p.facets[fi][0] for fi in p._vertex_facets[iv]]
    for n, _ in p.equations:
        normals += [n, -n]
    gens = edges_at_vertex(p, p.vertices[iv])
    return Cone(Weight.zero(p.ambient_rank), tuple(gens), tuple(normals))


def _enumerate(lattice: Lattice, ineqs: list[tuple[Weight, Fraction]], lo: list[Fraction], hi: list[Fraction]) -> list[Weight]:
    """Lattice points with n . x <= b for all inequalities, inside the box [lo, hi]."""
    basis = lattice.basis
    m = len(basis)
    k = lattice.rank
    # coordinates in the lattice basis: x = sum c_i basis_i
    rows = []
    for n, b in ineqs:
        rows.append(([n.dot(bv) for bv in basis], Fraction(b)))
    for i in range(k):
        e = Weight.unit(k, i)
        rows.append(([e.dot(bv) for bv in basis], Fraction(hi[i])))
        rows.append(([-e.dot(bv) for bv in basis], -Fraction(lo[i])))
    # integer-scaled constraints c . m <= b
    cons = []
    for c, b in rows:
        den = linalg.common_denominator(list(c) + [b])
        cons.append(([int(x * den) for x in c], floor(b * den)))
    # bounds on each coordinate from the box, via the dual basis on the span
    gram = [[a.dot(b) for b in basis] for a in basis]
    ginv = linalg.inverse(gram)
    dual = [Weight(sum((ginv[i][j] * basis[j][t] for j in range(m)), Fraction(0)) for t in range(k)) for i in range(m)]
    clo, chi = [], []
    for dv in dual:
        mn = sum((min(c * lo[t], c * hi[t]) for t, c in enumerate(dv)), Fraction(0))
        mx = sum((max(c * lo[t], c * hi[t]) for t, c in enumerate(dv)), Fraction(0))
        clo.append(ceil(mn))
        chi.append(floor(mx))
    if any(a > b for a, b in zip(clo, chi)):
        return []
    # minimal contribution of the coordinates after position j, per constraint
    tail = []
    for c, _ in cons:
        acc = [0] * (m + 1)
        for j in range(m - 1, -1, -1):
            acc[j] = acc[j + 1] + min(c[j] * clo[j], c[j] * chi[j])
        tail.append(acc)
    found: list[list[int]] = []
    coords = [0] * m

    def rec(j: int, partial: list[int]) -> None:
        a, b = clo[j], chi[j]
        for ci, (c, rhs) in enumerate(cons):
            slack = rhs - partial[ci] - tail[ci][j + 1]
            cj = c[j]
            if cj > 0:
                b = min(b, slack // cj)
            elif cj < 0:
                a = max(a, -((slack) // (-cj)))
            elif slack < 0:
                return
            if a > b:
                return
        for x in range(a, b + 1):
            coords[j] = x
            nxt = [p + c[j] * x for p, (c, _) in zip(partial, cons)]
            if j + 1 == m:
                if all(v <= rhs for v, (_, rhs) in zip(nxt, cons)):
                    found.append(list(coords))
            else:
                rec(j + 1, nxt)

    if m == 0:
        zero = Weight.zero(k)
        return [zero] if all(n.dot(zero) <= b for n, b in ineqs) else []
    rec(0, [0] * len(cons))
    return sorted(lattice.from_coordinates(c) for c in found)


def lattice_points(p: Polytope, lattice: Lattice) -> list[Weight]:
    if lattice.rank != p.ambient_rank:
        raise ValueError("lattice and polytope ranks differ")
    lo = [min(v[i] for v in p.vertices) for i in range(p.ambient_rank)]
    hi = [max(v[i] for v in p.vertices) for i in range(p.ambient_rank)]
    pts = _enumerate(lattice, p.inequalities(), lo, hi)
    return [x for x in pts if p.contains(x)]


def cone_intersect_lattice(c1: Cone, c2: Cone, lattice: Lattice, box) -> list[Weight]:
    """Lattice points of c1 and c2 (each with its apex) inside a box.

    ``box`` is a radius r (meaning [-r, r] in each coordinate) or a pair of
    corner weights (lo, hi).
    """
    k = lattice.rank
    if isinstance(box, (int, Fraction)):
        lo, hi = [Fraction(-box)] * k, [Fraction(box)] * k
    else:
        lo, hi = [Fraction(x) for x in as_weight(box[0])], [Fraction(x) for x in as_weight(box[1])]
    ineqs = c1.inequalities() + c2.inequalities()
    return _enumerate(lattice, ineqs, lo, hi)


@dataclass(frozen=True)
class Face:
    parent: Polytope
    support: tuple[Weight, Fraction]
    vertex_subset: tuple[int, ...]

    @property
    def vertices(self) -> list[Weight]:
        return [self.parent.vertices[i] for i in self.vertex_subset]

    def polytope(self) -> Polytope:
        return hull(self.vertices)


def face_by_support(p: Polytope, normal) -> Face:
    normal = as_weight(normal)
    if normal.is_zero():
        raise ValueError("support functional must be nonzero")
    values = [normal.dot(v) for v in p.vertices]
    top = max(values)
    subset = tuple(i for i, x in enumerate(values) if x == top)
    return Face(p, (normal, top), subset)
