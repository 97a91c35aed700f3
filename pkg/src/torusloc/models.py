"""Fixed-point data of reference spaces.

Projective spaces, quadrics, the adjoint varieties of types B and D (lines
on quadrics), their downgrading to a rank-2 torus of type G2, and a few
rank-1 interval configurations with unknown point counts.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .localize import Compass, ConormalSummand, FixedCurve, FixedPoint, FixedPointData, UnknownTemplate
from .rootsys import RootSystemType, build
from .weights import Lattice, Projection, Weight, project

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ModelSpec:
    kind: str
    params: dict = field(default_factory=dict)

    KINDS = ("ProjectiveSpace", "Quadric", "AdjointBD", "DowngradeB3toG2", "DowngradeD4toG2")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}")

    def build(self) -> FixedPointData:
        p = self.params
        if self.kind == "ProjectiveSpace":
            return projective_space_data(p["weights"], extremal_only=p.get("extremal_only", False))
        if self.kind == "Quadric":
            return quadric_data(p["parity"], p["r"])
        if self.kind == "AdjointBD":
            return adjoint_bd_data(p["type"])
        if self.kind == "DowngradeB3toG2":
            return downgraded_g2_data("B3")
        return downgraded_g2_data("D4")


def _rank1(x) -> Weight:
    return Weight([x])


def projective_space_data(weights: Sequence, extremal_only: bool = False) -> FixedPointData:
    """P(V) for a rank-1 torus acting on V with the given weights.

    ``weights`` lists a weight per coordinate (repeats allowed) or pairs
    (a, multiplicity).  The component P(V_a) has mu = -a and compass
    ((a - b)^{dim V_b}) over the other weights b.  Components of dimension
    two or more are refused, or skipped with ``extremal_only`` (the result
    is then marked incomplete).
    """
    counts: Counter = Counter()
    for w in weights:
        if isinstance(w, (tuple, list)):
            counts[int(w[0])] += int(w[1])
        else:
            counts[int(w)] += 1
    if len(counts) < 2:
        raise ValueError("the torus acts trivially: a single fixed component is the whole space")
    d = sum(counts.values()) - 1
    keys = sorted(counts)
    points, curves = [], []
    for i, a in enumerate(keys):
        dim = counts[a] - 1
        label = f"P(V_{a})"
        if dim == 0:
            compass = Compass((_rank1(a - b), counts[b]) for b in keys if b != a)
            points.append(FixedPoint(label, _rank1(-a), compass))
        elif dim == 1:
            conormal = tuple(ConormalSummand(_rank1(a - b), counts[b], -counts[b]) for b in keys if b != a)
            curves.append(FixedCurve(label, _rank1(-a), 0, 1, conormal))
        elif extremal_only and 0 < i < len(keys) - 1:
            continue
        else:
            raise ValueError(f"fixed component {label} has dimension {dim}; only points and curves are supported")
    complete = len(points) + len(curves) == len(keys)
    return FixedPointData(d, 1, tuple(points), tuple(curves), complete=complete)


def quadric_data(parity: str, r: int) -> FixedPointData:
    """Q^{2r-1} (odd) or Q^{2r-2} (even) with the diagonal rank-r torus.

    Fixed points sit at +-e_i.  At v the compass is -v and +-e_j - v (odd)
    or only +-e_j - v (even), j running over the other indices.
    """
    if r < 2:
        raise ValueError("quadric data need r >= 2")
    if parity not in ("odd", "even"):
        raise ValueError("parity is 'odd' or 'even'")
    points = []
    for i in range(r):
        for s in (1, -1):
            v = Weight.unit(r, i, s)
            entries = [] if parity == "even" else [-v]
            for j in range(r):
                if j != i:
                    entries += [Weight.unit(r, j) - v, -Weight.unit(r, j) - v]
            points.append(FixedPoint(f"{'+' if s > 0 else '-'}e{i + 1}", v, Compass(entries)))
    if parity == "odd":
        return FixedPointData(2 * r - 1, r, tuple(points))
    # the index-2 sublattice of vectors with even coordinate sum
    gens = [Weight.unit(r, 0, 2)] + [Weight.unit(r, i) - Weight.unit(r, i + 1) for i in range(r - 1)]
    return FixedPointData(2 * r - 2, r, tuple(points), lattice=Lattice(r, gens))


def _signed_permutation(r: int, v: Weight) -> list[tuple[int, int]]:
    """Images (index, sign) of e_1, ..., e_r under a signed permutation sending e_1 + e_2 to v."""
    support = [(i, 1 if x > 0 else -1) for i, x in enumerate(v) if x]
    if len(support) != 2 or any(abs(x) != 1 for x in v if x):
        raise ValueError(f"{v} is not of the form +-e_a +- e_b")
    rest = [(i, 1) for i in range(r) if i not in (support[0][0], support[1][0])]
    return support + rest


def _apply(images: list[tuple[int, int]], w: Weight) -> Weight:
    out = [Fraction(0)] * len(w)
    for k, (i, s) in enumerate(images):
        out[i] += s * w[k]
    return Weight(out)


def adjoint_template(family: str, r: int) -> Compass:
    """Compass of the lines on a quadric at the vertex e_1 + e_2."""
    e = [Weight.unit(r, i) for i in range(r)]
    entries = [-e[0] - e[1]]
    for i in range(2, r):
        for s in (1, -1):
            entries += [e[i] * s - e[0], e[i] * s - e[1]]
    if family == "B":
        entries += [-e[0], -e[1]]
    return Compass(entries)


def adjoint_bd_data(t) -> FixedPointData:
    """Adjoint variety of type B_r or D_r: one fixed point per long root.

    The e_1 + e_2 template is carried to every other vertex by the signed
    permutation sending e_1 + e_2 there.
    """
    if isinstance(t, str):
        t = RootSystemType.parse(t)
    if not ((t.family == "B" and t.rank >= 3) or (t.family == "D" and t.rank >= 4)):
        raise ValueError(f"adjoint models are built for B_r (r >= 3) and D_r (r >= 4), not {t}")
    r = t.rank
    rs = build(t)
    template = adjoint_template(t.family, r)
    points = []
    for v in rs.long_roots:
        g = _signed_permutation(r, v)
        compass = Compass((_apply(g, w), m) for w, m in template)
        points.append(FixedPoint(str(v), v, compass))
    dim = 4 * r - 5 if t.family == "B" else 4 * r - 7
    return FixedPointData(dim, r, tuple(points), lattice=rs.weight_lattice)


G2_PROJECTIONS = {
    "B3": Projection([[1, 1, 0], [1, 0, 1]], [[HALF, -HALF, -HALF]]),
    "D4": Projection([[1, 1, 0, 0], [1, 0, 1, 0]], [[HALF, -HALF, -HALF, -HALF], [0, 0, 0, 1]]),
}


def downgraded_g2_data(source: str) -> FixedPointData:
    """Push the B3 or D4 adjoint data to the rank-2 torus of G2 inside it.

    Points keep their identity even when their images coincide.
    """
    if source not in G2_PROJECTIONS:
        raise ValueError("source must be B3 or D4")
    p = G2_PROJECTIONS[source]
    data = adjoint_bd_data(source)
    points = []
    for pt in data.points:
        image = []
        for w, m in pt.compass:
            u = project(p, w)
            if u.is_zero():
                raise ValueError(f"{w} at {pt.label} is killed: the fixed point is not isolated")
            image.append((u, m))
        points.append(FixedPoint(f"{source}:{pt.label}", project(p, pt.mu), Compass(image)))
    return FixedPointData(data.ambient_dim, 2, tuple(points))


def hexagon_weights() -> tuple[list[Weight], list[Weight]]:
    """(alpha, beta) in cyclic order with alpha_i = beta_i + beta_{i+1}, in the G2 coordinates above."""
    beta = [Weight(b) for b in ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))]
    alpha = [beta[i] + beta[(i + 1) % 6] for i in range(6)]
    return alpha, beta


def g2_table_data(dim: int) -> FixedPointData:
    """Rank-2 data written down from the compass tables of the hexagon case.

    Extremal point at alpha_i: alpha_{i+-1} - alpha_i, -alpha_i once and
    beta_i - alpha_i, beta_{i+1} - alpha_i with multiplicity 2 (dim 7) or
    3 (dim 9).  Inner point at beta_i: alpha_i - beta_i, alpha_{i-1} - beta_i,
    beta_j - beta_i (j != i, i+3) and -beta_i, with beta_{i+-1} - beta_i
    doubled in dim 9, where each beta_i carries three points.
    """
    if dim not in (7, 9):
        raise ValueError("the tables cover dimensions 7 and 9")
    alpha, beta = hexagon_weights()
    k = 2 if dim == 7 else 3
    copies = 1 if dim == 7 else 3
    points = []
    for i in range(6):
        a = alpha[i]
        entries = [(alpha[i - 1] - a, 1), (alpha[(i + 1) % 6] - a, 1), (-a, 1), (beta[i] - a, k), (beta[(i + 1) % 6] - a, k)]
        points.append(FixedPoint(f"alpha{i}", a, Compass(entries)))
    for i in range(6):
        b = beta[i]
        entries = [(alpha[i] - b, 1), (alpha[i - 1] - b, 1), (-b, 1)]
        for j in range(6):
            if j in (i, (i + 3) % 6):
                continue
            m = 2 if dim == 9 and j in ((i + 1) % 6, (i - 1) % 6) else 1
            entries.append((beta[j] - b, m))
        for c in range(copies):
            points.append(FixedPoint(f"beta{i}" + (f".{c}" if copies > 1 else ""), b, Compass(entries)))
    return FixedPointData(dim, 2, tuple(points))


def interval_surface_data() -> FixedPointData:
    """Surface over Delta = [0, 3] with a, b unknown points at 1 and 2."""
    one = lambda *xs: Compass(_rank1(x) for x in xs)  # noqa: E731
    return FixedPointData(
        2,
        1,
        (FixedPoint("y0", _rank1(0), one(1, 1)), FixedPoint("y3", _rank1(3), one(-1, -1))),
        unknowns=(UnknownTemplate("a", _rank1(1), one(-1, 1)), UnknownTemplate("b", _rank1(2), one(-1, 1))),
    )


def interval_threefold_data() -> FixedPointData:
    """Threefold over Delta = [0, 3] with a, b unknown points at 1 and 2."""
    one = lambda *xs: Compass(_rank1(x) for x in xs)  # noqa: E731
    return FixedPointData(
        3,
        1,
        (FixedPoint("y0", _rank1(0), one(1, 1, 1)), FixedPoint("y3", _rank1(3), one(-1, -1, -1))),
        unknowns=(UnknownTemplate("a", _rank1(1), one(-1, 1, 1)), UnknownTemplate("b", _rank1(2), one(-1, -1, 1))),
    )


def forced_cr_compass(r: int) -> FixedPoint:
    """Compass entries at 2e_1 forced by the edges of the C_r root polytope.

    Each edge from 2e_1 to +-2e_j carries the root e_1 +- e_j, so both
    lattice points give entries; -2e_1 is always present.
    """
    if r < 2:
        raise ValueError("C_r needs r >= 2")
    v = Weight.unit(r, 0, 2)
    entries = [-v]
    for j in range(1, r):
        for s in (1, -1):
            m_mid = Weight.unit(r, 0) + Weight.unit(r, j, s)
            m_end = Weight.unit(r, j, 2 * s)
            entries += [m_mid - v, m_end - v]
    return FixedPoint("2e1", v, Compass(entries))


MODEL_NAMES = ("pspace", "quadric-odd-r", "quadric-even-r", "adjoint-Br", "adjoint-Dr", "g2-from-B3", "g2-from-D4")


def model_by_name(name: str, dim: int | None = None) -> FixedPointData:
    """Resolve CLI names such as pspace-3, quadric-odd-3, adjoint-B3, g2-from-D4."""
    parts = name.split("-")
    if name in ("g2-from-B3", "g2-from-D4"):
        return downgraded_g2_data(name[-2:])
    if parts[0] == "pspace":
        d = int(parts[1]) if len(parts) > 1 else dim
        if d is None:
            raise ValueError("pspace needs a dimension, e.g. pspace-3")
        return projective_space_data(list(range(d + 1)))
    if parts[0] == "quadric" and len(parts) == 3:
        return quadric_data(parts[1], int(parts[2]))
    if parts[0] == "adjoint" and len(parts) == 2:
        return adjoint_bd_data(parts[1])
    if parts[0] == "g2" and len(parts) == 2 and parts[1] in ("table7", "table9"):
        return g2_table_data(int(parts[1][-1]))
    if name == "interval-surface":
        return interval_surface_data()
    if name == "interval-threefold":
        return interval_threefold_data()
    raise ValueError(f"unknown model {name!r}; known: {', '.join(MODEL_NAMES)}")


def signed_permutations(r: int) -> Iterable[list[tuple[int, int]]]:
    for perm in itertools.permutations(range(r)):
        for signs in itertools.product((1, -1), repeat=r):
            yield list(zip(perm, signs))
