"""The twelve acceptance criteria, each checked exactly."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torusloc import contactrr, laurent, localize, models, polytope, rootsys
from torusloc.cases import CONTACT_MODELS, corrupted_adjoint_data, perturbed_point
from torusloc.laurent import Coefficient, LaurentPoly
from torusloc.localize import Compass, FixedPoint, FixedPointData
from torusloc.weights import Projection, Weight

HALF = Fraction(1, 2)


def criterion(n, title):
    return pytest.mark.criterion(n, title)


@criterion(1, "edge counts at a vertex: E6 20, E7 32, E8 56, F4 8")
def test_criterion_01_edge_counts():
    for name, expected in (("E6", 20), ("E7", 32), ("E8", 56)):
        rs = rootsys.build(name)
        p = rootsys.root_polytope(rs)
        v = rs.long_roots[0]
        faces = polytope.edges_at_vertex(p, v, method="faces")
        assert len(faces) == expected
        assert polytope.edges_at_vertex(p, v, method="rank") == faces
    f4 = rootsys.root_polytope(rootsys.build("F4"))
    dirs = polytope.edges_at_vertex(f4, (1, 1, 0, 0))
    assert len(dirs) == 8
    assert set(dirs) == {Weight.unit(4, j, s) - Weight.unit(4, i) for i in (0, 1) for j in (2, 3) for s in (1, -1)}


@criterion(2, "F4 compass candidates at e1+e2: 14 points on e1*+e2* = -1")
def test_criterion_02_f4_candidates():
    rs = rootsys.build("F4")
    cands = localize.compass_candidates(rootsys.root_polytope(rs), (1, 1, 0, 0), rs.weight_lattice)
    assert len(cands) == 14
    assert all(u[0] + u[1] == -1 for u in cands)


@criterion(3, "lattice points: B3 27, A3 facet 5, A_r facet only vertices for r = 4, 5, 6")
def test_criterion_03_lattice_points():
    b3 = rootsys.build("B3")
    assert len(polytope.lattice_points(rootsys.root_polytope(b3), b3.weight_lattice)) == 27
    for r in (3, 4, 5, 6):
        rs = rootsys.build(f"A{r}")
        face = polytope.face_by_support(rootsys.root_polytope(rs), [1, 1] + [0] * (r - 1))
        pts = set(polytope.lattice_points(face.polytope(), rs.weight_lattice))
        assert len(face.vertices) == 2 * (r - 1)
        if r == 3:
            assert len(pts) == 5
            assert Weight([HALF, HALF, -HALF, -HALF]) in pts
        else:
            assert pts == set(face.vertices)


@criterion(4, "interval surface: F = (1 - a t^2 - b t^3 + t^5)/(t - 1)^2, unique a = b = 1")
def test_criterion_04_hirzebruch():
    data = models.interval_surface_data()
    f = localize.euler_characteristic(data)
    a, b = Coefficient.symbol("a"), Coefficient.symbol("b")
    expected = laurent.RationalFn(LaurentPoly(1, {(0,): 1, (2,): -a, (3,): -b, (5,): 1}), [((1,), 2)])
    assert f == expected
    assert laurent.solve_linear(laurent.laurent_conditions(f)) == {"a": 1, "b": 1}


@criterion(5, "interval threefold: F = (t^6 - b t^4 + a t^2 - 1)/(t - 1)^3, unique a = b = 3, (1 + t)^3")
def test_criterion_05_threefold():
    data = models.interval_threefold_data()
    f = localize.euler_characteristic(data)
    a, b = Coefficient.symbol("a"), Coefficient.symbol("b")
    # (t^6 - b t^4 + a t^2 - 1)/(t - 1)^3 = (1 - a t^2 + b t^4 - t^6)/(1 - t)^3
    expected = laurent.RationalFn(LaurentPoly(1, {(0,): 1, (2,): -a, (4,): b, (6,): -1}), [((1,), 3)])
    assert f == expected
    sol = laurent.solve_linear(laurent.laurent_conditions(f))
    assert sol == {"a": 3, "b": 3}
    one_plus_t = LaurentPoly(1, {(0,): 1, (1,): 1})
    assert laurent.to_laurent(f.substitute(sol)) == one_plus_t ** 3


@criterion(6, "adjoint characters: B3 21, D4 28, vertex coefficients 1, zero weight r")
def test_criterion_06_adjoint_characters():
    for name, total, r in (("B3", 21, 3), ("D4", 28, 4)):
        data = models.adjoint_bd_data(name)
        poly = localize.certify_laurent(data)
        assert poly.value_at_one() == total
        for p in data.points:
            assert poly.coefficient(data.exponent(p.mu)) == 1
        assert poly.coefficient(data.exponent(Weight.zero(r))) == r
        # the full adjoint character: every root once and r at zero
        expected = LaurentPoly.constant(r, r)
        for root in rootsys.build(name).roots:
            expected = expected + LaurentPoly.monomial(data.exponent(root))
        assert poly == expected


@criterion(7, "G2 downgrade: 6 + 6 points from B3, 6 + 18 from D4, matching the table models")
def test_criterion_07_g2_downgrade():
    alpha, _ = models.hexagon_weights()
    for src, dim, inner in (("B3", 7, 6), ("D4", 9, 18)):
        data = models.downgraded_g2_data(src)
        extremal = [p for p in data.points if p.mu in set(alpha)]
        assert len(extremal) == 6 and len(data.points) - 6 == inner
        cmp = localize.compare_models(data, models.g2_table_data(dim))
        assert cmp.match and cmp.characters_agree


@criterion(8, "contact duality at every catalog point; a perturbed fixture fails")
def test_criterion_08_contact_duality():
    for name in CONTACT_MODELS:
        for p in models.model_by_name(name).points:
            pairing = localize.contact_dual_check(p)
            assert pairing, (name, p.label, pairing.reason)
    assert not localize.contact_dual_check(perturbed_point())


def quadric_extremal_data(parity: str, r: int) -> FixedPointData:
    """Extremal points of a quadric under the subtorus e1*, shifted so Delta = [0, 2]."""
    q = models.quadric_data(parity, r)
    lam = Projection([[1] + [0] * (r - 1)])
    points = []
    for p in q.points:
        if p.mu[0] in (1, -1):
            compass = Compass((lam(w), m) for w, m in p.compass)
            points.append(FixedPoint(p.label, lam(p.mu) + Weight([1]), compass))
    return FixedPointData(q.ambient_dim, 1, tuple(points), complete=False)


@criterion(9, "quadric recognition; Delta = [0, 2] classifies (1^(d-1), 2) as Pd and (1^d) as Qd")
def test_criterion_09_quadrics_and_interval():
    for parity, r, d in (("odd", 2, 3), ("odd", 3, 5), ("even", 3, 4), ("even", 4, 6)):
        data = models.quadric_data(parity, r)
        delta = polytope.hull(p.mu for p in data.points)
        verdict = localize.quadric_recognition(data, delta)
        assert verdict.passed and verdict.d == d
        v = localize.classify_interval_case(quadric_extremal_data(parity, r))
        assert (v.kind, v.d) == ("Qd", d)
    for d in (2, 3, 4, 5):
        data = models.projective_space_data([(0, 1), (1, d - 1), (2, 1)], extremal_only=d >= 4)
        v = localize.classify_interval_case(data)
        assert (v.kind, v.d) == ("Pd", d)


@criterion(10, "Hilbert polynomials in dim 7, 9, 11, identities, bounds and their integer corollaries")
def test_criterion_10_hrr():
    p1, p2, deg = Coefficient.symbol("p1"), Coefficient.symbol("p2"), Coefficient.symbol("deg")
    displayed = {
        3: [deg, deg * -2, deg + p1 - 4, -(p1 - 4), 1],
        4: [deg, deg * Fraction(-5, 2), deg * 2 + p1 * 2 - 14, -(deg * HALF + p1 * 3 - 21), p1 - 5, -1],
        5: [deg, deg * -3, deg * 3 - p1 * 8 + p2 + 27, -(deg - p1 * 16 + p2 * 2 + 54), -(p1 * 7 - p2 - 21), -(p1 - 6), 1],
    }
    for n, coeffs in displayed.items():
        hp = contactrr.hilbert_polynomial(n)
        d = 2 * n + 1
        got = {j: c for j, c in hp.binomial_terms()}
        assert set(got) == set(range(n, d + 1))
        for j, c in zip(range(d, n - 1, -1), coeffs):
            assert got[j] == Coefficient.lift(c), (n, j)
    ids3 = contactrr.intersection_identities(3)
    ids4 = contactrr.intersection_identities(4)
    assert [i.rhs for i in ids3] == [deg * 16, deg * 4 + p1 * 12 - 48]
    assert [i.rhs for i in ids4] == [deg * 25, deg * 9 + p1 * 24 - 168]
    b3, b4, b5 = contactrr.bg_bound(3), contactrr.bg_bound(4), contactrr.bg_bound(5)
    assert b3.p1_threshold() == Coefficient.lift(deg * Fraction(5, 21) + 4)
    assert b4.p1_threshold() == Coefficient.lift(deg * Fraction(19, 216) + 7)
    assert b5.normalized() == Coefficient.lift(p2 * 11 + 297 - p1 * 88 - deg * 4)
    parity = contactrr.parity_check(4)
    assert all(b3.min_p1(k) >= 5 for k in range(1, 101))
    assert all(b4.min_p1(k) >= 8 for k in range(1, 101) if parity.congruence.holds(k))
    assert min(b4.min_p1(k) for k in range(2, 101, 2)) == 8


LOCALIZED = {m: int(localize.certify_laurent(models.adjoint_bd_data("B3").scaled(m)).value_at_one()) for m in range(1, 5)}


@criterion(11, "adjoint B3: deg from two localization values predicts the others")
@settings(max_examples=12)
@given(st.lists(st.integers(1, 4), min_size=2, max_size=2, unique=True))
def test_criterion_11_cross_engine(ms):
    hp = contactrr.hilbert_polynomial(3)
    sol = contactrr.solve_degree(3, {m: LOCALIZED[m] for m in ms})
    deg = sol["deg"]
    assert deg.denominator == 1 and deg > 0
    for m, value in LOCALIZED.items():
        assert hp(m, sol) == value
    assert LOCALIZED[1] == 21


@criterion(12, "negative fixtures: C_r cone violation, 2(r-1) != r on A_r facets, corrupted data")
def test_criterion_12_negative_fixtures():
    for r in (3, 4):
        delta = rootsys.root_polytope(rootsys.build(f"C{r}"))
        report = localize.compass_cone_certificate(models.forced_cr_compass(r), delta)
        assert not report.passed
        assert Weight([-2, 2] + [0] * (r - 2)) in {w for w, _ in report.violations}
    for r in (4, 5):
        face = polytope.face_by_support(rootsys.root_polytope(rootsys.build(f"A{r}")), [1, 1] + [0] * (r - 1))
        assert len(face.vertices) == 2 * (r - 1) != r
    with pytest.raises(laurent.NotDivisible):
        localize.certify_laurent(corrupted_adjoint_data())
