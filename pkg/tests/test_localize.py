import json
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torusloc import laurent, localize, models, polytope, rootsys
from torusloc.laurent import LaurentPoly
from torusloc.localize import Compass, FixedCurve, FixedPoint, FixedPointData
from torusloc.weights import Projection, Weight


def w(*xs):
    return Weight(xs)


def test_compass_multiset_semantics():
    a = Compass([w(1, 0), w(0, 1), w(1, 0)])
    b = Compass([(w(0, 1), 1), (w(1, 0), 2)])
    assert a == b and len(a) == 3
    assert a.multiplicity(w(1, 0)) == 2
    assert a.total(2) == w(2, 1)
    assert Compass.from_json(a.to_json()) == a
    with pytest.raises(ValueError):
        Compass([w(0, 0)])


def test_fixed_point_data_validation():
    p = FixedPoint("p", w(0), Compass([w(1)]))
    with pytest.raises(ValueError):
        FixedPointData(2, 1, (p,), complete=False)
    with pytest.raises(ValueError):
        FixedPointData(1, 2, (p,), complete=False)
    curve = FixedCurve("c", w(0), 0, 1, (localize.ConormalSummand(w(1), 1, -1),))
    with pytest.raises(ValueError):
        FixedPointData(3, 1, (), (curve,), complete=False)


def test_two_components_rule():
    src = FixedPoint("src", w(0), Compass([w(1)] * 3))
    snk = FixedPoint("snk", w(1), Compass([w(-1)] * 3))
    with pytest.raises(ValueError):
        FixedPointData(3, 1, (src, snk))
    assert FixedPointData(3, 1, (src, snk), complete=False).components() == 2


weight_lists = st.lists(st.integers(-4, 4), min_size=2, max_size=6).filter(
    lambda xs: len(set(xs)) >= 2 and max(Counter(xs).values()) <= 2
)


@given(weight_lists)
def test_projective_space_character(weights):
    data = models.projective_space_data(weights)
    poly = localize.certify_laurent(data)
    expected = LaurentPoly(1)
    for a in weights:
        expected = expected + LaurentPoly.monomial((-a,))
    assert poly == expected


def test_projective_plane_with_a_fixed_line():
    data = models.projective_space_data([0, 0, 1])
    assert len(data.curves) == 1 and len(data.points) == 1
    assert str(localize.certify_laurent(data)) == "t^-1 + 2"


def test_scaling_gives_sections_of_powers():
    # P^2 with distinct weights: h^0(O(m)) = C(m+2, 2)
    data = models.projective_space_data([0, 1, 2])
    for m in (1, 2, 3, 4):
        assert localize.certify_laurent(data.scaled(m)).value_at_one() == (m + 1) * (m + 2) // 2


def test_curve_through_points_reproduces_the_sum_of_its_points():
    data = models.adjoint_bd_data("B3")
    by_mu = {p.mu: p for p in data.points}
    p, q = by_mu[w(1, -1, 0)], by_mu[w(-1, 1, 0)]
    lam = (1, 1, 0)
    curve = localize.curve_through_points(p, q, lam, "line")
    assert curve.degree == 2
    assert sorted((s.nu[0], s.rank, s.c1) for s in curve.conormal) == [(-1, 3, -3), (1, 3, -3)]
    pts = FixedPointData(7, 3, (p, q), complete=False)
    total = laurent.specialize(laurent.cancel_factors(localize.euler_characteristic(pts)), lam)
    line = FixedPointData(7, 1, (), (curve,), complete=False)
    assert total.equivalent(localize.euler_characteristic(line))


def test_curve_through_points_rejects_unrelated_points():
    data = models.adjoint_bd_data("B3")
    p, q = data.points[0], data.points[1]
    with pytest.raises(ValueError):
        localize.curve_through_points(p, q, (1, 0, 0))


def test_solve_multiplicities():
    assert localize.solve_multiplicities(models.interval_surface_data()) == {"a": 1, "b": 1}
    assert localize.solve_multiplicities(models.interval_threefold_data()) == {"a": 3, "b": 3}


def test_inconsistent_multiplicities():
    def one(*xs):
        return Compass(Weight([x]) for x in xs)

    data = FixedPointData(
        2, 1,
        (FixedPoint("y0", w(0), one(1, 1)), FixedPoint("y3", w(3), one(-1, -1))),
        unknowns=(localize.UnknownTemplate("a", w(1), one(-1, 1)),),
    )
    with pytest.raises((localize.MultiplicityError, laurent.SolveError)):
        localize.solve_multiplicities(data)


def test_contact_dual_check():
    data = models.adjoint_bd_data("B3")
    for p in data.points:
        pairing = localize.contact_dual_check(p)
        assert pairing and pairing.singleton == -p.mu
        assert all(a + b == -p.mu for a, b in pairing.pairs)
    even = FixedPoint("x", w(1), Compass([w(-1), w(-1)]))
    assert not localize.contact_dual_check(even)


def test_project_compass():
    c = models.adjoint_template("B", 3)
    image, kernel = localize.project_compass(c, Projection([[1, -1, 0]]))
    assert len(kernel) == 1
    assert len(image) + len(kernel) == len(c)
    image, kernel = localize.project_compass(c, Projection([[0, 0, 1]]))
    assert len(kernel) == 3
    image, kernel = localize.project_compass(c, Projection.identity(3))
    assert image == c and len(kernel) == 0
    image, kernel = localize.project_compass(c, Projection([[0, 0, 0]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert len(image) == 0 and kernel == c


def test_cone_certificate():
    rs = rootsys.build("B3")
    delta = rootsys.root_polytope(rs)
    data = models.adjoint_bd_data("B3")
    for p in data.points:
        report = localize.compass_cone_certificate(p, delta)
        assert report.passed and report.minus_vertex_multiplicity == 1
    q = models.quadric_data("odd", 3)
    qdelta = polytope.hull(p.mu for p in q.points)
    assert all(localize.compass_cone_certificate(p, qdelta, contact=False) for p in q.points)
    with pytest.raises(ValueError):
        localize.compass_cone_certificate(FixedPoint("x", w(0, 0, 0), Compass([w(1, 0, 0)])), delta)


def test_cone_certificate_vacuous():
    seg = polytope.hull([[0], [1]])
    assert localize.compass_cone_certificate(FixedPoint("x", w(0), Compass()), seg, contact=False)


def test_compass_candidates_b3():
    rs = rootsys.build("B3")
    cands = localize.compass_candidates(rootsys.root_polytope(rs), w(1, 1, 0), rs.weight_lattice)
    assert w(0, 0, 0) not in cands and w(-1, -1, 0) not in cands
    for u in cands:
        assert u[0] == 0 or u[1] == 0 or u == w(Fraction(-1, 2), Fraction(-1, 2), Fraction(1, 2)) or u == w(Fraction(-1, 2), Fraction(-1, 2), Fraction(-1, 2))


def test_compare_models():
    a = models.g2_table_data(7)
    assert localize.compare_models(a, models.downgraded_g2_data("B3"))
    cmp = localize.compare_models(a, a.with_points(a.points[1:]))
    assert not cmp and len(cmp.only_in_first) == 1


def test_anticanonical_weight():
    q = models.quadric_data("odd", 3)
    p = next(p for p in q.points if p.mu == w(1, 0, 0))
    assert localize.anticanonical_weight(p) == w(5, 0, 0)


def cls(data):
    v = localize.classify_interval_case(data)
    return v.kind, v.d


def test_classify_interval_case():
    assert cls(models.projective_space_data([0, 1, 2])) == ("Pd", 2)
    assert cls(models.projective_space_data([0, 2])) == ("P1_O1", 1)
    src = FixedPoint("s", w(0), Compass([w(1)]))
    snk = FixedPoint("t", w(2), Compass([w(-1)]))
    assert cls(FixedPointData(1, 1, (src, snk), complete=False)) == ("P1_O2", 1)
    src = FixedPoint("s", w(0), Compass([w(1), w(3)]))
    snk = FixedPoint("t", w(2), Compass([w(-1), w(-3)]))
    assert cls(FixedPointData(2, 1, (src, snk), complete=False))[0] == "inconsistent"
    with pytest.raises(ValueError):
        localize.classify_interval_case(models.projective_space_data([0, 1, 2, 3]))


def test_quadric_recognition():
    for parity, r, d in (("odd", 2, 3), ("odd", 3, 5), ("even", 3, 4), ("even", 4, 6)):
        data = models.quadric_data(parity, r)
        delta = polytope.hull(p.mu for p in data.points)
        verdict = localize.quadric_recognition(data, delta)
        assert verdict.passed and verdict.d == d


def test_fixed_point_json_round_trip(tmp_path):
    for name in ("interval-surface", "adjoint-B3", "quadric-even-3", "g2-from-D4", "pspace-2"):
        data = models.model_by_name(name)
        path = tmp_path / "data.json"
        path.write_text(json.dumps(data.to_json()))
        back = FixedPointData.from_json(json.loads(path.read_text()))
        assert back == data
    curve_data = models.projective_space_data([0, 0, 1])
    assert FixedPointData.from_json(curve_data.to_json()) == curve_data


def test_exponent_needs_lattice_for_half_weights():
    data = FixedPointData(1, 1, (FixedPoint("s", w(Fraction(1, 2)), Compass([w(1)])),), complete=False)
    with pytest.raises(ValueError):
        data.exponent(w(Fraction(1, 2)))
