"""Registry of reproducible computations with their expected values.

Each case is a function returning a list of checks.  A check records the
computed value, the expected value and where the expected value comes
from: ``reference`` (a published value), ``derived`` (an independent
computation frozen here) or ``trivial``.  Verdicts use exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import contactrr, laurent, localize, models, polytope, rootsys
from .laurent import Coefficient
from .weights import Weight

ORACLES = ("reference", "derived", "trivial")


def plain(x):
    """JSON-friendly and order-stable form of computed values."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, Weight):
        return [plain(c) for c in x]
    if isinstance(x, dict):
        return {str(k): plain(v) for k, v in sorted(x.items(), key=lambda kv: str(kv[0]))}
    if isinstance(x, (list, tuple)):
        return [plain(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted((plain(v) for v in x), key=str)
    return str(x)


@dataclass(frozen=True)
class Check:
    name: str
    computed: object
    expected: object
    oracle: str

    def __post_init__(self):
        if self.oracle not in ORACLES:
            raise ValueError(f"unknown oracle kind {self.oracle!r}")

    @property
    def passed(self) -> bool:
        return plain(self.computed) == plain(self.expected)

    def to_json(self) -> dict:
        return {
            "check": self.name,
            "computed": plain(self.computed),
            "expected": plain(self.expected),
            "oracle": self.oracle,
            "verdict": "pass" if self.passed else "fail",
        }


@dataclass(frozen=True)
class Case:
    name: str
    module: str
    summary: str
    run: Callable[[], list[Check]]
    criterion: int | None = None
    slow: bool = False


@dataclass
class CaseReport:
    case: str
    module: str
    summary: str
    checks: list[Check] = field(default_factory=list)
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.error is None and bool(self.checks) and all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "module": self.module,
            "summary": self.summary,
            "checks": [c.to_json() for c in self.checks],
            "error": self.error,
            "verdict": "pass" if self.passed else "fail",
        }

    def lines(self) -> list[str]:
        out = [f"[{'PASS' if self.passed else 'FAIL'}] {self.case}: {self.summary}"]
        for c in self.checks:
            mark = "ok" if c.passed else "MISMATCH"
            out.append(f"    {mark:8} {c.name}: {plain(c.computed)} (expected {plain(c.expected)}, {c.oracle})")
        if self.error:
            out.append(f"    error: {self.error}")
        return out


# ------------------------------------------------------------------ cases


def _edges(name: str, vertex=None, method: str = "faces") -> int:
    rs = rootsys.build(name)
    p = rootsys.root_polytope(rs)
    v = vertex if vertex is not None else rs.long_roots[0]
    return len(polytope.edges_at_vertex(p, v, method=method))


def case_e_series_edges() -> list[Check]:
    return [Check(f"edges at a vertex of the {t} root polytope", _edges(t), n, "reference") for t, n in (("E6", 20), ("E7", 32), ("E8", 56))]


def case_f4_edges() -> list[Check]:
    v = Weight([1, 1, 0, 0])
    p = rootsys.root_polytope(rootsys.build("F4"))
    dirs = sorted(polytope.edges_at_vertex(p, v))
    expected = sorted(Weight.unit(4, j, s) - Weight.unit(4, i) for i in (0, 1) for j in (2, 3) for s in (1, -1))
    return [
        Check("edges at e1+e2 (faces)", len(dirs), 8, "reference"),
        Check("edges at e1+e2 (rank test)", _edges("F4", v, "rank"), 8, "derived"),
        Check("edge directions", dirs, expected, "reference"),
    ]


def case_f4_candidates() -> list[Check]:
    rs = rootsys.build("F4")
    p = rootsys.root_polytope(rs)
    cands = localize.compass_candidates(p, Weight([1, 1, 0, 0]), rs.weight_lattice)
    return [
        Check("candidate count", len(cands), 14, "reference"),
        Check("values of e1*+e2* on candidates", sorted({c[0] + c[1] for c in cands}), [-1], "reference"),
    ]


def case_lattice_points() -> list[Check]:
    out = []
    rs = rootsys.build("B3")
    out.append(Check("lattice points of the B3 root polytope", len(polytope.lattice_points(rootsys.root_polytope(rs), rs.weight_lattice)), 27, "reference"))
    for r in (3, 4, 5, 6):
        rs = rootsys.build(f"A{r}")
        face = polytope.face_by_support(rootsys.root_polytope(rs), Weight([1, 1] + [0] * (r - 1)))
        pts = polytope.lattice_points(face.polytope(), rs.weight_lattice)
        extra = sorted(set(pts) - set(face.vertices))
        out.append(Check(f"A{r} facet {{0,1}}: vertices", len(face.vertices), 2 * (r - 1), "reference"))
        if r == 3:
            half = Weight([Fraction(1, 2), Fraction(1, 2), Fraction(-1, 2), Fraction(-1, 2)])
            out.append(Check("A3 facet {0,1}: non-vertex lattice points", extra, [half], "reference"))
        else:
            out.append(Check(f"A{r} facet {{0,1}}: non-vertex lattice points", extra, [], "reference"))
    return out


def _solve_case(data, numerator: str, solution: dict, laurent_expected: str, oracle: str) -> list[Check]:
    f = localize.euler_characteristic(data)
    sol = localize.solve_multiplicities(data)
    subst = f.substitute(sol)
    return [
        Check("symbolic character", str(f), numerator, "reference"),
        Check("unique multiplicities", sol, solution, "reference"),
        Check("Laurent polynomial after substitution", str(laurent.to_laurent(subst)), laurent_expected, oracle),
    ]


def case_hirzebruch() -> list[Check]:
    return _solve_case(models.interval_surface_data(), "(1 - a*t^2 - b*t^3 + t^5)/(1-t)^2", {"a": 1, "b": 1}, "1 + 2*t + 2*t^2 + t^3", "derived")


def case_threefold() -> list[Check]:
    return _solve_case(models.interval_threefold_data(), "(1 - a*t^2 + b*t^4 - t^6)/(1-t)^3", {"a": 3, "b": 3}, "1 + 3*t + 3*t^2 + t^3", "reference")


def case_adjoint_characters() -> list[Check]:
    out = []
    for name, total, r in (("B3", 21, 3), ("D4", 28, 4)):
        data = models.adjoint_bd_data(name)
        poly = localize.certify_laurent(data)
        out.append(Check(f"{name}: value at the identity", poly.value_at_one(), total, "reference"))
        out.append(Check(f"{name}: coefficient of the zero weight", poly.coefficient(data.exponent(Weight.zero(r))), r, "reference"))
        vertex_coeffs = {poly.coefficient(data.exponent(p.mu)) for p in data.points}
        out.append(Check(f"{name}: coefficients at fixed-point weights", sorted(vertex_coeffs), [1], "reference"))
    return out


def case_g2_sevenfold_h0() -> list[Check]:
    poly = localize.certify_laurent(models.g2_table_data(7))
    return [Check("sections of L on the G2 sevenfold", poly.value_at_one(), 21, "reference")]


def case_g2_downgrade() -> list[Check]:
    out = []
    for src, dim, ext, inner in (("B3", 7, 6, 6), ("D4", 9, 6, 18)):
        data = models.downgraded_g2_data(src)
        table = models.g2_table_data(dim)
        hexagon = set(models.hexagon_weights()[0])
        n_ext = sum(1 for p in data.points if p.mu in hexagon)
        cmp = localize.compare_models(data, table)
        out.append(Check(f"g2-from-{src}: extremal points", n_ext, ext, "reference"))
        out.append(Check(f"g2-from-{src}: inner points", len(data.points) - n_ext, inner, "reference"))
        out.append(Check(f"g2-from-{src}: agrees with the table model", bool(cmp), True, "derived"))
    return out


CONTACT_MODELS = ("adjoint-B3", "adjoint-B4", "adjoint-D4", "adjoint-D5", "g2-from-B3", "g2-from-D4", "g2-table7", "g2-table9")


def perturbed_point() -> localize.FixedPoint:
    """A B3 adjoint point with one compass entry moved off its dual partner."""
    p = models.adjoint_bd_data("B3").points[0]
    ws = [w for w, m in p.compass for _ in range(m)]
    ws[0] = ws[0] + Weight.unit(len(ws[0]), 2)
    if ws[0].is_zero():
        ws[0] = ws[0] + Weight.unit(len(ws[0]), 2)
    return localize.FixedPoint(p.label + "*", p.mu, localize.Compass(ws))


def case_contact_duality() -> list[Check]:
    out = []
    for name in CONTACT_MODELS:
        data = models.model_by_name(name)
        failing = [p.label for p in data.points if not localize.contact_dual_check(p)]
        out.append(Check(f"{name}: points failing duality", failing, [], "reference"))
    out.append(Check("perturbed fixture detected", bool(localize.contact_dual_check(perturbed_point())), False, "trivial"))
    return out


def case_quadric_interval() -> list[Check]:
    out = []
    for parity, r, d in (("odd", 3, 5), ("even", 4, 6)):
        data = models.quadric_data(parity, r)
        delta = polytope.hull(p.mu for p in data.points)
        verdict = localize.quadric_recognition(data, delta)
        out.append(Check(f"quadric-{parity}-{r} recognized", (verdict.passed, verdict.d), (True, d), "reference"))
    for d in (2, 3, 5):
        data = models.projective_space_data([(0, 1), (1, d - 1), (2, 1)], extremal_only=True)
        v = localize.classify_interval_case(data)
        out.append(Check(f"weights (0,1^{d - 1},2) classified", (v.kind, v.d), ("Pd", d), "reference"))
    for d in (3, 4):
        out.append(Check(f"compass (1^{d}) classified", _q_interval_verdict(d), ("Qd", d), "reference"))
    return out


def _q_interval_verdict(d: int):
    """Extremal data with compass (1^d) at source and sink, as for a quadric with a C* action."""
    src = localize.FixedPoint("source", Weight([0]), localize.Compass([(Weight([1]), d)]))
    snk = localize.FixedPoint("sink", Weight([2]), localize.Compass([(Weight([-1]), d)]))
    data = localize.FixedPointData(d, 1, (src, snk), (), (), complete=False)
    v = localize.classify_interval_case(data)
    return (v.kind, v.d)


HILBERT_DISPLAYS = {
    3: "p(m) = deg*C(m+7,7) - 2deg*C(m+6,6) + (deg + p(1) - 4)*C(m+5,5) + (-p(1) + 4)*C(m+4,4) + C(m+3,3)",
    4: "p(m) = deg*C(m+9,9) - (5/2)deg*C(m+8,8) + (2deg + 2p(1) - 14)*C(m+7,7) + (-(1/2)deg - 3p(1) + 21)*C(m+6,6) + (p(1) - 5)*C(m+5,5) - C(m+4,4)",
    5: "p(m) = deg*C(m+11,11) - 3deg*C(m+10,10) + (3deg - 8p(1) + p(2) + 27)*C(m+9,9) + (-deg + 16p(1) - 2p(2) - 54)*C(m+8,8) + (-7p(1) + p(2) + 21)*C(m+7,7) + (-p(1) + 6)*C(m+6,6) + C(m+5,5)",
}


def case_hilbert() -> list[Check]:
    out = []
    for n, text in HILBERT_DISPLAYS.items():
        out.append(Check(f"dim {2 * n + 1} Hilbert polynomial", str(contactrr.hilbert_polynomial(n)), text, "reference"))
    ids = {n: [str(i) for i in contactrr.intersection_identities(n)] for n in (3, 4)}
    out.append(Check("dim 7 identities", ids[3], ["c1(TX)^2 c1(L)^5 = 16deg", "c2(TX) c1(L)^5 = 4deg + 12p(1) - 48"], "reference"))
    out.append(Check("dim 9 identities", ids[4], ["c1(TX)^2 c1(L)^7 = 25deg", "c2(TX) c1(L)^7 = 9deg + 24p(1) - 168"], "reference"))
    out.append(Check("dim 7 bound: p(1) >=", contactrr.bg_bound(3).p1_threshold(), Coefficient(4, {"deg": Fraction(5, 21)}), "reference"))
    out.append(Check("dim 9 bound: p(1) >=", contactrr.bg_bound(4).p1_threshold(), Coefficient(7, {"deg": Fraction(19, 216)}), "reference"))
    out.append(Check("dim 11 bound", str(contactrr.bg_bound(5)), "11p(2) + 297 >= 88p(1) + 4deg", "reference"))
    b3, b4 = contactrr.bg_bound(3), contactrr.bg_bound(4)
    cong = contactrr.parity_check(4).congruence
    out.append(Check("least p(1) over deg in 1..100 (dim 7)", min(b3.min_p1(k) for k in range(1, 101)), 5, "reference"))
    out.append(Check("least p(1) over even deg in 1..100 (dim 9)", min(b4.min_p1(k) for k in range(1, 101) if cong.holds(k)), 8, "reference"))
    out.append(Check("dim 9 degree congruence", (cong.modulus, cong.residue), (2, 0), "reference"))
    return out


def localization_values(name: str, ms) -> dict[int, int]:
    data = models.model_by_name(name)
    return {m: int(localize.certify_laurent(data.scaled(m)).value_at_one()) for m in ms}


def case_cross_engine() -> list[Check]:
    vals = localization_values("adjoint-B3", (1, 2, 3))
    sol = contactrr.solve_degree(3, {1: vals[1], 2: vals[2]})
    deg = sol[contactrr.DEGREE]
    predicted = contactrr.hilbert_polynomial(3)(3, sol)
    return [
        Check("p(1) from localization", vals[1], 21, "reference"),
        Check("degree is a positive integer", deg.denominator == 1 and deg > 0, True, "trivial"),
        Check("p(3): Hilbert polynomial vs localization", predicted, vals[3], "derived"),
    ]


def corrupted_adjoint_data():
    """Adjoint B3 data with one compass entry replaced: no longer a Laurent polynomial."""
    data = models.adjoint_bd_data("B3")
    p = data.points[0]
    ws = [w for w, m in p.compass for _ in range(m)]
    ws[-1] = ws[-1] * 2
    bad = localize.FixedPoint(p.label, p.mu, localize.Compass(ws))
    return data.with_points((bad,) + tuple(data.points[1:]))


def case_negative_fixtures() -> list[Check]:
    out = []
    rs = rootsys.build("C3")
    report = localize.compass_cone_certificate(models.forced_cr_compass(3), rootsys.root_polytope(rs))
    bad = sorted({w for w, _ in report.violations})
    out.append(Check("C3: 2(e2-e1) violates the cone condition at 2e1", Weight([-2, 2, 0]) in bad, True, "reference"))
    for r in (4, 5):
        face = polytope.face_by_support(rootsys.root_polytope(rootsys.build(f"A{r}")), Weight([1, 1] + [0] * (r - 1)))
        out.append(Check(f"A{r}: facet vertices 2(r-1) differ from r", (len(face.vertices), len(face.vertices) != r), (2 * (r - 1), True), "reference"))
    try:
        localize.certify_laurent(corrupted_adjoint_data())
        caught = False
    except laurent.NotDivisible:
        caught = True
    out.append(Check("corrupted data fails certification", caught, True, "trivial"))
    return out


REGISTRY: dict[str, Case] = {
    c.name: c
    for c in (
        Case("e-series-edges", "polytope", "edge counts at a vertex of E6, E7, E8", case_e_series_edges, 1, slow=True),
        Case("f4-edges", "polytope", "edges at a long root of F4", case_f4_edges, 1),
        Case("f4-compass-candidates", "localize", "compass candidates at e1+e2 for F4", case_f4_candidates, 2),
        Case("lattice-points", "polytope", "lattice points in B3 and on A_r facets", case_lattice_points, 3),
        Case("hirzebruch-localization", "localize", "multiplicities on the interval surface", case_hirzebruch, 4),
        Case("threefold-localization", "localize", "multiplicities on the interval threefold", case_threefold, 5),
        Case("adjoint-characters", "localize", "characters of the B3 and D4 adjoint models", case_adjoint_characters, 6),
        Case("g2-sevenfold-h0", "models", "sections of L on the G2 sevenfold", case_g2_sevenfold_h0, 6),
        Case("g2-downgrade", "models", "G2 data from B3 and D4 against the table models", case_g2_downgrade, 7),
        Case("contact-duality", "localize", "contact pairing at every catalog fixed point", case_contact_duality, 8),
        Case("quadric-interval", "localize", "quadric recognition and interval classification", case_quadric_interval, 9),
        Case("hilbert-formulas", "contactrr", "Hilbert polynomials, identities and bounds", case_hilbert, 10),
        Case("cross-engine", "contactrr", "degree from localization against the Hilbert polynomial", case_cross_engine, 11),
        Case("negative-fixtures", "localize", "fixtures that must be rejected", case_negative_fixtures, 12),
    )
}


def list_cases(module: str | None = None) -> list[Case]:
    return [c for name, c in sorted(REGISTRY.items()) if not module or c.module == module]


def run_case(name: str) -> CaseReport:
    if name not in REGISTRY:
        raise KeyError(f"unknown case {name!r}")
    case = REGISTRY[name]
    report = CaseReport(case.name, case.module, case.summary)
    try:
        report.checks = case.run()
    except Exception as exc:  # reported, not raised: the runner keeps going
        report.error = f"{type(exc).__name__}: {exc}"
    return report
