"""The claim registry: statuses, hypotheses gates, reports, determinism."""

import pytest

from hyperspectra.enumeration import BudgetExceededError, diameter_four_profiles, diameter_four_from_profile
from hyperspectra.report import (
    RESIDUAL_LIMIT,
    STATUS_FAIL,
    STATUS_PASS,
    STATUS_UNMET,
    InequalityRecord,
)
from hyperspectra.spectral import full_spectrum
from hyperspectra.verify import (
    DEFAULT_TOL,
    REGISTRY,
    TheoremEntry,
    _star_profile_radius,
    list_registry,
    verify,
)

ALL_IDS = [
    "TH1_ORDER", "TH3_ODD", "TH4_EVEN", "RATIO_3A", "RATIO_3B",
    "SECOND_DIAM", "TOP7_TREES", "UCT1", "UCT2_SECOND", "UCT3_THIRD",
    "TOP3_UNI", "UC0", "UCL1", "UCL7", "BC_TOP", "B2C_SECOND",
    "TRI_PROP", "T1C_TOP", "T1C_SECOND", "T2C_TOP", "T2C_SECOND",
    "REMARK_BT", "B2C_LEMMA",
]


def test_registry_is_complete():
    assert sorted(REGISTRY) == sorted(ALL_IDS)
    listing = list_registry()
    assert [row["theorem_id"] for row in listing] == list(REGISTRY)
    for row in listing:
        assert row["summary"]
        assert isinstance(row["defaults"], dict) and row["defaults"]


@pytest.mark.parametrize("theorem_id", ALL_IDS)
def test_every_entry_passes_at_defaults(theorem_id):
    report = verify(theorem_id)
    assert report.status == STATUS_PASS, report.notes
    assert report.passed
    assert report.counterexample is None
    assert report.inequalities, "a pass must assert something"
    assert all(rec.holds for rec in report.inequalities)
    assert all(rec.residual <= RESIDUAL_LIMIT for rec in report.instances)
    assert report.wall_time_s < 60.0


# hypothesis gates ------------------------------------------------------------------


def test_static_threshold_short_circuits():
    report = verify("TH3_ODD", k=7)  # (k-d-1)(m-1) = 2 < 6
    assert report.status == STATUS_UNMET
    assert not report.passed
    assert report.inequalities == []
    assert any("hypotheses unmet" in note for note in report.notes)
    assert any("outside stated hypotheses" in note for note in report.notes)


def test_even_claim_rejects_odd_diameter():
    report = verify("TH4_EVEN", d=5, k=40)
    assert report.status == STATUS_UNMET


def test_value_level_gate_reports_unmet():
    # small broom whose radius sits below the loose-cycle constant
    report = verify("RATIO_3A", l=4, c=2)
    assert report.status == STATUS_UNMET
    assert report.inequalities == []
    assert any("loose-cycle radius" in note for note in report.notes)


def test_ratio_claims_pass_above_their_gates():
    assert verify("RATIO_3A", l=5, c=4).status == STATUS_PASS
    assert verify("RATIO_3B", m=4, d=7, p=3, k=12).status == STATUS_PASS


# argument validation ---------------------------------------------------------------


def test_unknown_theorem_id():
    with pytest.raises(ValueError, match="unknown theorem id"):
        verify("NOT_A_CLAIM")


def test_unknown_parameter_is_rejected():
    with pytest.raises(ValueError, match="unknown parameter"):
        verify("UCT1", q=5)


def test_budget_exhaustion_raises():
    with pytest.raises(BudgetExceededError):
        verify("T1C_TOP", budget=10)


# reports ---------------------------------------------------------------------------


def test_reports_are_deterministic():
    first = verify("UCL7").as_dict()
    second = verify("UCL7").as_dict()
    first.pop("wall_time_s")
    second.pop("wall_time_s")
    assert first == second


def test_chain_shape_matches_request():
    report = verify("TH1_ORDER", m=3, k=10, d=6)
    # strict chain over diameters 2..5 plus the final loose-path comparison
    assert len(report.inequalities) == 4
    assert report.inequalities[-1].lhs == "loose-path(6)"
    assert all(rec.relation == "<" for rec in report.inequalities)
    assert all(rec.margin > DEFAULT_TOL for rec in report.inequalities)


def test_failure_produces_counterexample(monkeypatch):
    def hypotheses(params):
        return None

    def runner(params, run):
        from hyperspectra.families import hyperstar

        lo = run.instance("small-star", hyperstar(3, 3))
        hi = run.instance("big-star", hyperstar(3, 6))
        run.less("big-star", "small-star", hi, lo)  # deliberately backwards

    fake = TheoremEntry(
        theorem_id="FAKE_CLAIM",
        summary="always false",
        defaults={"m": 3},
        hypotheses=hypotheses,
        runner=runner,
    )
    monkeypatch.setitem(REGISTRY, "FAKE_CLAIM", fake)

    report = verify("FAKE_CLAIM")
    assert report.status == STATUS_FAIL
    assert not report.passed
    ce = report.counterexample
    assert ce is not None
    assert ce["theorem_id"] == "FAKE_CLAIM"
    assert ce["params"] == {"m": 3}
    assert ce["inequality"]["holds"] is False
    # both sides of the failing comparison come with concrete edge lists
    assert set(ce["witnesses"]) == {"big-star", "small-star"}
    for wit in ce["witnesses"].values():
        assert wit["m"] == 3
        assert all(len(e) == 3 for e in wit["edges"])


def test_hairline_margin_fails_strictness(monkeypatch):
    def runner(params, run):
        run.less("a", "b", 1.0, 1.0 + 1e-12)  # positive but far below tol

    fake = TheoremEntry("HAIRLINE", "margin below tol", {}, lambda p: None, runner)
    monkeypatch.setitem(REGISTRY, "HAIRLINE", fake)
    report = verify("HAIRLINE")
    assert report.status == STATUS_FAIL
    report = verify("HAIRLINE", tol=1e-13)
    assert report.status == STATUS_PASS


# the diameter-4 fast path ----------------------------------------------------------


@pytest.mark.parametrize("m,k", [(3, 9), (4, 8), (2, 7)])
def test_profile_quotient_matches_dense_solver(m, k):
    for hub, branch in diameter_four_profiles(m, k):
        fast = _star_profile_radius(m, hub, branch)
        dense = float(full_spectrum(diameter_four_from_profile(m, hub, branch))[-1])
        assert fast == pytest.approx(dense, abs=1e-9)


# spot checks on specific claims ----------------------------------------------------


def test_th3_names_the_position_past_the_midpoint():
    report = verify("TH3_ODD")  # m=3, d=5, k=9
    labels = [rec.label for rec in report.instances]
    assert "caterpillar(5;3:4)" in labels
    assert any("exhaustive" in note for note in report.notes)


def test_uct1_orders_cycle_lengths():
    report = verify("UCT1", m=3, k=6)
    chain = [rec for rec in report.inequalities
             if rec.lhs.startswith(("bundled-cycle", "loose-cycle("))
             and rec.rhs.startswith("bundled-cycle")]
    assert len(chain) == 3  # lengths 4, 5, 6 each sit below their predecessor
    assert all(rec.holds for rec in chain)


def test_tri_prop_counts_vertices_by_type():
    report = verify("TRI_PROP", m=4)
    eq = {(rec.lhs, rec.rhs): rec for rec in report.inequalities}
    key = ("interlocked-cycles(m=4): n", "k(m-1)-1")
    assert key in eq and eq[key].holds
    assert any("meet only at a vertex" in note for note in report.notes)


def test_records_round_trip_via_as_dict():
    rec = InequalityRecord(
        lhs="a", rhs="b", lhs_value=1.0, rhs_value=2.0,
        relation="<", margin=1.0, holds=True,
    )
    d = rec.as_dict()
    assert d["lhs"] == "a" and d["relation"] == "<" and d["holds"] is True
