import numpy as np
import pytest

import oracle as O
from skewmccoy import (CAVEAT, CapacityError, HypothesisError, InvalidSpecError,
                       WindowSpace, action_names, build_action, build_monoid,
                       build_ring, enumerate_actions, fields_witness_check,
                       hypothesis_profile, mccoy_search, replay, series_mul,
                       two_primal_exploration, verify_annihilator_nonzero,
                       verify_coefficients_in_radical, verify_compatible_membership,
                       verify_lemma_generation, verify_main_theorem,
                       verify_maximal_prime, verify_quasi_duo, verify_sn_transfer)
from skewmccoy.checkers import COUNTEREXAMPLE, VACUOUS, VERIFIED
from skewmccoy.series import format_series, parse_series, scale_right_const

GF4 = "gf 4 poly=x^2+x+1"
T2 = "uppertri 2 zmod2"


def act(ring, monoid, name):
    R = build_ring(ring)
    return build_action(R, build_monoid(monoid), [action_names(R)[name]])


# -- hypothesis profile --------------------------------------------------------

@pytest.mark.parametrize("ring,action,holds", [
    ("zmod 4", "trivial", True), (T2, "trivial", False), (GF4, "frobenius", True),
    ("product zmod2 zmod2", "swap", False),
])
def test_hypothesis_profile(ring, action, holds):
    a = act(ring, "N", action)
    hp = hypothesis_profile(a.ring, a)
    assert hp.theorem_hypotheses_hold is holds


def test_negative_control_profile():
    a = act(T2, "N", "trivial")
    hp = hypothesis_profile(a.ring, a)
    assert not hp.profile.abelian
    R = a.ring
    assert tuple(R.names[x] for x in hp.profile.abelian.witness) == ("[1,0;0,0]", "[0,1;0,0]")


# -- McCoy search: spec examples and oracle agreement ----------------------------

def test_field_is_vacuous():
    v = mccoy_search(act("zmod 2", "N", "trivial"), (0, 1, 2), "right")
    assert v.outcome == VACUOUS and v.zero_divisor_pairs == 0 and v.caveat == CAVEAT


def test_z4_verified_with_witness():
    a = act("zmod 4", "N", "trivial")
    v = mccoy_search(a, (0, 1), "right")
    assert v.outcome == VERIFIED
    assert v.pairs_examined == 15 ** 2 and v.zero_divisor_pairs == 9
    f = parse_series(a, "2 + 2*x")
    assert not series_mul(f, f) and not scale_right_const(f, 2)


def test_gf4_frobenius_vacuous():
    v = mccoy_search(act(GF4, "N", "frobenius"), (0, 1), "right")
    assert v.outcome == VACUOUS


# frozen from the brute-force oracle (tests/oracle.py)
FROZEN = [
    ("zmod 4", "N", "trivial", (0, 1), VERIFIED, 9, None),
    ("zmod 4", "N", "trivial", (0, 1, 2), VERIFIED, 49, None),
    ("zmod 6", "N", "trivial", (0, 1), VERIFIED, 48, None),
    ("zmod 4", "Z", "trivial", (-1, 0, 1), VERIFIED, 49, None),
    ("smatrix 2 zmod2", "N", "trivial", (0, 1), VERIFIED, 9, None),
    ("product zmod2 zmod2", "N", "swap", (0, 1), COUNTEREXAMPLE, 20,
     ("(1,0)*x^0 + (1,0)*x^1", "(0,1)*x^0 + (1,0)*x^1")),
    ("product zmod2 zmod2", "Z", "swap", (-1, 0, 1), COUNTEREXAMPLE, 118,
     ("(1,0)*x^0 + (1,0)*x^1", "(0,1)*x^0 + (1,0)*x^1")),
    (T2, "N", "trivial", (0, 1), COUNTEREXAMPLE, 249,
     ("[1,0;0,0]*x^0 + [0,1;0,0]*x^1", "[0,0;0,1]*x^0 + [0,1;0,0]*x^1")),
]


@pytest.mark.parametrize("ring,monoid,action,D,outcome,pairs,cx", FROZEN)
@pytest.mark.parametrize("side", ["right", "left"])
def test_frozen_verdicts(ring, monoid, action, D, outcome, pairs, cx, side):
    v = mccoy_search(act(ring, monoid, action), D, side)
    assert (v.outcome, v.zero_divisor_pairs) == (outcome, pairs)
    if cx:
        assert tuple(format_series(s) for s in v.counterexample) == cx
    assert replay(v)


@pytest.mark.parametrize("ring,monoid,action,D", [
    ("zmod 4", "N", "trivial", (0, 2)), ("zmod 6", "Z", "trivial", (-1, 0)),
    ("product zmod2 zmod2", "N", "e1", (0, 1)), (T2, "N", "e4", (0, 1)),
    ("zmod 8", "N", "trivial", (0, 1)),
])
@pytest.mark.parametrize("side", ["right", "left"])
def test_live_oracle_agreement(ring, monoid, action, D, side):
    a = act(ring, monoid, action)
    R = a.ring
    o = O.Ring(R.order, R.add.tolist(), R.mul.tolist(), R.zero, R.one)
    want = O.mccoy(o, list(a.generators[0].map), D, side)
    v = mccoy_search(a, D, side)
    assert (v.outcome, v.zero_divisor_pairs) == want[:2]
    if want[2] is not None:
        assert tuple(dict(s.terms) for s in v.counterexample) == want[2]


# -- invariants ------------------------------------------------------------------

def test_order_independence():
    for ring, action in ((T2, "trivial"), ("zmod 8", "trivial"), ("product zmod2 zmod2", "swap")):
        a = act(ring, "N", action)
        for side in ("right", "left"):
            base = mccoy_search(a, (0, 1), side)
            for seed in (1, 2, 3):
                v = mccoy_search(a, (0, 1), side, order_seed=seed)
                assert v.outcome == base.outcome
                assert v.zero_divisor_pairs == base.zero_divisor_pairs
                assert replay(v)


def test_workers_do_not_change_result():
    a = act("zmod 6", "N", "trivial")
    space1 = WindowSpace(a, (0, 1, 2))
    space4 = WindowSpace(a, (0, 1, 2))
    Z1, Z4 = space1.zero_matrix(1), space4.zero_matrix(4)
    assert np.array_equal(Z1, Z4)
    v1 = mccoy_search(a, (0, 1, 2), "right", workers=1)
    v4 = mccoy_search(a, (0, 1, 2), "right", workers=4)
    assert v1.to_dict() == v4.to_dict()


def test_window_monotonicity():
    a = act(T2, "N", "trivial")
    windows = [(0,), (0, 1), (0, 1, 2)]
    outcomes = [mccoy_search(a, D, "right").outcome for D in windows]
    first = outcomes.index(COUNTEREXAMPLE)
    assert all(o == COUNTEREXAMPLE for o in outcomes[first:])
    counts = [mccoy_search(a, D, "right").zero_divisor_pairs for D in windows]
    assert counts == sorted(counts)


@pytest.mark.parametrize("ring", ["zmod 4", "zmod 6", "zmod 8", "product zmod2 zmod2",
                                  "smatrix 2 zmod2", GF4])
def test_commutative_sides_agree(ring):
    a = act(ring, "N", "trivial")
    r = mccoy_search(a, (0, 1, 2), "right")
    l = mccoy_search(a, (0, 1, 2), "left")
    assert r.outcome == l.outcome


def test_budget_and_mode_errors():
    a = act("zmod 8", "N", "trivial")
    with pytest.raises(CapacityError, match="random mode"):
        mccoy_search(a, (0, 1, 2, 3), "right", budget=10 ** 6)
    with pytest.raises(InvalidSpecError):
        mccoy_search(a, (0, 1), "up")
    with pytest.raises(InvalidSpecError, match="seed"):
        mccoy_search(a, (0, 1), "right", mode="random")


def test_random_mode_reproducible():
    a = act(T2, "N", "trivial")
    v1 = mccoy_search(a, (0, 1, 2), "right", mode="random", seed=7, trials=4000)
    v2 = mccoy_search(a, (0, 1, 2), "right", mode="random", seed=7, trials=4000)
    assert v1.to_dict() == v2.to_dict()
    assert v1.outcome == COUNTEREXAMPLE and replay(v1)


def test_replay_rejects_tampered_counterexample():
    a = act(T2, "N", "trivial")
    v = mccoy_search(a, (0, 1), "right")
    f, g = v.counterexample
    v.counterexample = (f, f)
    assert not replay(v)


def test_verdict_serialization():
    v = mccoy_search(act(T2, "N", "trivial"), (0, 1), "right")
    d = v.to_dict()
    assert d["counterexample"]["fg"] == "0"
    assert d["caveat"] == CAVEAT
    R = v.counterexample[0].action.ring
    assert set(d["counterexample"]["witness_failures"]) == {R.names[c] for c in R.nonzero}


# -- lemmas ------------------------------------------------------------------------

def _labels(rep):
    return {o.label: o.conclusion_holds for o in rep.outcomes}


def test_generation_lemma():
    rep = verify_lemma_generation(build_ring("zmod 4"))
    assert rep.status == "holds" and not rep.failures
    assert _labels(rep)["(2, 3)"] is True
    assert "(2, 2)" not in _labels(rep)        # premise fails: vacuous instance
    rep = verify_lemma_generation(build_ring(GF4))
    assert rep.status == "holds"
    assert verify_lemma_generation(build_ring(T2)).status == "skipped"


def test_quasi_duo_lemma():
    assert verify_quasi_duo(build_ring("zmod 6")).status == "holds"
    assert verify_quasi_duo(build_ring("smatrix 2 zmod2")).status == "holds"
    assert verify_quasi_duo(build_ring(T2)).status == "skipped"


def test_maximal_prime_lemma():
    for spec, n in (("zmod 4", 2), ("zmod 6", 4), (GF4, 2)):
        rep = verify_maximal_prime(build_ring(spec))
        assert rep.status == "holds" and rep.premise_held == n


def test_annihilator_lemma():
    rep = verify_annihilator_nonzero(build_ring("zmod 6"))
    assert rep.status == "holds" and rep.premise_held == 8
    rep = verify_annihilator_nonzero(build_ring("smatrix 2 zmod2"))
    assert rep.status == "holds"


def test_compatible_membership_lemma():
    a = act("zmod 4", "N", "trivial")
    assert verify_compatible_membership(a.ring, a).status == "holds"
    a = act(GF4, "N", "frobenius")
    assert verify_compatible_membership(a.ring, a).status == "holds"
    a = act("product zmod2 zmod2", "N", "swap")
    rep = verify_compatible_membership(a.ring, a)
    assert rep.status == "skipped" and "compatible" in rep.notes


def test_coefficients_in_radical_lemma():
    rep = verify_coefficients_in_radical(act("zmod 4", "N", "trivial"), (0, 1))
    assert rep.status in ("holds", "vacuous") and not rep.failures
    rep = verify_coefficients_in_radical(act(GF4, "N", "frobenius"), (0, 1))
    assert rep.status == "vacuous"


@pytest.mark.parametrize("ring,D", [("zmod 8", (0, 1, 2)), ("zmod 6", (0, 1, 2)),
                                    ("smatrix 2 zmod2", (0, 1, 2))])
def test_coefficients_in_radical_vacuous_on_catalog(ring, D):
    # frozen observation: no zero-divisor pair in these windows meets the premise
    rep = verify_coefficients_in_radical(act(ring, "N", "trivial"), D)
    assert rep.status == "vacuous" and rep.premise_held == 0
    assert "vacuous" in rep.notes


# -- theorem -----------------------------------------------------------------------

def test_theorem_examples():
    res = verify_main_theorem(act("zmod 4", "N", "trivial"), (0, 1, 2))
    assert res.passed and res.right.outcome == VERIFIED and res.left.outcome == VERIFIED
    res = verify_main_theorem(act("smatrix 2 zmod2", "N", "trivial"), (0, 1))
    assert res.passed
    with pytest.raises(HypothesisError):
        verify_main_theorem(act(T2, "N", "trivial"), (0, 1))
    res = verify_main_theorem(act(T2, "N", "trivial"), (0, 1), explore=True)
    assert res.exploration and res.report.status == "skipped"
    assert replay(res.right) and replay(res.left)


def test_enumerated_compatible_actions():
    labels = [l for l, _ in enumerate_actions(build_ring(GF4), build_monoid("N"))]
    assert labels == ["trivial", "frobenius"]
    labels = [l for l, _ in enumerate_actions(build_ring("product zmod2 zmod2"),
                                              build_monoid("Z"), compatible_only=False)]
    assert labels == ["trivial", "swap"]


# -- fields shadow, S_n transfer, exploration ----------------------------------------

def test_fields_shadow():
    for spec in ("zmod 4", "zmod 6", "product zmod2 zmod2", GF4):
        rep = fields_witness_check(build_ring(spec), (0, 1, 2))
        assert rep.status == "holds", spec
    with pytest.raises(HypothesisError):
        fields_witness_check(build_ring(T2))


def test_fields_examples():
    R = build_ring("zmod 4")
    space = WindowSpace(act("zmod 4", "N", "trivial"), (0, 1, 2))
    Z = space.zero_matrix()
    wit = space.first_witness(space.left_witness_table(space.coeffs))
    row = lambda *c: int(np.flatnonzero((space.coeffs == list(c)).all(axis=1))[0])  # noqa: E731
    zd = lambda r: bool((Z[r] & space.nonzero).any())  # noqa: E731
    assert zd(row(2, 2, 0)) and wit[row(2, 2, 0)] == 2
    assert not zd(row(1, 2, 0)) and wit[row(1, 2, 0)] == -1
    assert R.order == 4


@pytest.mark.parametrize("ring,n,qorder", [("zmod 2", 2, 2), ("zmod 2", 3, 2), ("zmod 4", 2, 2)])
def test_sn_transfer(ring, n, qorder):
    rep = verify_sn_transfer(build_ring(ring), n)
    assert rep.status == "holds"
    assert f"|R/J|={qorder}, |S_n/J|={qorder}" in rep.notes


def test_sn_transfer_non_abelian_base():
    rep = verify_sn_transfer(build_ring(T2), 2)
    assert rep.status == "holds"
    assert "base=False, matrix=False" in rep.notes


def test_sn_transfer_capacity():
    rep = verify_sn_transfer(build_ring("zmod 8"), 2, cap=32)
    assert rep.status == "skipped" and "capacity" in rep.notes


def test_two_primal_exploration():
    rings = [build_ring(s) for s in ("zmod 4", T2)]
    rep = two_primal_exploration(rings, build_monoid("N"), window=(0, 1))
    assert [e.ring for e in rep.entries] == [T2] * len(rep.entries)
    assert {"ring": "zmod 4", "reason": "abelian"} in rep.excluded
    for e in rep.entries:
        assert e.right.outcome in (VERIFIED, COUNTEREXAMPLE, VACUOUS)
        assert replay(e.right) and replay(e.left)
    empty = two_primal_exploration([build_ring("zmod 6")], build_monoid("N"))
    assert empty.empty and empty.to_dict()["empty_stratum"]
