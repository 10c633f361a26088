import json
from itertools import permutations
from random import Random

import pytest

from entfam import (
    DEMO_BINDINGS,
    DEMO_STATES,
    Class3,
    GaussianRational,
    ProductFamily,
    StateError,
    classify4,
    classify_all_partitions,
    classify_partition,
    detect_overlap,
    label_text,
    paper_demo,
    permutation_covariance_check,
    permute_qubits,
    report_json,
    slocc_invariance_check,
)
from entfam.sampling import random_state
from _helpers import state_of

S1 = DEMO_STATES["S1"]
S2 = DEMO_STATES["S2"]
S3 = DEMO_STATES["S3"]
S4 = DEMO_STATES["S4"]


class TestClassify4:
    def test_s2_keeps_its_family_at_the_first_partition(self):
        assert label_text(classify4(state_of(S2), 1)) == "span{000,0Psi}"

    def test_s2_changes_family_at_the_last_partition(self):
        assert label_text(classify4(state_of(S2), 4)) == "span{000,GHZ}"

    def test_rank_one_branch(self):
        label = classify4(state_of("|0000>+|0111>"), 1)  # |0>(|000>+|111>)
        assert label == ProductFamily(Class3.GHZ)
        assert label_text(label) == "product:GHZ"

    def test_rank_one_biseparable_detail(self):
        label = classify4(state_of("|0000>+|0011>"), 1)  # |0>|0>(|00>+|11>)
        assert label == ProductFamily(Class3.biseparable(1))
        assert label_text(label) == "product:0_1Psi"

    def test_bad_partition_index(self):
        with pytest.raises(StateError):
            classify4(state_of(S1), 5)

    def test_needs_four_qubits(self):
        with pytest.raises(StateError):
            classify4(state_of("|000>"), 1)

    def test_rank_dichotomy(self):
        rng = Random(2718)
        for _ in range(12):
            s = random_state(rng, 4)
            for i in (1, 2, 3, 4):
                outcome = classify_partition(s, i)
                assert (outcome.rank == 1) == isinstance(outcome.label, ProductFamily)
                assert (outcome.inventory is None) == (outcome.rank == 1)


class TestReports:
    def test_s1_no_overlap_anywhere(self):
        report = classify_all_partitions(state_of(S1))
        labels = {label_text(o.label) for o in report.outcomes}
        assert labels == {"span{000,0Psi}"}
        assert report.overlap is False
        assert report.distinct_labels == ("span{000,0Psi}",)

    def test_s4_overlap(self):
        report = classify_all_partitions(state_of(S4, l1=2, l2=3))
        assert label_text(report.outcome(1).label) == "span{0Psi,0Psi}"
        assert label_text(report.outcome(4).label) == "span{0Psi,GHZ}"
        assert report.overlap is True

    def test_fully_product_state(self):
        report = classify_all_partitions(state_of("|0000>"))
        for o in report.outcomes:
            assert o.label == ProductFamily(Class3.FULLY_SEPARABLE)
        assert report.overlap is False

    def test_report_json_shape(self):
        report = classify_all_partitions(
            state_of(S3, l1=2, l2=3),
            state_text=S3,
            params={"l1": GaussianRational(2), "l2": GaussianRational(3)},
        )
        data = json.loads(report_json(report))
        assert list(data) == ["state", "params", "partitions", "overlap", "distinct_labels"]
        assert data["state"] == S3
        assert data["params"] == {"l1": "2", "l2": "3"}
        assert set(data["partitions"]) == {"1", "2", "3", "4"}
        one = data["partitions"]["1"]
        assert one["rank"] == 2
        assert one["label"] == "span{0Psi,0Psi}"
        assert one["inventory"]["biseparable_points"] == {"1": 2, "2": 0, "3": 0}

    def test_reports_are_deterministic(self):
        a = report_json(classify_all_partitions(state_of(S4, l1=2, l2=3)))
        b = report_json(classify_all_partitions(state_of(S4, l1=2, l2=3)))
        assert a == b


class TestOverlap:
    def test_s2_overlap_with_evidence(self):
        ev = detect_overlap(state_of(S2))
        assert ev.overlap is True
        labels = dict(ev.labels)
        assert labels[1] == "span{000,0Psi}"
        assert labels[4] == "span{000,GHZ}"
        assert set(ev.distinct_labels) == {"span{000,0Psi}", "span{000,GHZ}"}

    def test_s1_no_overlap_on_the_outer_partitions(self):
        ev = detect_overlap(state_of(S1), partitions=(1, 4))
        assert ev.overlap is False
        assert ev.partitions == (1, 4)

    def test_w_family_probe_is_partition_independent(self):
        # |0>|000> + |1>(|001>+|010>+|100>)
        ev = detect_overlap(state_of("|0000>+|1001>+|1010>+|1100>"))
        assert ev.overlap is False
        assert set(lab for _, lab in ev.labels) == {"span{000,W}"}

    def test_strict_mode_sees_the_biseparable_qubit_move(self):
        s = state_of(S3, l1=2, l2=3)
        assert detect_overlap(s).overlap is False
        strict = detect_overlap(s, strict_k=True)
        assert strict.overlap is True
        labels = dict(strict.labels)
        assert labels[1] == "span{0_1Psi,0_1Psi}"
        assert labels[4] == "span{0_3Psi,0_3Psi}"

    def test_overlap_is_permutation_stable(self):
        rng = Random(11)
        for text, params in ((S2, {}), (S4, {"l1": 2, "l2": 3}), (S1, {})):
            s = state_of(text, **params)
            base = detect_overlap(s).overlap
            for _ in range(4):
                perm = list(range(1, 5))
                rng.shuffle(perm)
                assert detect_overlap(permute_qubits(s, perm)).overlap == base


class TestOrbitCheck:
    def test_s2_invariant(self):
        report = slocc_invariance_check(state_of(S2), trials=20, seed=7)
        assert report.passed
        assert report.trials == 20 and report.seed == 7

    def test_product_state_invariant(self):
        report = slocc_invariance_check(state_of("|0000>"), trials=10, seed=1)
        assert report.passed
        assert classify4(state_of("|0000>"), 2) == ProductFamily(Class3.FULLY_SEPARABLE)

    def test_deterministic_for_fixed_seed(self):
        a = slocc_invariance_check(state_of(S4, l1=2, l2=3), trials=5, seed=3)
        b = slocc_invariance_check(state_of(S4, l1=2, l2=3), trials=5, seed=3)
        assert a == b

    def test_trials_floor(self):
        with pytest.raises(StateError):
            slocc_invariance_check(state_of(S1), trials=0, seed=0)


class TestPermutationCovariance:
    def test_identity(self):
        assert permutation_covariance_check(state_of(S1), (1, 2, 3, 4))

    def test_first_pair_swap(self):
        assert permutation_covariance_check(state_of(S1), (2, 1, 3, 4))

    def test_last_pair_swap(self):
        assert permutation_covariance_check(state_of(S2), (1, 2, 4, 3))

    def test_all_permutations_of_the_demo_states(self):
        states = [
            state_of(S1),
            state_of(S2),
            state_of(S3, l1=2, l2=3),
            state_of(S4, l1=2, l2=3),
        ]
        for s in states:
            for perm in permutations((1, 2, 3, 4)):
                assert permutation_covariance_check(s, perm), perm


class TestDemo:
    def test_rows_and_expected_labels(self):
        rows = paper_demo()
        names = [r.name for r in rows]
        assert names == ["S1", "S2", "S3", "S3", "S4", "S4"]
        by_name = {}
        for r in rows:
            by_name.setdefault(r.name, []).append(r.report)
        assert by_name["S2"][0].overlap is True
        assert by_name["S1"][0].overlap is False
        for rep in by_name["S3"]:
            assert rep.overlap is False
        for rep in by_name["S4"]:
            assert rep.overlap is True
        assert len(DEMO_BINDINGS) == 2
