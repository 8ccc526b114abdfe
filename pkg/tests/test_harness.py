import json
import re

import pytest
from hypothesis import given, strategies as st

import hamcheck as hc
from hamcheck.digraph import parse, serialize
from hamcheck.harness import (Counterexample, SearchOutcome, bip_positions,
                              bipartite_from_code, digraph_from_code,
                              enum_positions, enumerate_and_check, format_report,
                              outcome_to_json, recheck_counterexample,
                              sample_and_check, search_problem1, search_problem2,
                              verify_lemma_drivers, verify_tightness)
from hamcheck.solver import CapacityError


class TestCodes:
    def test_positions_row_major(self):
        assert enum_positions(3) == [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]

    def test_code_zero_and_full(self):
        assert digraph_from_code(3, 0).arc_count() == 0
        assert digraph_from_code(3, 63) == hc.build_complete(3).digraph

    @given(st.integers(2, 5), st.data())
    def test_code_roundtrip(self, n, data):
        code = data.draw(st.integers(0, (1 << (n * (n - 1))) - 1))
        d = digraph_from_code(n, code)
        back = 0
        for i, (u, v) in enumerate(enum_positions(n)):
            if d.has_arc(u, v):
                back |= 1 << i
        assert back == code

    def test_bipartite_code(self):
        a = 3
        full = (1 << len(bip_positions(a))) - 1
        d = bipartite_from_code(a, full)
        assert d.arc_count() == 2 * a * a
        assert d.bipartition == (0, 0, 0, 1, 1, 1)


class TestTightness:
    def test_clean(self):
        out = verify_tightness()
        assert out.suite == "tightness"
        assert out.checked == 5
        assert out.counterexamples == []
        assert out.seed is None


class TestEnumerate:
    # hypothesis-true counts frozen from the first complete runs
    N3_COUNTS = {"nash-williams": 1, "ghouila-houri": 7, "woodall": 1,
                 "meyniel": 15, "one-light": 13, "main": 0, "long-cycle": 13}

    @pytest.mark.parametrize("condition,expected", sorted(N3_COUNTS.items()))
    def test_n3_counts(self, condition, expected):
        out = enumerate_and_check(3, condition)
        assert out.checked == 64
        assert out.parameters["hypothesis_true"] == expected
        assert out.counterexamples == []

    def test_n4_one_light(self):
        out = enumerate_and_check(4, "one-light")
        assert out.parameters["hypothesis_true"] == 576
        assert out.counterexamples == []

    def test_rejects_unknown_condition(self):
        with pytest.raises(ValueError):
            enumerate_and_check(3, "ham-connected")

    def test_rejects_tiny_order(self):
        with pytest.raises(ValueError):
            enumerate_and_check(1, "meyniel")

    def test_caps_order(self):
        with pytest.raises(CapacityError):
            enumerate_and_check(6, "meyniel")

    def test_jobs_do_not_change_outcome(self):
        a = outcome_to_json(enumerate_and_check(3, "meyniel"))
        b = outcome_to_json(enumerate_and_check(3, "meyniel", jobs=3))
        assert a == b


class TestSampleMain:
    def test_small_run(self):
        out = sample_and_check(9, 0, 20, seed=7)
        assert out.checked == 20
        assert out.counterexamples == []
        assert out.parameters == {"n": 9, "k": 0, "samples": 20}
        assert out.seed == 7

    def test_jobs_do_not_change_outcome(self):
        a = outcome_to_json(sample_and_check(9, 1, 12, seed=3))
        b = outcome_to_json(sample_and_check(9, 1, 12, seed=3, jobs=4))
        assert a == b

    def test_validation(self):
        with pytest.raises(ValueError):
            sample_and_check(8, 0, 5, seed=1)
        with pytest.raises(ValueError):
            sample_and_check(9, 0, 0, seed=1)
        with pytest.raises(CapacityError):
            sample_and_check(25, 0, 5, seed=1)


class TestLemmaDrivers:
    def test_frozen_small_run(self):
        out = verify_lemma_drivers(200, seed=3)
        assert out.counterexamples == []
        assert out.parameters == {
            "trials": 200,
            "spectrum_checked": 56, "spectrum_skipped": 144,
            "insertion_checked": 64, "insertion_skipped": 136,
            "case_i": 54, "case_ii": 18, "case_iii": 1,
        }
        assert out.checked == 120

    def test_jobs_do_not_change_outcome(self):
        a = outcome_to_json(verify_lemma_drivers(60, seed=9))
        b = outcome_to_json(verify_lemma_drivers(60, seed=9, jobs=3))
        assert a == b

    def test_validation(self):
        with pytest.raises(ValueError):
            verify_lemma_drivers(0, seed=1)


class TestProblemProbes:
    def test_p1_sampled_no_finds_at_l0(self):
        out = search_problem1(3, 1, 0, "i", samples=25, seed=11)
        assert out.counterexamples == []
        assert out.parameters["hypothesis_true"] + out.parameters["skipped"] == 25

    def test_p1_variant_ii(self):
        out = search_problem1(3, 1, 1, "ii", samples=25, seed=11)
        assert out.counterexamples == []
        assert out.parameters["hypothesis_true"] > 0

    def test_p2_vacuous_bound_at_a3_l0(self):
        # a+2 exceeds the designated pair's maximum 2a-2 when a=3
        out = search_problem2(3, 1, 0, samples=25, seed=11)
        assert out.parameters["hypothesis_true"] == 0
        assert out.parameters["skipped"] == 25

    def test_p2_sampled(self):
        out = search_problem2(4, 1, 0, samples=25, seed=11)
        assert out.counterexamples == []
        assert out.parameters["hypothesis_true"] > 0

    def test_validation(self):
        with pytest.raises(ValueError):
            search_problem1(2, 1, 0, "i", samples=5, seed=1)
        with pytest.raises(ValueError):
            search_problem1(3, 0, 0, "i", samples=5, seed=1)
        with pytest.raises(ValueError):
            search_problem1(3, 1, -1, "i", samples=5, seed=1)
        with pytest.raises(ValueError):
            search_problem1(3, 1, 0, "iii", samples=5, seed=1)
        with pytest.raises(ValueError):
            search_problem1(3, 1, 0, "i")
        with pytest.raises(CapacityError):
            search_problem1(13, 1, 0, "i", samples=5, seed=1)
        with pytest.raises(CapacityError):
            search_problem1(4, 1, 0, "i", exhaustive=True)
        with pytest.raises(CapacityError):
            search_problem2(4, 1, 0, exhaustive=True)

    def test_jobs_do_not_change_outcome(self):
        a = outcome_to_json(search_problem2(4, 1, 1, samples=10, seed=2))
        b = outcome_to_json(search_problem2(4, 1, 1, samples=10, seed=2, jobs=3))
        assert a == b


class TestRecheck:
    def _ce(self, d, assertion, data):
        return Counterexample(serialize(d), assertion, data)

    def test_tightness_false_claim_reproduces(self):
        # a Hamiltonian digraph logged as failing non-hamiltonicity
        k4 = hc.build_complete(4).digraph
        ce = self._ce(k4, "tightness:d8:non-hamiltonian",
                      {"check": "non-hamiltonian", "z": 3, "expected_order": 4})
        assert recheck_counterexample(ce)

    def test_tightness_sound_instance_does_not_reproduce(self):
        d9 = hc.build_d9().digraph
        ce = self._ce(d9, "tightness:d9:non-hamiltonian",
                      {"check": "non-hamiltonian", "z": 8, "expected_order": 9})
        assert not recheck_counterexample(ce)

    def test_tightness_z_degree(self):
        d9 = hc.build_d9().digraph
        ce = self._ce(d9, "tightness:d9:z-degree",
                      {"check": "z-degree", "z": 0, "expected_order": 9})
        assert recheck_counterexample(ce), "vertex 0 does not have degree 4"

    def test_enumerate_false_claim_rejected(self):
        k4 = hc.build_complete(4).digraph
        ce = self._ce(k4, "enumerate:meyniel",
                      {"condition": "meyniel", "k": 0, "n": 4, "code": 4095})
        assert not recheck_counterexample(ce)

    def test_sample_generator_failure_reproduces(self):
        d9 = hc.build_d9().digraph
        ce = self._ce(d9, "sample-main:generator", {"k": 0})
        assert recheck_counterexample(ce), "d9 genuinely fails the degree condition"

    def test_spectrum_requires_valid_cycle(self):
        k4 = hc.build_complete(4).digraph
        ce = self._ce(k4, "lemmas:cycle-spectrum",
                      {"cycle": [0, 1], "x": 2, "missing_length": 3})
        assert not recheck_counterexample(ce), "K4 has every cycle length"

    def test_insertion_case_recheck(self):
        k4 = hc.build_complete(4).digraph
        ce = self._ce(k4, "lemmas:insertion:case_i",
                      {"path": [0, 1], "x": 2, "case": "case_i"})
        assert not recheck_counterexample(ce)

    def test_problem_rechecks(self):
        full = bipartite_from_code(3, (1 << len(bip_positions(3))) - 1)
        ce = Counterexample(serialize(full), "problem1:non-hamiltonian",
                            {"a": 3, "k": 1, "l": 0, "variant": "i"})
        assert not recheck_counterexample(ce), "complete bipartite is Hamiltonian"
        ce = Counterexample(serialize(full), "problem2:non-hamiltonian",
                            {"a": 3, "k": 1, "l": 0})
        assert not recheck_counterexample(ce)

    def test_unknown_tag(self):
        ce = Counterexample("digraph 2\n0 1\n", "mystery:thing", {})
        with pytest.raises(ValueError):
            recheck_counterexample(ce)


class TestReporting:
    def _outcome(self, ces):
        return SearchOutcome("enumerate", {"n": 3, "condition": "meyniel",
                                           "hypothesis_true": 15},
                             None, 64, ces, 0.1234)

    def test_header_and_summary(self):
        text = format_report(self._outcome([]))
        lines = text.splitlines()
        assert lines[0] == "suite=enumerate seed=- condition=meyniel hypothesis_true=15 n=3"
        assert re.fullmatch(r"checked=64 counterexamples=0 elapsed=0\.\d{3}", lines[1])

    def test_inline_counterexample_line(self):
        ce = Counterexample("digraph 2\n0 1\n", "enumerate:meyniel", {"code": 1})
        lines = format_report(self._outcome([ce])).splitlines()
        assert lines[1] == ('counterexample dgf="digraph 2\\n0 1\\n" '
                            'assertion=enumerate:meyniel')

    def test_out_dir_files(self, tmp_path):
        ce = Counterexample("digraph 2\n0 1\n", "enumerate:meyniel", {"code": 1})
        lines = format_report(self._outcome([ce, ce]), out_dir=tmp_path).splitlines()
        first = tmp_path / "enumerate-ce-0000.dgf"
        assert f"counterexample file={first} assertion=enumerate:meyniel" == lines[1]
        assert first.read_text() == "digraph 2\n0 1\n"
        assert (tmp_path / "enumerate-ce-0001.dgf").exists()

    def test_seed_printed_when_set(self):
        out = SearchOutcome("sample-main", {}, 7, 1, [], 0.5)
        assert format_report(out).splitlines()[0] == "suite=sample-main seed=7"

    def test_nested_params_compact_json(self):
        out = SearchOutcome("lemmas", {"detail": {"b": 1, "a": 2}}, 1, 1, [], 0.0)
        head = format_report(out).splitlines()[0]
        assert 'detail={"a":2,"b":1}' in head

    def test_json_payload_has_no_timing(self):
        payload = outcome_to_json(self._outcome([]))
        assert "elapsed" not in payload
        assert payload["checked"] == 64
        ser = json.dumps(payload, sort_keys=True)
        assert "elapsed" not in ser

    def test_counterexamples_serialized(self):
        ce = Counterexample("digraph 2\n0 1\n", "enumerate:meyniel", {"code": 1})
        payload = outcome_to_json(self._outcome([ce]))
        assert payload["counterexamples"] == [
            {"dgf": "digraph 2\n0 1\n", "assertion": "enumerate:meyniel",
             "data": {"code": 1}}]
