import pytest

from sphsys import ops, search
from sphsys.budget import BudgetExceeded
from sphsys.dynkin import parse_diagram
from sphsys.families import instantiate


class TestCandidateRoots:
    def test_a1_only_doubled(self):
        assert search.candidate_roots("A1") == ((2,),)

    def test_b2_weights(self):
        cands = set(search.candidate_roots("B2"))
        # b(2), b'(2), b*(2), and the two doubled simples
        assert {(1, 1), (2, 2), (2, 0), (0, 2)} <= cands

    def test_a2_exact(self):
        assert set(search.candidate_roots("A2")) == {(2, 0), (0, 2), (1, 1)}

    def test_a3_has_pair_and_short_chain(self):
        cands = set(search.candidate_roots("A3"))
        assert (1, 0, 1) in cands
        assert (1, 2, 1) in cands

    def test_every_candidate_has_a_trace(self):
        d = parse_diagram("C3")
        for w in search.candidate_roots(d):
            assert search.admissible_traces(d, w)


class TestCompatibility:
    def test_symmetric(self):
        d = parse_diagram("B3")
        cands = search.candidate_roots(d)
        for a in cands:
            for b in cands:
                assert search._compatible(d, a, b) == search._compatible(d, b, a)

    def test_doubled_root_rejects_odd_pairing(self):
        d = parse_diagram("A2")
        # <a1^vee, a1+a2> = 1: not an even nonpositive integer
        assert not search._compatible(d, (2, 0), (1, 1))

    def test_doubled_roots_far_apart_ok(self):
        d = parse_diagram("A3")
        assert search._compatible(d, (2, 0, 0), (0, 0, 2))


class TestEnumerate:
    def test_a1_all_systems(self):
        systems = search.enumerate_systems("A1")
        keys = {(tuple(sorted(s.sp)), s.sigma) for s in systems}
        assert keys == {((), ()), ((0,), ()), ((), ((2,),))}

    def test_g2_total(self):
        assert len(search.enumerate_systems("G2")) == 10

    def test_cuspidal_flag_matches_filter(self):
        for spec in ("A2", "B2", "A1,A1"):
            cusp = search.enumerate_systems(spec, cuspidal_only=True)
            full = [s for s in search.enumerate_systems(spec) if s.is_cuspidal]
            assert sorted(repr(s) for s in cusp) == sorted(repr(s) for s in full)

    def test_all_emitted_systems_validate(self):
        for s in search.enumerate_systems("B3"):
            assert s.validate().ok

    def test_no_duplicates(self):
        systems = search.enumerate_systems("C3")
        keys = [(tuple(sorted(s.sp)), s.sigma) for s in systems]
        assert len(keys) == len(set(keys))

    def test_budget_trips(self, monkeypatch):
        monkeypatch.setenv("SPHSYS_MAX_STATES", "10")
        with pytest.raises(BudgetExceeded):
            search.enumerate_systems("B3")


class TestPrimitive:
    def test_bstar3_survives(self):
        # regression: the zero-pairing colour of b*(3) must not split it
        sys = instantiate("b*(n)", n=3)
        assert ops.is_decomposable(sys) is None
        assert ops.is_primitive(sys)

    def test_counts(self):
        expected = {"A1": 1, "A2": 2, "B2": 5, "G2": 4, "A1,A1": 1}
        for spec, want in expected.items():
            assert len(search.enumerate_primitive(spec)) == want, spec

    def test_product_of_doubled_simples_decomposes(self):
        found = search.enumerate_primitive("A1,A1")
        assert all(s.sigma != ((2, 0), (0, 2)) for s in found)


class TestVerifyCatalog:
    @pytest.mark.parametrize("spec", [
        "A3", "B3", "C3", "D4", "F4", "G2", "A1,A1", "B2,B2", "A1,C3",
    ])
    def test_search_matches_catalog(self, spec):
        chk = search.verify_catalog(spec)
        assert chk.ok, (chk.missing, chk.extra)

    def test_empty_diagram_pair(self):
        # A1,A3 admits no primitive system: nothing spans both components
        chk = search.verify_catalog("A1,A3")
        assert chk.ok and chk.found == 0
