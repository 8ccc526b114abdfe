import pytest
from hypothesis import given

import hamcheck as hc
from hamcheck.connectivity import is_k_strong, is_strong, vertex_connectivity
from hamcheck.digraph import converse, from_arcs, induced, new_digraph

from conftest import digraphs


def cycle_digraph(n):
    return from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


class TestIsStrong:
    def test_single_vertex(self):
        assert is_strong(new_digraph(1))

    def test_cycle(self):
        assert is_strong(cycle_digraph(5))

    def test_path_is_not(self):
        assert not is_strong(from_arcs(3, [(0, 1), (1, 2)]))

    def test_two_components(self):
        assert not is_strong(from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 2)]))


class TestIsKStrong:
    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            is_k_strong(cycle_digraph(3), 0)

    def test_cycle_is_exactly_1_strong(self):
        c = cycle_digraph(6)
        assert is_k_strong(c, 1)
        assert not is_k_strong(c, 2)

    def test_complete_is_n_minus_1_strong(self):
        k5 = hc.build_complete(5).digraph
        assert is_k_strong(k5, 4)
        assert not is_k_strong(k5, 5), "order must exceed k"

    def test_tightness_family(self):
        for build in (hc.build_d8, hc.build_d9, hc.build_d9_prime):
            d = build().digraph
            assert is_k_strong(d, 2)
            assert not is_k_strong(d, 3)

    @given(digraphs(min_n=2, max_n=6))
    def test_monotone_in_k(self, d):
        flags = [is_k_strong(d, k) for k in range(1, d.n)]
        # once it fails at some k it fails for every larger k
        assert all(a or not b for a, b in zip(flags, flags[1:]))

    @given(digraphs(min_n=2, max_n=6))
    def test_matches_vertex_connectivity(self, d):
        kappa = vertex_connectivity(d).vertex_connectivity
        for k in range(1, d.n):
            assert is_k_strong(d, k) == (kappa >= k)

    @given(digraphs(min_n=2, max_n=6))
    def test_converse_invariant(self, d):
        c = converse(d)
        for k in range(1, d.n):
            assert is_k_strong(d, k) == is_k_strong(c, k)


class TestVertexConnectivity:
    def test_needs_two_vertices(self):
        with pytest.raises(ValueError):
            vertex_connectivity(new_digraph(1))

    def test_not_strong(self):
        rep = vertex_connectivity(from_arcs(3, [(0, 1), (1, 2)]))
        assert rep == hc.ConnectivityReport(False, 0, ())

    def test_complete_has_no_cut(self):
        rep = vertex_connectivity(hc.build_complete(4).digraph)
        assert rep.is_strong and rep.vertex_connectivity == 3
        assert rep.witness_cut is None

    def test_cycle_cut_is_smallest_vertex(self):
        rep = vertex_connectivity(cycle_digraph(5))
        assert rep.vertex_connectivity == 1
        assert rep.witness_cut == (0,)

    def test_d8_frozen(self):
        rep = vertex_connectivity(hc.build_d8().digraph)
        assert (rep.vertex_connectivity, rep.witness_cut) == (2, (0, 1))

    def test_d9_frozen(self):
        rep = vertex_connectivity(hc.build_d9().digraph)
        assert (rep.vertex_connectivity, rep.witness_cut) == (2, (0, 3))

    def test_d9prime_frozen(self):
        rep = vertex_connectivity(hc.build_d9_prime().digraph)
        assert (rep.vertex_connectivity, rep.witness_cut) == (2, (0, 3))

    @given(digraphs(min_n=2, max_n=6))
    def test_cut_really_disconnects(self, d):
        rep = vertex_connectivity(d)
        if rep.witness_cut in (None, ()):
            return
        rest = [v for v in range(d.n) if v not in rep.witness_cut]
        sub, _ = induced(d, rest)
        assert not is_strong(sub)

    @given(digraphs(min_n=2, max_n=5))
    def test_no_smaller_cut_exists(self, d):
        from itertools import combinations
        rep = vertex_connectivity(d)
        kappa = rep.vertex_connectivity
        if kappa == d.n - 1:
            return
        for size in range(kappa):
            for cut in combinations(range(d.n), size):
                rest = [v for v in range(d.n) if v not in cut]
                sub, _ = induced(d, rest)
                assert is_strong(sub), f"cut {cut} smaller than kappa={kappa}"

    @given(digraphs(min_n=2, max_n=6))
    def test_converse_preserves_kappa(self, d):
        a = vertex_connectivity(d).vertex_connectivity
        b = vertex_connectivity(converse(d)).vertex_connectivity
        assert a == b
