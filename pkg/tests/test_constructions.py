import pytest
from hypothesis import given, strategies as st

import hamcheck as hc
from hamcheck.constructions import (build_complete, build_d8, build_d9,
                                    build_d9_prime, h_reduction, random_digraph,
                                    random_satisfying_main)
from hamcheck.digraph import from_arcs, new_digraph, parse, serialize
from hamcheck.solver import hamiltonian_cycle, hamiltonian_path

from conftest import FIXTURES, digraphs


class TestTightnessFamily:
    def test_d8_profile(self):
        nc = build_d8()
        d, lm = nc.digraph, nc.label_map
        assert d.n == 8 and d.arc_count() == 33
        assert set(lm) == {"x1", "x2", "x3", "x4", "y1", "y2", "y3", "z"}
        totals = {name: d.degree(v) for name, v in lm.items()}
        assert totals == {"x1": 9, "x2": 12, "x3": 8, "x4": 9,
                          "y1": 8, "y2": 8, "y3": 8, "z": 4}

    def test_d9_profile(self):
        nc = build_d9()
        d, lm = nc.digraph, nc.label_map
        assert d.n == 9 and d.arc_count() == 40
        totals = {name: d.degree(v) for name, v in lm.items()}
        assert totals == {"x1": 9, "x2": 9, "x3": 12, "x4": 10, "x5": 9,
                          "y1": 9, "y2": 9, "y3": 9, "z": 4}

    def test_d9_prime_extends_d9(self):
        d9 = build_d9()
        d9p = build_d9_prime()
        lm = d9.label_map
        extra = set(d9p.digraph.arcs()) - set(d9.digraph.arcs())
        assert extra == {(lm["x3"], lm["x1"]), (lm["x5"], lm["x2"])}
        assert d9p.digraph.arc_count() == 42

    def test_fixtures_match_constructions(self):
        for name, build in (("d8", build_d8), ("d9", build_d9),
                            ("d9prime", build_d9_prime)):
            assert (FIXTURES / f"{name}.dgf").read_text() == serialize(build().digraph)

    def test_not_hamiltonian_but_nearly(self):
        for build in (build_d8, build_d9, build_d9_prime):
            d = build().digraph
            assert not hamiltonian_cycle(d).found
            assert hc.longest_cycle(d).length == d.n - 1


class TestComplete:
    def test_structure(self):
        nc = build_complete(5)
        assert nc.digraph.arc_count() == 20
        assert nc.label_map == {}
        assert nc.name == "complete:5"

    def test_order_bounds(self):
        build_complete(1)
        with pytest.raises(ValueError):
            build_complete(0)
        with pytest.raises(ValueError):
            build_complete(65)


class TestHReduction:
    def test_k4_example(self):
        nc = h_reduction(build_complete(4).digraph, 2, 0)
        d, lm = nc.digraph, nc.label_map
        assert d.n == 3
        assert lm == {"v1": 0, "v3": 1, "z": 2}
        assert hamiltonian_cycle(d).found

    def test_emptied_endpoints(self):
        # 4-cycle: out(u) minus v and in(v) minus u both empty, z isolated
        c4 = from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        nc = h_reduction(c4, 0, 1)
        z = nc.label_map["z"]
        assert nc.digraph.degree(z) == 0
        assert not hamiltonian_cycle(nc.digraph).found
        assert not hamiltonian_path(c4, 0, 1).found

    def test_validation(self):
        k4 = build_complete(4).digraph
        with pytest.raises(ValueError):
            h_reduction(k4, 1, 1)
        with pytest.raises(ValueError):
            h_reduction(new_digraph(2), 0, 1)
        with pytest.raises(ValueError):
            h_reduction(k4, 0, 4)

    @given(digraphs(min_n=3, max_n=6), st.data())
    def test_equivalence_property(self, d, data):
        u = data.draw(st.integers(0, d.n - 1))
        v = data.draw(st.integers(0, d.n - 1).filter(lambda x: x != u))
        reduced = h_reduction(d, u, v).digraph
        assert reduced.n == d.n - 1
        assert (hamiltonian_cycle(reduced).found
                == hamiltonian_path(d, u, v).found)


class TestRandomDigraph:
    def test_deterministic(self):
        assert random_digraph(7, 0.4, 123) == random_digraph(7, 0.4, 123)
        assert random_digraph(7, 0.4, 123) != random_digraph(7, 0.4, 124)

    def test_extremes(self):
        assert random_digraph(5, 0.0, 1).arc_count() == 0
        assert random_digraph(5, 1.0, 1).arc_count() == 20

    def test_p_validated(self):
        with pytest.raises(ValueError):
            random_digraph(5, 1.5, 1)
        with pytest.raises(ValueError):
            random_digraph(5, -0.1, 1)


class TestRandomSatisfyingMain:
    @pytest.mark.parametrize("n,k", [(9, 0), (10, 0), (10, 1), (12, 3)])
    def test_postcondition(self, n, k):
        for seed in range(5):
            d = random_satisfying_main(n, k, seed)
            assert hc.cond_main(d, k).holds

    def test_deterministic(self):
        assert random_satisfying_main(9, 0, 5) == random_satisfying_main(9, 0, 5)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            random_satisfying_main(8, 0, 1)
        with pytest.raises(ValueError):
            random_satisfying_main(9, -1, 1)
        with pytest.raises(ValueError):
            # degree bound n+k above the maximum possible 2(n-1)
            random_satisfying_main(9, 8, 1)

    def test_boundary_k(self):
        # n+k = 2(n-1) forces the complete digraph on the heavy vertices
        d = random_satisfying_main(9, 7, 3)
        assert hc.cond_main(d, 7).holds
