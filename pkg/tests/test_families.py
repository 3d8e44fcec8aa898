import pytest

from edgediscrim import (
    complete_bipartite_weight,
    complete_r_partite,
    complete_uniform,
    cycle,
    disjoint_edges,
    edge_weight,
    exact_optimal,
    nested_chain,
    path,
    path_end_two,
    power_set,
    star,
    validate_discriminator,
)


def edge_weights(hg, lab):
    return [edge_weight(hg, lab, i) for i in range(1, hg.n + 1)]


class TestNestedChain:
    @pytest.mark.parametrize("n,weight", [(1, 1), (3, 3), (5, 5)])
    def test_weight(self, n, weight):
        hg, lab, w = nested_chain(n)
        assert w == weight and validate_discriminator(hg, lab).ok

    def test_edge_weights_count_up(self):
        hg, lab, _ = nested_chain(3)
        assert edge_weights(hg, lab) == [1, 2, 3]


class TestDisjoint:
    @pytest.mark.parametrize("n,weight", [(1, 1), (3, 6), (6, 21)])
    def test_weight(self, n, weight):
        hg, lab, w = disjoint_edges(n)
        assert w == weight and validate_discriminator(hg, lab).ok


class TestStar:
    @pytest.mark.parametrize("n,weight", [(1, 1), (3, 4), (5, 11)])
    def test_weight(self, n, weight):
        hg, lab, w = star(n)
        assert w == weight == n * (n - 1) // 2 + 1
        assert validate_discriminator(hg, lab).ok


class TestPowerSet:
    @pytest.mark.parametrize("m,weight", [(1, 1), (3, 7), (4, 15)])
    def test_weight(self, m, weight):
        hg, lab, w = power_set(m)
        assert w == weight == 2**m - 1
        assert validate_discriminator(hg, lab).ok

    def test_binary_labels(self):
        _, lab, _ = power_set(3)
        assert sorted(lab.values.values()) == [1, 2, 4]

    def test_subset_sums_all_distinct(self):
        hg, lab, _ = power_set(4)
        sums = edge_weights(hg, lab)
        assert sorted(sums) == list(range(1, 16))


class TestPath:
    def test_m4_trace(self):
        hg, lab, w = path(4)
        assert [lab.get(f"v{i}") for i in range(1, 5)] == [0, 1, 2, 0]
        assert edge_weights(hg, lab) == [1, 3, 2] and w == 3

    def test_m5(self):
        hg, lab, w = path(5)
        assert w == 5
        assert lab.get("v1") == 0 and lab.get("v5") == 0
        assert sorted(edge_weights(hg, lab)) == [1, 2, 3, 4]

    def test_m6_trace(self):
        hg, lab, w = path(6)
        assert [lab.get(f"v{i}") for i in range(1, 7)] == [0, 1, 2, 3, 1, 1]
        assert edge_weights(hg, lab) == [1, 3, 5, 4, 2] and w == 8

    @pytest.mark.parametrize("m", range(2, 26))
    def test_postconditions_all_residues(self, m):
        hg, lab, w = path(m)
        assert validate_discriminator(hg, lab).ok
        assert w == -(-(m * (m - 1)) // 4)
        assert sorted(edge_weights(hg, lab)) == list(range(1, m))
        ends = (lab.get("v1"), lab.get(f"v{m}"))
        assert ends == ((0, 0) if m % 4 in (0, 1) else (0, 1))

    def test_too_short(self):
        with pytest.raises(ValueError):
            path(1)


class TestPathEndTwo:
    @pytest.mark.parametrize(
        "m,labels",
        [(4, [0, 1, 1, 2]), (5, [0, 1, 1, 2, 2])],
    )
    def test_base_cases(self, m, labels):
        hg, lab, w = path_end_two(m)
        assert [lab.get(f"v{i}") for i in range(1, m + 1)] == labels
        assert sorted(edge_weights(hg, lab)) == list(range(1, m))
        assert w == m * (m - 1) // 4 + 1

    @pytest.mark.parametrize("m", [4, 5, 8, 9, 12, 13, 16, 17, 20, 21])
    def test_postconditions(self, m):
        hg, lab, w = path_end_two(m)
        assert validate_discriminator(hg, lab).ok
        assert (lab.get("v1"), lab.get(f"v{m}")) == (0, 2)
        assert sorted(edge_weights(hg, lab)) == list(range(1, m))
        assert w == m * (m - 1) // 4 + 1

    def test_m8_weight(self):
        assert path_end_two(8)[2] == 15

    @pytest.mark.parametrize("m", [3, 6, 7, 11])
    def test_wrong_residue_rejected(self, m):
        with pytest.raises(ValueError):
            path_end_two(m)


class TestCycle:
    @pytest.mark.parametrize("m,weight", [(3, 3), (4, 5), (5, 8)])
    def test_weight(self, m, weight):
        hg, lab, w = cycle(m)
        assert w == weight and validate_discriminator(hg, lab).ok

    @pytest.mark.parametrize("m", range(3, 24))
    def test_postconditions_all_residues(self, m):
        hg, lab, w = cycle(m)
        assert validate_discriminator(hg, lab).ok
        assert w == -(-(m * (m + 1)) // 4)
        if m % 4 in (0, 3):
            assert sorted(edge_weights(hg, lab)) == list(range(1, m + 1))

    def test_too_short(self):
        with pytest.raises(ValueError):
            cycle(2)


class TestCompleteRPartite:
    def test_two_by_two(self):
        hg, lab, w = complete_r_partite((2, 2))
        assert w == 5
        assert [lab.get(v) for v in ("1.1", "1.2")] == [0, 1]
        assert [lab.get(v) for v in ("2.1", "2.2")] == [1, 3]
        assert sorted(edge_weights(hg, lab)) == [1, 2, 3, 4]

    def test_three_parts(self):
        _, _, w = complete_r_partite((2, 2, 2))
        assert w == 2 + (2 + 4 + 8) // 2 == 9

    @pytest.mark.parametrize("m,r", [(2, 2), (2, 3), (3, 2)])
    def test_equal_parts_closed_form(self, m, r):
        _, _, w = complete_r_partite((m,) * r)
        assert w == m * (m**r + 1) // 2

    @pytest.mark.parametrize("sizes", [(2, 2), (3, 2), (3, 3), (2, 2, 2), (4, 3, 2)])
    def test_edge_sums_sweep_one_to_n(self, sizes):
        hg, lab, w = complete_r_partite(sizes)
        assert validate_discriminator(hg, lab).ok
        assert sorted(edge_weights(hg, lab)) == list(range(1, hg.n + 1))

    @pytest.mark.parametrize("p,q", [(2, 2), (3, 2), (3, 3)])
    def test_bipartite_closed_form(self, p, q):
        assert complete_r_partite((p, q))[2] == complete_bipartite_weight(p, q)

    def test_unsorted_sizes_rejected(self):
        with pytest.raises(ValueError, match="non-increasing"):
            complete_r_partite((2, 3))

    def test_single_part_is_disjoint_edges(self):
        _, _, w = complete_r_partite((4,))
        assert w == disjoint_edges(4)[2]


class TestOracleAgreement:
    """The exact solver independently confirms each family's optimality."""

    @pytest.mark.parametrize("n", range(1, 7))
    def test_nested(self, n):
        hg, _, w = nested_chain(n)
        assert exact_optimal(hg).optimal_weight == w

    @pytest.mark.parametrize("n", range(1, 6))
    def test_disjoint(self, n):
        hg, _, w = disjoint_edges(n)
        assert exact_optimal(hg).optimal_weight == w

    @pytest.mark.parametrize("n", range(1, 6))
    def test_star(self, n):
        hg, _, w = star(n)
        assert exact_optimal(hg).optimal_weight == w

    @pytest.mark.parametrize("sizes", [(2, 2), (3, 2), (2, 2, 2)])
    def test_r_partite(self, sizes):
        hg, _, w = complete_r_partite(sizes)
        assert exact_optimal(hg).optimal_weight == w


class TestCompleteUniform:
    def test_edge_count(self):
        assert complete_uniform(4, 2).n == 6
        assert complete_uniform(5, 3).n == 10

    def test_uniform_sizes(self):
        hg = complete_uniform(5, 3)
        assert all(len(e) == 3 for e in hg.edges)

    def test_bad_order(self):
        with pytest.raises(ValueError):
            complete_uniform(2, 3)
