import pytest

from gpcover.graphs import connected_components, girth, graph, is_regular
from gpcover.families import (
    GpParams,
    LcfSpec,
    c_minus,
    c_plus,
    edge_classes,
    gp,
    h_graph,
    inner_cycle_count,
    lcf,
    lcf_violations,
    moebius_ladder,
)
from gpcover.covers import kronecker_cover
from gpcover.oracle import is_isomorphic


class TestGpParams:
    def test_valid(self):
        p = GpParams(5, 2)
        assert (p.n, p.k) == (5, 2)

    def test_k_equal_half_n_rejected(self):
        with pytest.raises(ValueError, match="k < n/2"):
            GpParams(4, 2)

    def test_k_above_half_n_rejected(self):
        with pytest.raises(ValueError, match="k < n/2"):
            GpParams(10, 5)

    def test_small_n_rejected(self):
        with pytest.raises(ValueError):
            GpParams(2, 1)

    def test_zero_k_rejected(self):
        with pytest.raises(ValueError):
            GpParams(7, 0)


class TestGp:
    def test_petersen_shape(self):
        g = gp(GpParams(5, 2))
        assert g.vertex_count == 10
        assert len(g.edges) == 15
        assert is_regular(g, 3)
        assert girth(g) == 5

    def test_always_cubic_on_2n(self):
        for n in range(3, 20):
            for k in range(1, (n - 1) // 2 + 1):
                g = gp(GpParams(n, k))
                assert g.vertex_count == 2 * n
                assert is_regular(g, 3)

    def test_desargues_is_cover_of_h(self):
        assert is_isomorphic(gp(GpParams(10, 3)), kronecker_cover(h_graph()))


class TestEdgeClasses:
    def test_sizes_and_partition(self):
        for nk in [(5, 2), (6, 2), (9, 4), (12, 5)]:
            p = GpParams(*nk)
            outer, inner, spokes = edge_classes(p)
            assert len(outer) == len(inner) == len(spokes) == p.n
            union = set(outer) | set(inner) | set(spokes)
            assert len(union) == 3 * p.n
            assert union == set(gp(p).edges)

    def test_6_2_inner_is_two_triangles(self):
        p = GpParams(6, 2)
        _, inner, _ = edge_classes(p)
        sub = graph(12, inner)
        comps = [c for c in connected_components(sub) if len(c) > 1]
        assert len(comps) == 2 == inner_cycle_count(p)
        assert all(len(c) == 3 for c in comps)

    def test_5_2_inner_is_pentagram(self):
        p = GpParams(5, 2)
        _, inner, _ = edge_classes(p)
        sub = graph(10, inner)
        comps = [c for c in connected_components(sub) if len(c) > 1]
        assert len(comps) == 1 == inner_cycle_count(p)
        assert len(comps[0]) == 5


class TestLcf:
    def test_k4_from_constant_two(self):
        g = lcf(LcfSpec(4, (2, 2, 2, 2)))
        assert g == gp_k4()

    def test_moebius_ladder_8(self):
        g = lcf(LcfSpec(8, (4,) * 8))
        assert g == moebius_ladder(8)
        assert is_regular(g, 3)

    def test_zero_jump_rejected(self):
        with pytest.raises(ValueError, match="zero jump"):
            lcf(LcfSpec(4, (2, 0, 2, 0)))

    def test_unit_jump_rejected(self):
        with pytest.raises(ValueError, match="ring edge|closure"):
            lcf(LcfSpec(6, (3, 1, 3, 1, 3, 1)))

    def test_closure_violation_rejected(self):
        with pytest.raises(ValueError, match="closure"):
            lcf(LcfSpec(6, (2, 2, 2, 2, 2, 2)))

    def test_odd_n_self_paired_rejected(self):
        spec = LcfSpec(5, (2, 2, 2, 2, 2))
        assert lcf_violations(spec)

    def test_valid_specs_are_cubic(self):
        for p in [GpParams(4, 1), GpParams(12, 5), GpParams(20, 9), GpParams(24, 7)]:
            spec = c_plus(p) if p.k % 4 == 1 else c_minus(p)
            g = lcf(spec)
            assert g.vertex_count == p.n
            assert len(g.edges) == 3 * p.n // 2
            assert is_regular(g, 3)

    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError, match="jumps"):
            LcfSpec(4, (2, 2))


def gp_k4():
    return graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])


class TestCPlusMinus:
    def test_c_plus_4_1(self):
        spec = c_plus(GpParams(4, 1))
        assert spec.jumps == (2, 2, 2, 2)
        assert lcf(spec) == gp_k4()

    def test_c_plus_12_5(self):
        assert c_plus(GpParams(12, 5)).jumps == (6, 10, 2) * 4

    def test_c_minus_8_3_degenerate(self):
        spec = c_minus(GpParams(8, 3))
        assert spec.jumps == (4, 0, 4, 0, 4, 0, 4, 0)
        assert any("zero jump" in v for v in lcf_violations(spec))
        with pytest.raises(ValueError, match="zero jump"):
            lcf(spec)

    def test_odd_n_rejected(self):
        with pytest.raises(ValueError, match="even"):
            c_plus(GpParams(5, 2))
        with pytest.raises(ValueError, match="even"):
            c_minus(GpParams(5, 2))

    def test_c_plus_n_1_is_moebius_ladder(self):
        for n in (4, 8, 12, 16):
            assert lcf(c_plus(GpParams(n, 1))) == moebius_ladder(n)

    def test_c_minus_24_7(self):
        spec = c_minus(GpParams(24, 7))
        assert spec.jumps[:4] == (12, 4, 20, 12)
        assert not lcf_violations(spec)


class TestHGraph:
    def test_shape(self):
        h = h_graph()
        assert h.vertex_count == 10
        assert len(h.edges) == 15
        assert is_regular(h, 3)
        assert girth(h) == 3

    def test_cover_is_desargues(self):
        assert is_isomorphic(kronecker_cover(h_graph()), gp(GpParams(10, 3)))

    def test_not_petersen(self):
        assert not is_isomorphic(h_graph(), gp(GpParams(5, 2)))
