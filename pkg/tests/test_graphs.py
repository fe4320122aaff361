import io

import pytest

from ringsombor.graphs import (
    TOTAL,
    UNIT,
    EdgePartition,
    Graph,
    circulant_graph,
    complement,
    complete_graph,
    degree_pair,
    edge_partition_of,
    predicted_degrees,
    total_graph,
    unit_graph,
    write_edge_list,
)
from ringsombor.rings import FiniteRing, TruncatedPolyRing, ZnRing, euler_phi


def naive_sum_graph(ring, want_unit):
    # reference construction: literal pair loop over ring.add / ring.is_unit
    n = ring.order
    rows = [0] * n
    for x in range(n):
        for y in range(x + 1, n):
            if ring.is_unit(ring.add(x, y)) == want_unit:
                rows[x] |= 1 << y
                rows[y] |= 1 << x
    return Graph(n, rows)


class PlainZn(FiniteRing):
    # minimal ring exercising the generic construction path
    def __init__(self, n):
        self.order = n
        self.one_index = 1

    def add(self, x, y):
        return (x + y) % self.order

    def is_unit(self, x):
        import math

        return math.gcd(x, self.order) == 1

    @property
    def is_local(self):
        return False

    @property
    def name(self):
        return f"plain_{self.order}"


class TestBuilders:
    def test_total_z2_has_no_edges(self):
        g, _ = total_graph(ZnRing(2))
        assert g.edge_count == 0

    def test_total_z4(self):
        g, _ = total_graph(ZnRing(4))
        assert sorted(g.edges()) == [(0, 2), (1, 3)]
        assert g.degrees == (1, 1, 1, 1)

    def test_total_z9(self):
        g, cls = total_graph(ZnRing(9))
        zset = [v for v in range(9) if not cls.is_unit(v)]
        assert zset == [0, 3, 6]
        for u in zset:
            for v in zset:
                if u != v:
                    assert g.has_edge(u, v)
        for v in range(9):
            if cls.is_unit(v):
                assert g.degree(v) == 3

    def test_unit_z2_single_edge(self):
        g, _ = unit_graph(ZnRing(2))
        assert list(g.edges()) == [(0, 1)]

    def test_unit_z5(self):
        g, _ = unit_graph(ZnRing(5))
        assert g.edge_count == 8
        assert g.degree(0) == 4
        assert all(g.degree(v) == 3 for v in range(1, 5))

    def test_unit_z4_is_four_cycle(self):
        g, _ = unit_graph(ZnRing(4))
        assert sorted(g.edges()) == [(0, 1), (0, 3), (1, 2), (2, 3)]

    @pytest.mark.parametrize("n", [2, 3, 4, 9, 12, 15, 16, 25, 45, 60])
    def test_zn_matches_naive(self, n):
        ring = ZnRing(n)
        for want_unit, builder in ((False, total_graph), (True, unit_graph)):
            g, _ = builder(ring)
            g.validate()
            assert g == naive_sum_graph(ring, want_unit)

    @pytest.mark.parametrize("p,k", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1)])
    def test_poly_matches_naive(self, p, k):
        ring = TruncatedPolyRing(p, k)
        for want_unit, builder in ((False, total_graph), (True, unit_graph)):
            g, _ = builder(ring)
            g.validate()
            assert g == naive_sum_graph(ring, want_unit)

    @pytest.mark.parametrize("n", [5, 12, 30])
    def test_generic_path_matches_naive(self, n):
        ring = PlainZn(n)
        for want_unit, builder in ((False, total_graph), (True, unit_graph)):
            g, _ = builder(ring)
            assert g == naive_sum_graph(ring, want_unit)

    def test_classes_match_ring(self):
        ring = ZnRing(45)
        _, cls = total_graph(ring)
        assert cls.unit_count == euler_phi(45)
        assert cls.zero_count == 45 - euler_phi(45)


class TestComplement:
    def test_complete_complement_is_empty(self):
        g = complement(complete_graph(6))
        assert g.edge_count == 0

    def test_c5_self_complementary(self):
        c5 = circulant_graph(5, [1])
        assert complement(c5).degrees == c5.degrees
        assert complement(complement(c5)) == c5

    def test_unit_total_duality(self):
        for n in range(2, 80):
            ring = ZnRing(n)
            tg, _ = total_graph(ring)
            ug, _ = unit_graph(ring)
            assert complement(tg) == ug

    def test_degrees_flip(self):
        g, _ = total_graph(ZnRing(15))
        gc = complement(g)
        assert all(a + b == 14 for a, b in zip(g.degrees, gc.degrees))


class TestGenerators:
    def test_complete_graph(self):
        assert complete_graph(1).edge_count == 0
        g = complete_graph(4)
        assert g.edge_count == 6
        assert set(g.degrees) == {3}
        assert complete_graph(5).edge_count == 10

    def test_complete_rejects_zero(self):
        with pytest.raises(ValueError):
            complete_graph(0)

    def test_circulant_c5(self):
        g = circulant_graph(5, [1])
        assert set(g.degrees) == {2}
        assert g.edge_count == 5

    def test_circulant_half_offset(self):
        g = circulant_graph(6, [1, 3])
        g.validate()
        assert set(g.degrees) == {3}

    def test_circulant_8_12(self):
        g = circulant_graph(8, [1, 2])
        assert set(g.degrees) == {4}
        assert g.edge_count == 16

    def test_circulant_rejects_bad_offsets(self):
        with pytest.raises(ValueError):
            circulant_graph(6, [0])
        with pytest.raises(ValueError):
            circulant_graph(6, [4])

    def test_circulant_empty_offsets(self):
        assert circulant_graph(5, []).edge_count == 0


class TestDegreePredictions:
    def test_examples(self):
        assert predicted_degrees(ZnRing(15), TOTAL) == (6, 7)
        assert predicted_degrees(ZnRing(8), UNIT) == (4, 4)
        assert predicted_degrees(ZnRing(9), UNIT) == (6, 5)

    def test_degree_pair_raw(self):
        assert degree_pair(TOTAL, 8, 4, False) == (3, 3)
        with pytest.raises(ValueError):
            degree_pair("loops", 8, 4, False)

    @pytest.mark.parametrize("n", range(2, 101))
    def test_predictions_hold_on_zn(self, n):
        ring = ZnRing(n)
        for kind, builder in ((TOTAL, total_graph), (UNIT, unit_graph)):
            g, cls = builder(ring)
            d_zero, d_unit = predicted_degrees(ring, kind)
            for v in range(n):
                assert g.degree(v) == (d_unit if cls.is_unit(v) else d_zero)

    @pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (5, 2), (7, 1)])
    def test_predictions_hold_on_poly(self, p, k):
        ring = TruncatedPolyRing(p, k)
        for kind, builder in ((TOTAL, total_graph), (UNIT, unit_graph)):
            g, cls = builder(ring)
            d_zero, d_unit = predicted_degrees(ring, kind)
            for v in range(ring.order):
                assert g.degree(v) == (d_unit if cls.is_unit(v) else d_zero)


class TestEdgePartition:
    def test_total_z15(self):
        g, cls = total_graph(ZnRing(15))
        assert edge_partition_of(g, cls) == EdgePartition(13, 16, 20)

    def test_unit_z5(self):
        g, cls = unit_graph(ZnRing(5))
        assert edge_partition_of(g, cls) == EdgePartition(0, 4, 4)

    def test_total_z2_empty(self):
        g, cls = total_graph(ZnRing(2))
        assert edge_partition_of(g, cls) == EdgePartition(0, 0, 0)

    def test_partition_totals_match_edge_count(self):
        for n in (12, 15, 45, 64, 77):
            ring = ZnRing(n)
            for builder in (total_graph, unit_graph):
                g, cls = builder(ring)
                assert edge_partition_of(g, cls).total == g.edge_count

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            EdgePartition(-1, 0, 0)


class TestGraphBasics:
    def test_handshake(self):
        for n in (2, 9, 15, 45):
            g, _ = total_graph(ZnRing(n))
            assert sum(g.degrees) == 2 * g.edge_count

    def test_edges_lexicographic(self):
        g, _ = unit_graph(ZnRing(9))
        es = list(g.edges())
        assert es == sorted(es)
        assert all(u < v for u, v in es)

    def test_row_count_checked(self):
        with pytest.raises(ValueError):
            Graph(3, [0, 0])

    def test_validate_catches_asymmetry(self):
        g = Graph(2, [0b10, 0b00])
        with pytest.raises(AssertionError):
            g.validate()

    def test_validate_catches_self_loop(self):
        g = Graph(2, [0b01, 0b00])
        with pytest.raises(AssertionError):
            g.validate()

    def test_edge_list_export(self):
        g, _ = total_graph(ZnRing(4))
        buf = io.StringIO()
        write_edge_list(g, buf)
        assert buf.getvalue() == "p edge 4 2\ne 1 3\ne 2 4\n"
