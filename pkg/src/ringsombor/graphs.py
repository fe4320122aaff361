"""Simple undirected graphs on ring element sets.

Adjacency is stored as one Python-int bitmask per vertex, which keeps the
pairwise sum tests bit-parallel and makes popcount-style edge counting cheap
up to the default vertex ceiling of 2**14.  Edge iteration order is
lexicographic (u < v ascending), and report writers rely on that for
reproducible output.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import FiniteRing, TruncatedPolyRing, ZnRing

TOTAL = "total"
UNIT = "unit"
GRAPH_KINDS = (TOTAL, UNIT)


def _full_mask(n: int) -> int:
    return (1 << n) - 1


class Graph:
    """Immutable simple graph on vertices 0..n-1.

    rows[u] has bit v set iff uv is an edge; no self-loops, symmetric.
    """

    __slots__ = ("n", "rows", "_degrees")

    def __init__(self, n: int, rows):
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        self.n = n
        self.rows = list(rows)
        self._degrees = None

    @property
    def degrees(self) -> tuple[int, ...]:
        if self._degrees is None:
            self._degrees = tuple(row.bit_count() for row in self.rows)
        return self._degrees

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return (self.rows[u] >> v) & 1 == 1

    def neighbors_mask(self, v: int) -> int:
        return self.rows[v]

    def edges(self):
        """Yield edges (u, v) with u < v, ascending in u then v."""
        for u in range(self.n):
            rest = self.rows[u] >> (u + 1)
            base = u + 1
            while rest:
                low = rest & -rest
                yield (u, base + low.bit_length() - 1)
                rest ^= low

    def degree_class_masks(self) -> dict[int, int]:
        """Bitmask of vertices per degree value."""
        masks: dict[int, int] = {}
        for v, d in enumerate(self.degrees):
            masks[d] = masks.get(d, 0) | (1 << v)
        return masks

    def validate(self):
        """Check simplicity and symmetry; meant for tests."""
        for u in range(self.n):
            if (self.rows[u] >> u) & 1:
                raise AssertionError(f"self-loop at {u}")
            if self.rows[u] >> self.n:
                raise AssertionError(f"row {u} has bits beyond vertex range")
        for u in range(self.n):
            row = self.rows[u]
            v = 0
            while row:
                if row & 1 and not (self.rows[v] >> u) & 1:
                    raise AssertionError(f"asymmetric edge {u}-{v}")
                row >>= 1
                v += 1

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        return f"<Graph n={self.n} m={self.edge_count}>"


@dataclass(frozen=True)
class VertexClass:
    """Partition of the vertex set into zero-divisors and units."""

    n: int
    unit_mask: int

    @property
    def zero_mask(self) -> int:
        return _full_mask(self.n) ^ self.unit_mask

    def is_unit(self, v: int) -> bool:
        return (self.unit_mask >> v) & 1 == 1

    @property
    def unit_count(self) -> int:
        return self.unit_mask.bit_count()

    @property
    def zero_count(self) -> int:
        return self.n - self.unit_count


@dataclass(frozen=True)
class EdgePartition:
    """Edge counts by endpoint class: alpha zero-zero, beta zero-unit,
    gamma unit-unit."""

    alpha: int
    beta: int
    gamma: int

    def __post_init__(self):
        if min(self.alpha, self.beta, self.gamma) < 0:
            raise ValueError(f"negative edge count in {self}")

    @property
    def total(self) -> int:
        return self.alpha + self.beta + self.gamma


def _rotate_toward_zero(mask: int, shift: int, n: int):
    """Cyclic shift of an n-bit mask so output bit i is input bit (i+shift) mod n."""
    shift %= n
    if shift == 0:
        return mask
    return ((mask >> shift) | (mask << (n - shift))) & _full_mask(n)


def _zn_sum_rows(n: int, target_mask: int) -> list[int]:
    # Row x collects every y with (x+y) mod n in the target set; for the
    # cyclic ring that is the target mask rotated by x.
    rows = []
    for x in range(n):
        rows.append(_rotate_toward_zero(target_mask, x, n) & ~(1 << x))
    return rows


def _poly_sum_rows(ring: TruncatedPolyRing, want_unit: bool) -> list[int]:
    # x+y is a unit iff the constant coefficients do not cancel mod p, and
    # the index blocks of size p^(k-1) group elements by constant coefficient.
    p, lead, n = ring.p, ring.lead, ring.order
    full = _full_mask(n)
    block = _full_mask(lead)
    rows = []
    for x in range(n):
        cancel = block << ((-(x // lead)) % p * lead)
        row = (full ^ cancel) if want_unit else cancel
        rows.append(row & ~(1 << x))
    return rows


def _generic_sum_rows(ring: FiniteRing, want_unit: bool) -> list[int]:
    n = ring.order
    rows = [0] * n
    for x in range(n):
        for y in range(x + 1, n):
            if ring.is_unit(ring.add(x, y)) == want_unit:
                rows[x] |= 1 << y
                rows[y] |= 1 << x
    return rows


def _sum_graph(ring: FiniteRing, want_unit: bool) -> tuple[Graph, VertexClass]:
    n = ring.order
    units = ring.unit_mask()
    if isinstance(ring, ZnRing):
        target = units if want_unit else _full_mask(n) ^ units
        rows = _zn_sum_rows(n, target)
    elif isinstance(ring, TruncatedPolyRing):
        rows = _poly_sum_rows(ring, want_unit)
    else:
        rows = _generic_sum_rows(ring, want_unit)
    return Graph(n, rows), VertexClass(n, units)


def total_graph(ring: FiniteRing) -> tuple[Graph, VertexClass]:
    """Graph on the ring elements with x ~ y iff x + y is a zero-divisor
    (0 included)."""
    return _sum_graph(ring, want_unit=False)


def unit_graph(ring: FiniteRing) -> tuple[Graph, VertexClass]:
    """Graph on the ring elements with x ~ y iff x + y is a unit."""
    return _sum_graph(ring, want_unit=True)


def complement(g: Graph) -> Graph:
    full = _full_mask(g.n)
    return Graph(g.n, [row ^ full ^ (1 << v) for v, row in enumerate(g.rows)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"need at least one vertex, got {n}")
    full = _full_mask(n)
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def circulant_graph(n: int, offsets) -> Graph:
    """Vertex i adjacent to (i +/- s) mod n for each offset s in 1..n//2."""
    if n < 1:
        raise ValueError(f"need at least one vertex, got {n}")
    offs = sorted(set(offsets))
    base = 0
    for s in offs:
        if not 1 <= s <= n // 2:
            raise ValueError(f"offset {s} outside 1..{n // 2}")
        base |= (1 << s) | (1 << (n - s) % n)
    rows = []
    full = _full_mask(n)
    for i in range(n):
        if i == 0:
            rows.append(base)
        else:
            rows.append(((base << i) | (base >> (n - i))) & full)
    return Graph(n, rows)


def degree_pair(kind: str, order: int, unit_count: int, two_is_unit: bool):
    """Predicted (zero-divisor degree, unit degree) for a sum graph.

    Total graph: everyone has degree order-unit_count-1, except that when 2
    is a unit the units gain one.  Unit graph: everyone has degree
    unit_count, except that when 2 is a unit the units lose one.
    """
    if kind == TOTAL:
        d = order - unit_count - 1
        return (d, d + 1) if two_is_unit else (d, d)
    if kind == UNIT:
        u = unit_count
        return (u, u - 1) if two_is_unit else (u, u)
    raise ValueError(f"unknown graph kind {kind!r}")


def predicted_degrees(ring_or_spec, kind: str):
    """degree_pair applied to anything carrying order/unit_count/two_is_unit."""
    r = ring_or_spec
    return degree_pair(kind, r.order, r.unit_count, r.two_is_unit)


def edge_partition_of(g: Graph, classes: VertexClass) -> EdgePartition:
    """Count edges by endpoint class membership."""
    zm = classes.zero_mask
    um = classes.unit_mask
    two_alpha = 0
    beta = 0
    two_gamma = 0
    for v in range(g.n):
        row = g.rows[v]
        if (um >> v) & 1:
            two_gamma += (row & um).bit_count()
        else:
            two_alpha += (row & zm).bit_count()
            beta += (row & um).bit_count()
    return EdgePartition(two_alpha // 2, beta, two_gamma // 2)


def write_edge_list(g: Graph, fh):
    """DIMACS-like edge list: 'p edge n m' then 'e u v' lines, 1-indexed."""
    fh.write(f"p edge {g.n} {g.edge_count}\n")
    for u, v in g.edges():
        fh.write(f"e {u + 1} {v + 1}\n")
