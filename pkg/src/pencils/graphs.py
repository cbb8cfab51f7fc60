"""Ground sets, bipartite edge sets, and graph-restricted operation sets.

Edges are stored as index pairs into the two ground sets (a sorted,
deduplicated uint32 array), which keeps ten-million-edge sweeps compact
while every derived quantity stays exact: the operation sets themselves
are built with Fraction arithmetic, never floats.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .errors import DomainTooSmall, ZeroDenominator

__all__ = [
    "GroundSet",
    "BipartiteGraph",
    "restricted_sum_set",
    "restricted_difference_set",
    "shifted_restricted_ratio_set",
    "neighbourhood_square_sum",
    "multiplication_table_size",
    "ford_estimate",
    "FORD_DELTA",
]


class GroundSet:
    """Ordered collection of distinct rationals with positional indexing."""

    __slots__ = ("elements", "_index")

    def __init__(self, elements):
        elems = tuple(Fraction(e) for e in elements)
        index = {e: i for i, e in enumerate(elems)}
        if len(index) != len(elems):
            raise ValueError("ground set elements must be pairwise distinct")
        self.elements = elems
        self._index = index

    @classmethod
    def from_values(cls, values) -> "GroundSet":
        """Deduplicate and sort, the deterministic order used everywhere."""
        return cls(sorted({Fraction(v) for v in values}))

    def index_of(self, value) -> int:
        return self._index[Fraction(value)]

    def __contains__(self, value):
        return Fraction(value) in self._index

    def __getitem__(self, i) -> Fraction:
        return self.elements[i]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, GroundSet) and self.elements == other.elements

    def __repr__(self):
        if len(self.elements) <= 6:
            return f"GroundSet({[str(e) for e in self.elements]})"
        return f"GroundSet(<{len(self.elements)} elements>)"


class BipartiteGraph:
    """Explicit edge set E(G) over two indexed ground sets.

    The edge array is sorted lexicographically and deduplicated, so two
    graphs with the same edges compare and serialize identically.
    """

    __slots__ = ("left", "right", "edge_array")

    def __init__(self, left: GroundSet, right: GroundSet, edges):
        self.left = left
        self.right = right
        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                         dtype=np.uint32)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("edges must be (i, j) index pairs")
        if arr.size:
            if int(arr[:, 0].max()) >= len(left) or int(arr[:, 1].max()) >= len(right):
                raise ValueError("edge index out of range")
        packed = arr[:, 0].astype(np.uint64) << np.uint64(32) | arr[:, 1].astype(np.uint64)
        packed = np.unique(packed)
        out = np.empty((packed.size, 2), dtype=np.uint32)
        out[:, 0] = (packed >> np.uint64(32)).astype(np.uint32)
        out[:, 1] = (packed & np.uint64(0xFFFFFFFF)).astype(np.uint32)
        self.edge_array = out

    @property
    def edge_count(self) -> int:
        return int(self.edge_array.shape[0])

    def iter_index_pairs(self):
        for i, j in self.edge_array.tolist():
            yield i, j

    def iter_value_pairs(self):
        lv, rv = self.left.elements, self.right.elements
        for i, j in self.edge_array.tolist():
            yield lv[i], rv[j]

    def has_edge(self, i: int, j: int) -> bool:
        packed = np.uint64(i) << np.uint64(32) | np.uint64(j)
        col = self.edge_array[:, 0].astype(np.uint64) << np.uint64(32) \
            | self.edge_array[:, 1].astype(np.uint64)
        pos = int(np.searchsorted(col, packed))
        return pos < col.size and col[pos] == packed

    def left_degrees(self) -> list[int]:
        """|N(a)| for every left element, in ground-set order."""
        if self.edge_count == 0:
            return [0] * len(self.left)
        counts = np.bincount(self.edge_array[:, 0], minlength=len(self.left))
        return [int(c) for c in counts]

    def neighbourhoods(self) -> dict[int, list[int]]:
        """Left index -> sorted list of right indices."""
        out: dict[int, list[int]] = {}
        for i, j in self.iter_index_pairs():
            out.setdefault(i, []).append(j)
        return out

    def participating_left(self) -> list[int]:
        return [int(i) for i in np.unique(self.edge_array[:, 0])]

    def participating_right(self) -> list[int]:
        return [int(j) for j in np.unique(self.edge_array[:, 1])]

    def transpose(self) -> "BipartiteGraph":
        return BipartiteGraph(self.right, self.left, self.edge_array[:, ::-1])

    def __eq__(self, other):
        return (
            isinstance(other, BipartiteGraph)
            and self.left == other.left
            and self.right == other.right
            and np.array_equal(self.edge_array, other.edge_array)
        )

    def __repr__(self):
        return (f"BipartiteGraph(|left|={len(self.left)}, "
                f"|right|={len(self.right)}, |E|={self.edge_count})")


def restricted_sum_set(graph: BipartiteGraph) -> frozenset[Fraction]:
    """{ a + b : (a, b) an edge }, deduplicated."""
    lv, rv = graph.left.elements, graph.right.elements
    return frozenset(lv[i] + rv[j] for i, j in graph.edge_array.tolist())


def restricted_difference_set(graph: BipartiteGraph) -> frozenset[Fraction]:
    """{ a - b : (a, b) an edge }, deduplicated."""
    lv, rv = graph.left.elements, graph.right.elements
    return frozenset(lv[i] - rv[j] for i, j in graph.edge_array.tolist())


def shifted_restricted_ratio_set(graph: BipartiteGraph, x=0, y=0) -> frozenset[Fraction]:
    """{ (a + x) / (b + y) : (a, b) an edge }, deduplicated.

    Raises ZeroDenominator if b + y = 0 for some b appearing on an edge;
    silently skipping edges would corrupt every downstream count.
    """
    x, y = Fraction(x), Fraction(y)
    num = [a + x for a in graph.left.elements]
    den = [b + y for b in graph.right.elements]
    for j in graph.participating_right():
        if den[j] == 0:
            raise ZeroDenominator(graph.right.elements[j])
    return frozenset(num[i] / den[j] for i, j in graph.edge_array.tolist())


def neighbourhood_square_sum(graph: BipartiteGraph) -> int:
    """Sum of |N(a)|^2 over the left ground set, exactly."""
    return sum(d * d for d in graph.left_degrees())


# Memory guard for the product sieve: the mask holds n^2 + 1 bytes.
_TABLE_SIEVE_LIMIT = 20_000


def multiplication_table_size(n: int) -> int:
    """Exact |{ a*b : 1 <= a, b <= n }| via a stride sieve over [1, n^2].

    For each a the products a*b with b >= a form the arithmetic
    progression a^2, a^2 + a, ..., a*n, so n slice assignments mark the
    whole table.
    """
    if n < 1:
        raise DomainTooSmall("multiplication table needs n >= 1")
    if n > _TABLE_SIEVE_LIMIT:
        raise ValueError(
            f"n = {n} exceeds the sieve guard ({_TABLE_SIEVE_LIMIT}); "
            f"the mask would need {n * n / 1e9:.1f} GB"
        )
    mask = np.zeros(n * n + 1, dtype=bool)
    for a in range(1, n + 1):
        mask[a * a : a * n + 1 : a] = True
    return int(np.count_nonzero(mask))


FORD_DELTA = 1.0 - (1.0 + math.log(math.log(2.0))) / math.log(2.0)  # 0.0860713...


def ford_estimate(n: int) -> float:
    """Asymptotic model n / ((ln n)^delta (ln ln n)^(3/2)) for the table size.

    Advisory only: the asymptotic hides unknown constants, so this value
    is reported but never asserted against exact counts.  The only float
    in the system.
    """
    if n < 16:
        raise DomainTooSmall("ford_estimate needs n >= 16 so ln ln n > 0")
    ln = math.log(n)
    return n / (ln ** FORD_DELTA * math.log(ln) ** 1.5)
