"""The d = 2 product as a sum over orientations of a complete bipartite graph.

Take one node per part of mu on the left and one per part of nu on the right,
and orient each of the n*k edges independently.  Every orientation contributes
a single term: each part grows by the indegree of its node, the key is the
sorted concatenation, and the coefficient is (-q) to the number of edges
pointing left.  Summing over all 2**(n*k) orientations reproduces the d = 2
partition-algebra product, which gives a fully independent oracle for it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, NamedTuple, Tuple

from .errors import ResourceLimitError
from .partition_algebra import PartitionElement, product
from .partitions import Partition, is_partition, sort_ascending, vec_add
from .qlaurent import QLaurent, signed_q_power
from .reports import CheckReport

DEFAULT_BIT_BUDGET = 24


@dataclass(frozen=True)
class OrientedBipartiteGraph:
    """One orientation of the complete bipartite graph on n + k nodes.

    Bit i*k + j of ``mask`` is set exactly when the edge between left node i
    and right node j points toward the left node.
    """

    n: int
    k: int
    mask: int

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError("node counts must be non-negative")
        if not 0 <= self.mask < 1 << (self.n * self.k):
            raise ValueError(
                "mask %d out of range for a %d x %d graph" % (self.mask, self.n, self.k)
            )

    def points_left(self, i: int, j: int) -> bool:
        return bool(self.mask >> (i * self.k + j) & 1)

    def left_indegrees(self) -> Tuple[int, ...]:
        row = (1 << self.k) - 1
        return tuple(
            ((self.mask >> (i * self.k)) & row).bit_count() for i in range(self.n)
        )

    def right_indegrees(self) -> Tuple[int, ...]:
        return tuple(
            sum(1 for i in range(self.n) if not self.points_left(i, j))
            for j in range(self.k)
        )

    def edges_toward_left(self) -> int:
        return self.mask.bit_count()


class GraphTerm(NamedTuple):
    partition: Partition
    coefficient: QLaurent


def h_of_graph(mu: Partition, nu: Partition, graph: OrientedBipartiteGraph) -> GraphTerm:
    """The single term an orientation contributes to mu * nu."""
    mu = tuple(mu)
    nu = tuple(nu)
    if len(mu) != graph.n or len(nu) != graph.k:
        raise ValueError(
            "graph is %d x %d but partitions have lengths %d and %d"
            % (graph.n, graph.k, len(mu), len(nu))
        )
    a = vec_add(mu, graph.left_indegrees())
    b = vec_add(nu, graph.right_indegrees())
    return GraphTerm(sort_ascending(a + b), signed_q_power(graph.edges_toward_left()))


def enumerate_graph_terms(
    mu: Partition, nu: Partition, max_bits: int = DEFAULT_BIT_BUDGET
) -> Iterator[Tuple[int, GraphTerm]]:
    """All (orientation id, term) pairs, ids counting up from 0."""
    mu = tuple(mu)
    nu = tuple(nu)
    if not is_partition(mu) or not is_partition(nu):
        raise ValueError("factors must be weakly increasing")
    bits = len(mu) * len(nu)
    if bits > max_bits:
        raise ResourceLimitError(
            "%d edges exceed the %d-bit orientation budget" % (bits, max_bits)
        )
    n = len(mu)
    k = len(nu)
    for mask in range(1 << bits):
        yield mask, h_of_graph(mu, nu, OrientedBipartiteGraph(n, k, mask))


def product_via_graphs(
    mu: Partition, nu: Partition, max_bits: int = DEFAULT_BIT_BUDGET
) -> PartitionElement:
    """Sum of h over every orientation; the graph-side d = 2 product."""
    out: Dict[Partition, QLaurent] = {}
    for _, term in enumerate_graph_terms(mu, nu, max_bits):
        prev = out.get(term.partition)
        out[term.partition] = term.coefficient if prev is None else prev + term.coefficient
    return {key: c for key, c in out.items() if c}


def verify_graph_model(mu: Partition, nu: Partition) -> CheckReport:
    """Graph-side product against the structure-constant product at d = 2."""
    mu = tuple(mu)
    nu = tuple(nu)
    graphs = product_via_graphs(mu, nu)
    table = product(mu, nu, 2)
    passed = graphs == table
    failures = []
    if not passed:
        failures.append(
            "graph model disagrees for mu=%r nu=%r: %r vs %r" % (mu, nu, graphs, table)
        )
    return CheckReport(
        name="graph-model %r %r" % (mu, nu),
        passed=passed,
        checked=1,
        failures=failures,
    )
