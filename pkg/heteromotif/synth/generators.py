"""
Seeded random graphs and node type assignment.

Both generators return single-typed graphs; ``assign_types_uniform()``
then spreads ``L`` types evenly over the nodes. Everything is
deterministic given the seed.
"""

from dataclasses import dataclass

import networkx as nx
import numpy as np

from heteromotif.conf import settings
from heteromotif.core.exceptions import ContractViolation
from heteromotif.graphs.models import HeteroGraph

MODELS = ("er", "cl")


def from_networkx(nx_graph):
    """
    Converts a networkx graph on nodes ``0..n-1`` into a single-typed
    ``HeteroGraph``, keeping isolated nodes.
    """
    n = nx_graph.number_of_nodes()
    edges = [(u, v) for u, v in nx_graph.edges() if u != v]
    return HeteroGraph.from_edges(n, edges, np.ones(n, dtype=np.int64))


def gen_er(n, p, seed=None):
    """
    Erdos-Renyi ``G(n, p)`` graph. Raises ``GraphFormatError`` when the
    sample has no edges at all.
    """
    if n < 2:
        raise ContractViolation("Need at least 2 nodes, got %s" % n)
    if not 0 <= p <= 1:
        raise ContractViolation("Edge probability must be in [0, 1], got %s" % p)
    seed = settings.SYNTH_DEFAULT_SEED if seed is None else seed
    return from_networkx(nx.fast_gnp_random_graph(n, p, seed=seed))


def power_law_weights(n, exponent, avg_degree):
    """
    Expected degrees ``w_i`` proportional to
    ``(i + 1) ** (-1 / (exponent - 1))`` and scaled to the given mean,
    giving a degree distribution with a power-law tail of the given
    exponent.
    """
    if exponent <= 1:
        raise ContractViolation("The exponent must exceed 1, got %s" % exponent)
    if avg_degree <= 0:
        raise ContractViolation("The average degree must be positive")
    weights = np.arange(1, n + 1, dtype=np.float64) ** (-1.0 / (exponent - 1))
    return weights * (avg_degree / weights.mean())


def gen_chung_lu(n, weights=None, exponent=None, avg_degree=None, seed=None):
    """
    Chung-Lu graph: each node pair ``(u, v)`` is an edge independently
    with probability ``min(1, w_u * w_v / sum(w))``. Either explicit
    ``weights`` or an ``exponent`` and ``avg_degree`` for
    ``power_law_weights()`` must be given.
    """
    if weights is None:
        if exponent is None or avg_degree is None:
            raise ContractViolation("Give either weights, or exponent and avg_degree")
        weights = power_law_weights(n, exponent, avg_degree)
    weights = np.asarray(weights, dtype=np.float64)
    if len(weights) != n or n < 2:
        raise ContractViolation("Need one weight per node and at least 2 nodes")
    if weights.min() <= 0:
        raise ContractViolation("Weights must be positive")
    seed = settings.SYNTH_DEFAULT_SEED if seed is None else seed
    nx_graph = nx.expected_degree_graph(weights.tolist(), seed=seed, selfloops=False)
    return from_networkx(nx_graph)


def assign_types_uniform(graph, num_types, seed=None):
    """
    Returns the graph with ``num_types`` types assigned at random, every
    type getting ``N // L`` nodes and the first ``N % L`` types one more.
    """
    n = graph.num_nodes
    if not 1 <= num_types <= n:
        raise ContractViolation(
            "Need between 1 and %s types for %s nodes, got %s" % (n, n, num_types)
        )
    seed = settings.SYNTH_DEFAULT_SEED if seed is None else seed
    sizes = np.full(num_types, n // num_types)
    sizes[: n % num_types] += 1
    types = np.repeat(np.arange(1, num_types + 1), sizes)
    rng = np.random.default_rng(seed)
    labels = graph.type_labels if num_types == graph.num_node_types else None
    return graph.with_types(rng.permutation(types), labels)


@dataclass(frozen=True)
class GenSpec:
    """
    Everything needed to regenerate a synthetic typed graph.
    """

    model: str
    n: int
    p: float = None
    exponent: float = None
    avg_degree: float = None
    num_types: int = 1
    seed: int = None

    def __post_init__(self):
        if self.n < 2:
            raise ContractViolation("Need at least 2 nodes, got %s" % self.n)
        if self.num_types < 1:
            raise ContractViolation("Need at least one type")
        if self.model not in MODELS:
            raise ContractViolation(
                "Unknown model %r, choose from %s" % (self.model, ", ".join(MODELS))
            )
        if self.model == "er" and self.p is None:
            if self.avg_degree is None:
                raise ContractViolation("ER graphs need p or avg_degree")
            object.__setattr__(self, "p", min(1.0, self.avg_degree / (self.n - 1)))

    def build(self):
        seed = settings.SYNTH_DEFAULT_SEED if self.seed is None else self.seed
        if self.model == "er":
            graph = gen_er(self.n, self.p, seed)
        else:
            graph = gen_chung_lu(
                self.n, exponent=self.exponent, avg_degree=self.avg_degree, seed=seed
            )
        return assign_types_uniform(graph, self.num_types, seed)
