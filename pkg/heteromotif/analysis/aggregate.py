"""
Aggregation of per-edge orbit counts into graphlet-level and global
counts, and the summaries computed from them.

Every instance of a graphlet ``H`` is seen once from each of its
``|E(H)|`` edges, so summing a typed graphlet's per-edge counts over
all edges and dividing by ``|E(H)|`` gives its frequency in the graph.
A sum that doesn't divide evenly means the per-edge counts are wrong.
"""

from math import comb
from typing import NamedTuple

import numpy as np

from heteromotif.analysis.models import GlobalCounts, MotifDistribution
from heteromotif.core.exceptions import ContractViolation, InternalConsistencyError
from heteromotif.motifs import GRAPHLETS, Graphlet, edge_count, node_count
from heteromotif.motifs.codec import decode, describe, graphlet_key
from heteromotif.motifs.engine import EdgeLocalCounts

# Graphlet classes covered by the summaries, every connected graphlet
# on 3 or 4 nodes.
SUMMARY_GRAPHLETS = tuple(g for g in Graphlet if node_count(g) > 2)


def orbits_to_graphlets(edge_counts):
    """
    Rolls the orbit counts of one edge up to graphlet counts, summing
    the orbits of the same graphlet and types. The 4-path gathers its
    edge and center orbits, the tailed triangle its three orbits and
    the chordal cycle its two.
    """
    out = EdgeLocalCounts(edge_counts.edge_id)
    for key, count in edge_counts.counts.items():
        out.update(graphlet_key(key), count)
    return out


def _edge_counts(counts):
    """
    Per-edge counts from either a ``MotifCounts`` result or a plain
    iterable of ``EdgeLocalCounts``, along with the graph if known.
    """
    graph = getattr(counts, "graph", None)
    edges = getattr(counts, "edges", counts)
    return edges, graph


def global_counts(counts):
    """
    Global typed graphlet frequencies from per-edge counts, given at
    either orbit or graphlet level.
    """
    edges, graph = _edge_counts(counts)
    sums = {}
    for edge in edges:
        for key, count in edge.counts.items():
            key = graphlet_key(key)
            sums[key] = sums.get(key, 0) + count

    totals = {}
    for key, total in sums.items():
        graphlet, _ = decode(key)
        num_edges = edge_count(graphlet)
        frequency, remainder = divmod(total, num_edges)
        if remainder:
            raise InternalConsistencyError(
                "Edge-summed count %s of %s isn't divisible by its %s edges"
                % (total, describe(key), num_edges)
            )
        totals[key] = frequency

    if graph is None:
        return GlobalCounts(totals)
    return GlobalCounts(
        totals,
        num_nodes=graph.num_nodes,
        num_edges=graph.num_edges,
        num_types=graph.num_node_types,
    )


def typed_distribution(gc, graphlet):
    """
    The distribution of a graphlet's frequency over its typed variants.
    """
    return MotifDistribution.from_counts(graphlet, gc.variants(graphlet))


def entropy(distribution):
    """
    Shannon entropy in bits of a ``MotifDistribution`` or of a plain
    probability vector, with ``0 * log(0)`` taken as 0.
    """
    p = getattr(distribution, "p", distribution)
    p = np.asarray(p, dtype=np.float64)
    if len(p) == 0:
        return 0.0
    if p.min() < 0 or abs(p.sum() - 1.0) > 1e-9:
        raise ContractViolation("Entropy needs a normalized distribution")
    nonzero = p[p > 0]
    return float(-np.sum(nonzero * np.log2(nonzero)) + 0.0)


def num_possible_typed(k, num_types):
    """
    Number of typed variants of a graphlet on ``k`` nodes with
    ``num_types`` node types, ie the number of multisets of size ``k``.
    """
    if k < 1 or num_types < 1:
        raise ContractViolation(
            "Need k >= 1 and at least one type, got k=%s, L=%s" % (k, num_types)
        )
    return comb(num_types + k - 1, k)


class ClassSummary(NamedTuple):
    graphlet: Graphlet
    observed: int
    possible: int

    @property
    def forbidden(self):
        return self.possible - self.observed

    @property
    def name(self):
        return GRAPHLETS[self.graphlet][0]


def unique_counts_summary(gc, num_types=None, max_k=4):
    """
    For each graphlet on 3 to ``max_k`` nodes, the number of its typed
    variants occurring in the graph, out of the number possible. The
    rest are the forbidden variants.
    """
    num_types = num_types or gc.num_types
    if not num_types:
        raise ContractViolation("The number of node types is needed")
    return [
        ClassSummary(
            graphlet,
            len(gc.variants(graphlet)),
            num_possible_typed(node_count(graphlet), num_types),
        )
        for graphlet in SUMMARY_GRAPHLETS
        if node_count(graphlet) <= max_k
    ]


def untyped_counts(gc):
    """
    Frequencies of every graphlet with types ignored, ie summed over
    its typed variants.
    """
    totals = {}
    for key, count in gc.items():
        graphlet, _ = decode(key)
        totals[graphlet] = totals.get(graphlet, 0) + count
    return totals


def homophily_share(gc, graphlet):
    """
    Fraction of a graphlet's frequency found on variants whose nodes
    all have the same type. ``None`` when the graphlet never occurs.
    """
    total = same = 0
    for key, count in gc.variants(graphlet):
        _, types = decode(key)
        total += count
        if len(set(types)) == 1:
            same += count
    if not total:
        return None
    return same / total


def edge_key_stats(counts):
    """
    The largest and mean number of distinct typed orbits per edge.
    """
    edges, _ = _edge_counts(counts)
    sizes = np.array([len(edge) for edge in edges], dtype=np.int64)
    if not len(sizes):
        return 0, 0.0
    return int(sizes.max()), float(sizes.mean())
