"""
Brute-force typed graphlet counting for small graphs.

Nothing here shares logic with the counting engine beyond the key
codec: every node pair around an edge is tried, and the induced
subgraph is classified from its adjacency bits alone. It's slow, and
refuses graphs above ``ORACLE_MAX_NODES`` nodes, but it's simple
enough to trust, which is what the engine is checked against.
"""

from itertools import combinations
from typing import NamedTuple

import numpy as np

from heteromotif.analysis.models import GlobalCounts
from heteromotif.conf import settings
from heteromotif.core.exceptions import InternalConsistencyError, OracleCapExceeded
from heteromotif.motifs import Graphlet, Orbit
from heteromotif.motifs.codec import describe, encode
from heteromotif.motifs.engine import EdgeLocalCounts

# Adjacency bits of a node pair ``k, r`` around the edge ``(i, j)``.
IK, JK, IR, JR, KR = 1, 2, 4, 8, 16


def classify_pair(bits):
    """
    The orbit of the edge ``(i, j)`` in the subgraph induced by
    ``{i, j, k, r}``, given the adjacency bits of the other five node
    pairs, or ``None`` when that subgraph isn't connected.
    """
    ik, jk, ir, jr, kr = (bool(bits & b) for b in (IK, JK, IR, JR, KR))
    deg_i = 1 + ik + ir
    deg_j = 1 + jk + jr
    deg_k = ik + jk + kr
    deg_r = ir + jr + kr
    if not (deg_k and deg_r and (ik or jk or ir or jr)):
        return None
    num_edges = (deg_i + deg_j + deg_k + deg_r) // 2
    degrees = (deg_i, deg_j, deg_k, deg_r)
    if num_edges == 6:
        return Orbit.FOUR_CLIQUE
    if num_edges == 5:
        if deg_i == deg_j == 3:
            return Orbit.CHORDAL_CYCLE_CENTER
        return Orbit.CHORDAL_CYCLE_EDGE
    if num_edges == 4:
        if all(d == 2 for d in degrees):
            return Orbit.FOUR_CYCLE
        if deg_i == 1 or deg_j == 1:
            return Orbit.TAILED_TRIANGLE_TAIL_EDGE
        if deg_i == 3 or deg_j == 3:
            return Orbit.TAILED_TRIANGLE_TRI_EDGE
        return Orbit.TAILED_TRIANGLE_CENTER
    if 3 in degrees:
        return Orbit.FOUR_STAR
    if deg_i == deg_j == 2:
        return Orbit.FOUR_PATH_CENTER
    return Orbit.FOUR_PATH_EDGE


ORBIT_TABLE = tuple(classify_pair(bits) for bits in range(32))


class EdgePartition(NamedTuple):
    """
    The other nodes of the graph split by their adjacency to the
    endpoints of an edge ``(i, j)``.
    """

    triangle: frozenset
    only_i: frozenset
    only_j: frozenset
    neither: frozenset


class OrbitClassification(NamedTuple):
    nodes: tuple
    orbit: Orbit
    key: int


class Difference(NamedTuple):
    edge_id: int
    edge: tuple
    key: int
    engine: int
    oracle: int

    def __str__(self):
        return "edge %s %s: %s engine=%s oracle=%s" % (
            self.edge_id,
            self.edge,
            describe(self.key),
            self.engine,
            self.oracle,
        )


def check_cap(graph, cap=None):
    cap = settings.ORACLE_MAX_NODES if cap is None else cap
    if graph.num_nodes > cap:
        raise OracleCapExceeded(graph.num_nodes, cap)


def adjacency_matrix(graph):
    matrix = np.zeros((graph.num_nodes, graph.num_nodes), dtype=bool)
    matrix[graph.edge_list[:, 0], graph.edge_list[:, 1]] = True
    matrix[graph.edge_list[:, 1], graph.edge_list[:, 0]] = True
    return matrix


def partition_edge(graph, edge, matrix=None):
    i, j = edge
    if matrix is None:
        matrix = adjacency_matrix(graph)
    others = [k for k in range(graph.num_nodes) if k != i and k != j]
    partition = EdgePartition(
        triangle=frozenset(k for k in others if matrix[i, k] and matrix[j, k]),
        only_i=frozenset(k for k in others if matrix[i, k] and not matrix[j, k]),
        only_j=frozenset(k for k in others if matrix[j, k] and not matrix[i, k]),
        neither=frozenset(k for k in others if not (matrix[i, k] or matrix[j, k])),
    )
    if sum(map(len, partition)) + 2 != graph.num_nodes:
        raise InternalConsistencyError("Edge %s doesn't partition the nodes" % (edge,))
    return partition


def classify_edge(graph, edge, matrix=None, max_k=4):
    """
    Yields an ``OrbitClassification`` for every connected induced
    subgraph on up to ``max_k`` nodes containing the edge.
    """
    i, j = edge
    if matrix is None:
        matrix = adjacency_matrix(graph)
    types = graph.type_list
    rows = matrix.tolist()
    row_i, row_j = rows[i], rows[j]
    others = [k for k in range(graph.num_nodes) if k != i and k != j]

    yield OrbitClassification(
        (i, j), Orbit.EDGE, encode(Orbit.EDGE, [types[i], types[j]])
    )
    for k in others:
        ik, jk = row_i[k], row_j[k]
        if ik or jk:
            orbit = Orbit.TRIANGLE if ik and jk else Orbit.WEDGE
            nodes = (i, j, k)
            yield OrbitClassification(
                nodes, orbit, encode(orbit, [types[n] for n in nodes])
            )
    if max_k < 4:
        return
    for k, r in combinations(others, 2):
        bits = (
            IK * row_i[k]
            | JK * row_j[k]
            | IR * row_i[r]
            | JR * row_j[r]
            | KR * rows[k][r]
        )
        orbit = ORBIT_TABLE[bits]
        if orbit is not None:
            nodes = (i, j, k, r)
            yield OrbitClassification(
                nodes, orbit, encode(orbit, [types[n] for n in nodes])
            )


def oracle_edge_counts(graph, edge, edge_id=None, max_k=4, cap=None, matrix=None):
    """
    Typed orbit counts of one edge, by brute force.
    """
    check_cap(graph, cap)
    out = EdgeLocalCounts(edge_id)
    for found in classify_edge(graph, edge, matrix=matrix, max_k=max_k):
        out.update(found.key)
    return out


def connected_sets(graph, max_k=4):
    """
    Every node set of size 2 to ``max_k`` inducing a connected
    subgraph, grown from the edges one neighbor at a time.
    """
    adjacency = graph.adjacency
    level = {frozenset(pair) for pair in graph.edge_list.tolist()}
    found = list(level)
    for _ in range(max_k - 2):
        level = {
            nodes | {n}
            for nodes in level
            for v in nodes
            for n in adjacency[v]
            if n not in nodes
        }
        found.extend(level)
    return found


def graphlet_of_set(nodes, matrix):
    nodes = list(nodes)
    degrees = [int(matrix[n, nodes].sum()) for n in nodes]
    num_edges = sum(degrees) // 2
    if len(nodes) == 2:
        return Graphlet.EDGE
    if len(nodes) == 3:
        return Graphlet.TRIANGLE if num_edges == 3 else Graphlet.WEDGE
    if num_edges == 3:
        return Graphlet.FOUR_STAR if max(degrees) == 3 else Graphlet.FOUR_PATH
    if num_edges == 4:
        return Graphlet.FOUR_CYCLE if max(degrees) == 2 else Graphlet.TAILED_TRIANGLE
    if num_edges == 5:
        return Graphlet.CHORDAL_CYCLE
    return Graphlet.FOUR_CLIQUE


def oracle_global_counts(graph, max_k=4, cap=None):
    """
    Whole-graph typed graphlet frequencies, counting every connected
    induced subgraph on up to ``max_k`` nodes exactly once.
    """
    check_cap(graph, cap)
    matrix = adjacency_matrix(graph)
    types = graph.type_list
    counts = {}
    for nodes in connected_sets(graph, max_k):
        graphlet = graphlet_of_set(nodes, matrix)
        key = encode(graphlet, [types[n] for n in nodes])
        counts[key] = counts.get(key, 0) + 1
    return GlobalCounts(
        counts,
        num_nodes=graph.num_nodes,
        num_edges=graph.num_edges,
        num_types=graph.num_node_types,
    )


def compare_with_oracle(graph, counts, max_k=None, cap=None):
    """
    Compares per-edge counts against the brute force, returning a
    ``Difference`` for every key whose counts don't match on some edge.
    ``counts`` is a ``MotifCounts`` or a sequence of ``EdgeLocalCounts``
    indexed by edge id.
    """
    check_cap(graph, cap)
    if max_k is None:
        max_k = getattr(counts, "max_k", 4)
    edges = list(getattr(counts, "edges", counts))
    if len(edges) != graph.num_edges:
        raise InternalConsistencyError(
            "Got counts for %s edges, the graph has %s" % (len(edges), graph.num_edges)
        )
    matrix = adjacency_matrix(graph)
    differences = []
    for edge_id, i, j in graph.edges():
        expected = oracle_edge_counts(
            graph, (i, j), edge_id, max_k=max_k, cap=cap, matrix=matrix
        )
        actual = edges[edge_id]
        for key in sorted(set(expected.counts) | set(actual.counts)):
            if expected.get(key) != actual.get(key):
                differences.append(
                    Difference(
                        edge_id, (i, j), key, actual.get(key), expected.get(key)
                    )
                )
    return differences
