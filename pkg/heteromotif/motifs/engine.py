"""
Per-edge typed graphlet orbit counting.

For an edge ``(i, j)`` the neighborhoods of ``i`` and ``j`` are split
into three sets: ``T`` (nodes adjacent to both, forming triangles),
``S_i`` (adjacent to ``i`` only) and ``S_j`` (adjacent to ``j`` only).
Their sizes per type give every 3-node count directly. The 4-node
orbits that hinge on an edge leaving one of those sets are found by
scanning the neighbors of the set members. The four remaining orbits
(4-path center, 4-star, tailed triangle edge and chordal cycle center)
follow in constant time per type pair from the set sizes, minus the
orbit counts found by the scans.
"""

from itertools import chain

from heteromotif.core.exceptions import InternalConsistencyError
from heteromotif.motifs import Orbit
from heteromotif.motifs.codec import pack2, pack3, pack4, prefix

# Marks kept in ``ScratchState.psi``.
UNMARKED = 0
MARK_SI = 1
MARK_SJ = 2
MARK_T = 3

MAX_COUNT = (1 << 63) - 1

P_EDGE = prefix(Orbit.EDGE)
P_WEDGE = prefix(Orbit.WEDGE)
P_TRIANGLE = prefix(Orbit.TRIANGLE)
P_PATH_EDGE = prefix(Orbit.FOUR_PATH_EDGE)
P_PATH_CENTER = prefix(Orbit.FOUR_PATH_CENTER)
P_STAR = prefix(Orbit.FOUR_STAR)
P_CYCLE = prefix(Orbit.FOUR_CYCLE)
P_TAIL_EDGE = prefix(Orbit.TAILED_TRIANGLE_TAIL_EDGE)
P_TAIL_CENTER = prefix(Orbit.TAILED_TRIANGLE_CENTER)
P_TAIL_TRI_EDGE = prefix(Orbit.TAILED_TRIANGLE_TRI_EDGE)
P_CHORD_EDGE = prefix(Orbit.CHORDAL_CYCLE_EDGE)
P_CHORD_CENTER = prefix(Orbit.CHORDAL_CYCLE_CENTER)
P_CLIQUE = prefix(Orbit.FOUR_CLIQUE)


class ScratchState:
    """
    Reusable per-worker workspace for counting one edge at a time.

    ``psi`` marks every node of the current ``S_i``, ``S_j`` and ``T``
    sets, and ``touched`` lists the marked nodes so that ``reset()``
    only clears what was set. ``t_cnt``, ``si_cnt`` and ``sj_cnt`` hold
    the set sizes per type id. A ``ScratchState`` belongs to a single
    worker and is never shared.
    """

    def __init__(self, graph):
        self.adjacency = graph.adjacency
        self.types = graph.type_list
        self.num_types = graph.num_node_types
        self.psi = [UNMARKED] * graph.num_nodes
        self.touched = []
        self.t_list = []
        self.si_list = []
        self.sj_list = []
        self.t_cnt = [0] * (graph.num_node_types + 1)
        self.si_cnt = [0] * (graph.num_node_types + 1)
        self.sj_cnt = [0] * (graph.num_node_types + 1)
        self.edge = None

    def reset(self):
        psi = self.psi
        for k in self.touched:
            psi[k] = UNMARKED
        types = self.types
        for nodes, cnt in (
            (self.t_list, self.t_cnt),
            (self.si_list, self.si_cnt),
            (self.sj_list, self.sj_cnt),
        ):
            for k in nodes:
                cnt[types[k]] = 0
            nodes.clear()
        self.touched.clear()
        self.edge = None

    def is_clean(self):
        return (
            not self.touched
            and not any(self.psi)
            and not any(self.t_cnt)
            and not any(self.si_cnt)
            and not any(self.sj_cnt)
        )


class EdgeLocalCounts:
    """
    Sparse typed motif counts for a single edge: a mapping of motif
    keys to positive counts. Zero counts are never stored.
    """

    __slots__ = ("edge_id", "counts")

    def __init__(self, edge_id=None, counts=None):
        self.edge_id = edge_id
        self.counts = dict(counts) if counts else {}

    def update(self, key, amount=1):
        self.counts[key] = self.counts.get(key, 0) + amount

    def get(self, key):
        return self.counts.get(key, 0)

    def keys(self):
        return sorted(self.counts)

    def pairs(self):
        """
        The ``(key, count)`` pairs sorted by key.
        """
        pairs = sorted(self.counts.items())
        for key, count in pairs:
            if count > MAX_COUNT:
                raise InternalConsistencyError(
                    "Count %s for key %s on edge %s overflows 64 bits"
                    % (count, key, self.edge_id)
                )
        return tuple(pairs)

    def __len__(self):
        return len(self.counts)

    def __eq__(self, other):
        if not isinstance(other, EdgeLocalCounts):
            return NotImplemented
        return self.edge_id == other.edge_id and self.counts == other.counts

    def __repr__(self):
        return "<EdgeLocalCounts edge=%s keys=%s>" % (self.edge_id, len(self.counts))


def classify_neighbors(graph, edge, scratch, out):
    """
    Splits the neighbors of the edge's endpoints into ``T``, ``S_i``
    and ``S_j``, marking them in ``scratch``, and records the edge,
    triangle and 3-path counts of the edge in ``out``.
    """
    i, j = edge
    adj = scratch.adjacency
    types = scratch.types
    psi = scratch.psi
    touched = scratch.touched
    counts = out.counts
    a, b = types[i], types[j]
    scratch.edge = edge

    for k in adj[i]:
        if k != j:
            psi[k] = MARK_SI
            touched.append(k)

    for k in adj[j]:
        if k == i:
            continue
        t = types[k]
        if psi[k] == MARK_SI:
            psi[k] = MARK_T
            scratch.t_list.append(k)
            scratch.t_cnt[t] += 1
            key = pack3(P_TRIANGLE, a, b, t)
        else:
            psi[k] = MARK_SJ
            touched.append(k)
            scratch.sj_list.append(k)
            scratch.sj_cnt[t] += 1
            key = pack3(P_WEDGE, a, b, t)
        counts[key] = counts.get(key, 0) + 1

    for k in adj[i]:
        if k != j and psi[k] == MARK_SI:
            t = types[k]
            scratch.si_list.append(k)
            scratch.si_cnt[t] += 1
            key = pack3(P_WEDGE, a, b, t)
            counts[key] = counts.get(key, 0) + 1

    key = pack2(P_EDGE, a, b)
    counts[key] = counts.get(key, 0) + 1
    return out


def count_path_based(graph, edge, scratch, out):
    """
    Scans the neighbors of every node in ``S_i`` and ``S_j`` for the
    4-path edge, tailed triangle tail edge and 4-cycle orbits.
    """
    i, j = edge
    adj = scratch.adjacency
    types = scratch.types
    psi = scratch.psi
    counts = out.counts
    a, b = types[i], types[j]

    for w_k in scratch.si_list:
        c = types[w_k]
        for w_r in adj[w_k]:
            if w_r == i or w_r == j:
                continue
            mark = psi[w_r]
            if mark == UNMARKED:
                key = pack4(P_PATH_EDGE, a, b, c, types[w_r])
            elif mark == MARK_SI and w_r < w_k:
                key = pack4(P_TAIL_EDGE, a, b, c, types[w_r])
            else:
                continue
            counts[key] = counts.get(key, 0) + 1

    for w_k in scratch.sj_list:
        c = types[w_k]
        for w_r in adj[w_k]:
            if w_r == i or w_r == j:
                continue
            mark = psi[w_r]
            if mark == UNMARKED:
                key = pack4(P_PATH_EDGE, a, b, c, types[w_r])
            elif mark == MARK_SJ and w_r < w_k:
                key = pack4(P_TAIL_EDGE, a, b, c, types[w_r])
            elif mark == MARK_SI:
                key = pack4(P_CYCLE, a, b, c, types[w_r])
            else:
                continue
            counts[key] = counts.get(key, 0) + 1
    return out


def count_triangle_based(graph, edge, scratch, out):
    """
    Scans the neighbors of every node in ``T`` for the 4-clique,
    chordal cycle edge and tailed triangle center orbits.
    """
    i, j = edge
    adj = scratch.adjacency
    types = scratch.types
    psi = scratch.psi
    counts = out.counts
    a, b = types[i], types[j]

    for w_k in scratch.t_list:
        c = types[w_k]
        for w_r in adj[w_k]:
            if w_r == i or w_r == j:
                continue
            mark = psi[w_r]
            if mark == MARK_T:
                if w_r >= w_k:
                    continue
                key = pack4(P_CLIQUE, a, b, c, types[w_r])
            elif mark == UNMARKED:
                key = pack4(P_TAIL_CENTER, a, b, c, types[w_r])
            else:
                key = pack4(P_CHORD_EDGE, a, b, c, types[w_r])
            counts[key] = counts.get(key, 0) + 1
    return out


def _derive(counts, key, total, found_key, edge):
    value = total - counts.get(found_key, 0)
    if value < 0:
        raise InternalConsistencyError(
            "Derived a negative count (%s) for key %s on edge %s" % (value, key, edge)
        )
    if value:
        counts[key] = value


def derive_constant_time(scratch, out):
    """
    Adds the 4-path center, 4-star, tailed triangle edge and chordal
    cycle center counts for every pair of types ``t <= u`` present in
    the edge's sets. Each is the number of node pairs the set sizes
    allow, minus the pairs already found by the scans to be adjacent
    (4-cycle, tailed triangle tail edge, chordal cycle edge and
    4-clique respectively).
    """
    i, j = scratch.edge
    types = scratch.types
    a, b = types[i], types[j]
    tc, si, sj = scratch.t_cnt, scratch.si_cnt, scratch.sj_cnt
    counts = out.counts
    present = sorted(
        {types[k] for k in chain(scratch.t_list, scratch.si_list, scratch.sj_list)}
    )

    for x, t in enumerate(present):
        for u in present[x:]:
            if t == u:
                path_center = si[t] * sj[t]
                star = si[t] * (si[t] - 1) // 2 + sj[t] * (sj[t] - 1) // 2
                tri_edge = tc[t] * (si[t] + sj[t])
                chord_center = tc[t] * (tc[t] - 1) // 2
            else:
                path_center = si[t] * sj[u] + si[u] * sj[t]
                star = si[t] * si[u] + sj[t] * sj[u]
                tri_edge = tc[t] * (si[u] + sj[u]) + tc[u] * (si[t] + sj[t])
                chord_center = tc[t] * tc[u]
            types_bits = pack4(0, a, b, t, u)
            _derive(
                counts,
                P_PATH_CENTER | types_bits,
                path_center,
                P_CYCLE | types_bits,
                scratch.edge,
            )
            _derive(
                counts, P_STAR | types_bits, star, P_TAIL_EDGE | types_bits, scratch.edge
            )
            _derive(
                counts,
                P_TAIL_TRI_EDGE | types_bits,
                tri_edge,
                P_CHORD_EDGE | types_bits,
                scratch.edge,
            )
            _derive(
                counts,
                P_CHORD_CENTER | types_bits,
                chord_center,
                P_CLIQUE | types_bits,
                scratch.edge,
            )
    return out


def count_edge(graph, edge, scratch, max_k=4, edge_id=None):
    """
    Counts every typed orbit the edge ``(i, j)`` takes part in, for
    graphlets of up to ``max_k`` nodes. ``scratch`` must be clean on
    entry and is clean again on return, whatever happens.
    """
    out = EdgeLocalCounts(edge_id)
    try:
        classify_neighbors(graph, edge, scratch, out)
        if max_k >= 4:
            count_path_based(graph, edge, scratch, out)
            count_triangle_based(graph, edge, scratch, out)
            derive_constant_time(scratch, out)
    finally:
        scratch.reset()
    return out
