from dataclasses import dataclass, replace
from functools import cached_property

import numpy as np

from heteromotif.core.exceptions import ContractViolation, GraphFormatError

# Attributes derived lazily from the arrays. They're rebuilt on demand
# rather than pickled when a graph is shipped to a worker process.
DERIVED_ATTRS = ("adjacency", "type_list", "degrees")


@dataclass(frozen=True, eq=False)
class HeteroGraph:
    """
    A simple undirected graph with typed nodes, stored in compressed
    adjacency form.

    - ``offsets`` and ``neighbors`` are the CSR arrays: the neighbors
      of node ``i`` are ``neighbors[offsets[i]:offsets[i + 1]]``, in
      ascending order.
    - ``node_type`` holds a type id in ``1..num_node_types`` per node.
    - ``edge_list`` holds one row ``(i, j)`` per undirected edge, the
      row index being the edge id. Rows are oriented so that
      ``deg(i) <= deg(j)``, ties broken by the smaller id first.
    - ``node_ids`` and ``type_labels`` map dense ids back to the raw
      node ids and type labels of the input, ``type_labels[t - 1]``
      being the label of type ``t``.
    - ``edge_type`` is optional and recorded only, counting is keyed
      on node types alone.

    Instances are immutable and safe to share between threads and to
    copy to worker processes. Build them with ``from_edges()``, which
    validates every invariant, rather than the raw constructor.
    """

    offsets: np.ndarray
    neighbors: np.ndarray
    node_type: np.ndarray
    num_node_types: int
    edge_list: np.ndarray
    node_ids: np.ndarray
    type_labels: tuple
    edge_type: np.ndarray = None
    edge_type_labels: tuple = ()

    @classmethod
    def from_edges(
        cls,
        num_nodes,
        edges,
        node_type,
        node_ids=None,
        type_labels=None,
        edge_type=None,
        edge_type_labels=(),
    ):
        """
        Builds a graph from dense node ids. ``edges`` is a sequence of
        ``(u, v)`` pairs which must already be free of self-loops and
        duplicates (the loaders take care of that for raw input).
        ``edge_type`` when given is aligned with ``edges``.
        """
        pairs = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if len(pairs) == 0:
            raise GraphFormatError("The graph has no edges")
        if pairs.min() < 0 or pairs.max() >= num_nodes:
            raise GraphFormatError(
                "Edge endpoints must be node ids in 0..%s" % (num_nodes - 1)
            )
        lo = pairs.min(axis=1)
        hi = pairs.max(axis=1)
        if np.any(lo == hi):
            raise GraphFormatError("Self-loops are not allowed")
        canonical, first = np.unique(
            np.stack([lo, hi], axis=1), axis=0, return_index=True
        )
        if len(canonical) != len(pairs):
            raise GraphFormatError(
                "%s duplicate edges given" % (len(pairs) - len(canonical))
            )

        node_type = np.asarray(node_type, dtype=np.int64)
        if node_type.shape != (num_nodes,):
            raise GraphFormatError(
                "Expected %s node types, got %s" % (num_nodes, len(node_type))
            )
        num_node_types = int(node_type.max())
        used = np.unique(node_type)
        if node_type.min() < 1 or len(used) != num_node_types:
            raise GraphFormatError(
                "Node types must cover the contiguous range 1..L, got %s"
                % used.tolist()
            )

        # Both directions, sorted by source then target, give the CSR
        # blocks with ascending neighbors.
        src = np.concatenate([canonical[:, 0], canonical[:, 1]])
        dst = np.concatenate([canonical[:, 1], canonical[:, 0]])
        order = np.lexsort((dst, src))
        neighbors = dst[order]
        degrees = np.bincount(src, minlength=num_nodes)
        offsets = np.zeros(num_nodes + 1, dtype=np.int64)
        np.cumsum(degrees, out=offsets[1:])

        # deg(i) <= deg(j), and canonical rows already have i < j for ties.
        swap = degrees[canonical[:, 0]] > degrees[canonical[:, 1]]
        edge_list = canonical.copy()
        edge_list[swap] = edge_list[swap][:, ::-1]

        if node_ids is None:
            node_ids = np.arange(num_nodes, dtype=np.int64)
        if type_labels is None:
            type_labels = tuple(str(t) for t in range(1, num_node_types + 1))
        if len(type_labels) != num_node_types:
            raise GraphFormatError(
                "Expected %s type labels, got %s" % (num_node_types, len(type_labels))
            )
        if edge_type is not None:
            edge_type = np.asarray(edge_type, dtype=np.int64)[first]

        return cls(
            offsets=offsets,
            neighbors=neighbors,
            node_type=node_type,
            num_node_types=num_node_types,
            edge_list=edge_list,
            node_ids=np.asarray(node_ids, dtype=np.int64),
            type_labels=tuple(type_labels),
            edge_type=edge_type,
            edge_type_labels=tuple(edge_type_labels),
        )

    @property
    def num_nodes(self):
        return len(self.offsets) - 1

    @property
    def num_edges(self):
        return len(self.edge_list)

    @cached_property
    def degrees(self):
        return np.diff(self.offsets)

    @cached_property
    def adjacency(self):
        """
        Neighbor lists as plain Python lists, which is what the counting
        loops iterate over.
        """
        neighbors = self.neighbors.tolist()
        offsets = self.offsets.tolist()
        return [neighbors[offsets[i] : offsets[i + 1]] for i in range(self.num_nodes)]

    @cached_property
    def type_list(self):
        return self.node_type.tolist()

    def _check_node(self, i):
        if not 0 <= i < self.num_nodes:
            raise ContractViolation(
                "Node id %s out of range 0..%s" % (i, self.num_nodes - 1)
            )

    def _check_type(self, t):
        if not 1 <= t <= self.num_node_types:
            raise ContractViolation(
                "Type id %s out of range 1..%s" % (t, self.num_node_types)
            )

    def degree(self, i):
        self._check_node(i)
        return int(self.offsets[i + 1] - self.offsets[i])

    def neighbors_of(self, i):
        self._check_node(i)
        return self.neighbors[self.offsets[i] : self.offsets[i + 1]]

    def typed_degree(self, i, t):
        """
        Number of neighbors of node ``i`` having type ``t``.
        """
        self._check_type(t)
        return int(np.count_nonzero(self.node_type[self.neighbors_of(i)] == t))

    def typed_degrees(self, i):
        """
        Typed degrees of node ``i`` for every type, indexed by type id
        (index 0 is always zero).
        """
        nbrs = self.neighbors_of(i)
        return np.bincount(self.node_type[nbrs], minlength=self.num_node_types + 1)

    def max_degree(self):
        return int(self.degrees.max())

    def has_edge(self, u, v):
        nbrs = self.neighbors_of(u)
        pos = np.searchsorted(nbrs, v)
        return bool(pos < len(nbrs) and nbrs[pos] == v)

    def edge_endpoints(self, edge_id):
        i, j = self.edge_list[edge_id]
        return int(i), int(j)

    def edges(self):
        """
        Yields ``(edge_id, i, j)`` for every edge, in edge id order.
        """
        for edge_id, (i, j) in enumerate(self.edge_list.tolist()):
            yield edge_id, i, j

    def with_types(self, node_type, type_labels=None):
        """
        Returns a copy of the graph with new node types, sharing the
        adjacency arrays.
        """
        node_type = np.asarray(node_type, dtype=np.int64)
        num_node_types = int(node_type.max())
        if node_type.shape != (self.num_nodes,) or node_type.min() < 1:
            raise GraphFormatError("Node types must be 1..L for every node")
        if len(np.unique(node_type)) != num_node_types:
            raise GraphFormatError("Node types must cover the contiguous range 1..L")
        if type_labels is None:
            type_labels = tuple(str(t) for t in range(1, num_node_types + 1))
        return replace(
            self,
            node_type=node_type,
            num_node_types=num_node_types,
            type_labels=tuple(type_labels),
        )

    def collapse_types(self):
        """
        The same graph with every node given a single type, which turns
        typed counts into classical untyped counts.
        """
        return self.with_types(np.ones(self.num_nodes, dtype=np.int64))

    def __eq__(self, other):
        if not isinstance(other, HeteroGraph):
            return NotImplemented
        arrays = ("offsets", "neighbors", "node_type", "edge_list", "node_ids")
        same_edge_types = (self.edge_type is None) == (other.edge_type is None) and (
            self.edge_type is None or np.array_equal(self.edge_type, other.edge_type)
        )
        return (
            all(np.array_equal(getattr(self, a), getattr(other, a)) for a in arrays)
            and self.num_node_types == other.num_node_types
            and self.type_labels == other.type_labels
            and self.edge_type_labels == other.edge_type_labels
            and same_edge_types
        )

    __hash__ = None

    def __getstate__(self):
        return {k: v for k, v in self.__dict__.items() if k not in DERIVED_ATTRS}

    def __repr__(self):
        return "<HeteroGraph N=%s M=%s L=%s>" % (
            self.num_nodes,
            self.num_edges,
            self.num_node_types,
        )
