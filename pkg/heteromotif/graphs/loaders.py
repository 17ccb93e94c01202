"""
Text and binary input/output for ``HeteroGraph``.

Edge files hold one ``src dst`` pair per line, optionally followed by
an edge type label. Type files hold one ``node_id type_label`` pair per
line. Node ids are integers, type labels arbitrary tokens. Anything
after the comment prefix on a line is ignored.
"""

import logging

import numpy as np

from heteromotif.conf import settings
from heteromotif.core.exceptions import GraphFormatError
from heteromotif.graphs.models import HeteroGraph

logger = logging.getLogger(__name__)


def natural_key(label):
    """
    Sort key putting integer-like labels first in numeric order, then
    everything else alphabetically, so "2" sorts before "10".
    """
    try:
        return (0, int(label), label)
    except ValueError:
        return (1, 0, label)


def _read_lines(path):
    """
    Yields ``(line_number, tokens)`` for every non-blank, non-comment
    line of the given file.
    """
    prefix = settings.GRAPH_COMMENT_PREFIX
    try:
        with open(path, encoding="utf-8") as f:
            for line_number, line in enumerate(f, 1):
                tokens = line.split(prefix, 1)[0].split()
                if tokens:
                    yield line_number, tokens
    except OSError as e:
        raise GraphFormatError("Could not read file: %s" % e.strerror, path=path)


def _parse_node_id(token, path, line_number):
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(
            "Node ids must be integers, got %r" % token, path, line_number
        )


def read_node_types(path):
    """
    Reads a node type file into a dict mapping raw node ids to labels.
    """
    types = {}
    for line_number, tokens in _read_lines(path):
        if len(tokens) != 2:
            raise GraphFormatError(
                "Expected 'node_id type_label', got %s tokens" % len(tokens),
                path,
                line_number,
            )
        node = _parse_node_id(tokens[0], path, line_number)
        label = tokens[1]
        if types.setdefault(node, label) != label:
            raise GraphFormatError(
                "Node %s is given two types: %s and %s" % (node, types[node], label),
                path,
                line_number,
            )
    return types


def read_edges(path):
    """
    Reads an edge file into a dict mapping ``(lo, hi)`` raw node id
    pairs to their edge type label (or ``None``), dropping self-loops
    and duplicate edges. Returns the dict along with the number of
    self-loops and duplicates dropped.
    """
    edges = {}
    self_loops = duplicates = 0
    typed = None
    for line_number, tokens in _read_lines(path):
        if len(tokens) not in (2, 3):
            raise GraphFormatError(
                "Expected 'src dst [edge_type]', got %s tokens" % len(tokens),
                path,
                line_number,
            )
        if typed is None:
            typed = len(tokens) == 3
        elif typed != (len(tokens) == 3):
            raise GraphFormatError(
                "The edge type column must be given on every line or on none",
                path,
                line_number,
            )
        u = _parse_node_id(tokens[0], path, line_number)
        v = _parse_node_id(tokens[1], path, line_number)
        if u == v:
            self_loops += 1
            continue
        pair = (min(u, v), max(u, v))
        if pair in edges:
            duplicates += 1
            continue
        edges[pair] = tokens[2] if typed else None
    return edges, self_loops, duplicates


def load_edge_list(path, types_path):
    """
    Loads a graph from an edge file and a node type file.

    Raw node ids are remapped to dense ids ``0..N-1`` in ascending
    order, and type labels to ``1..L`` in natural order. The remap
    tables are kept on the graph as ``node_ids`` and ``type_labels``.
    Nodes given a type but having no edges are kept as isolated nodes.
    """
    types = read_node_types(types_path)
    edges, self_loops, duplicates = read_edges(path)
    if not edges:
        raise GraphFormatError("The edge file contains no edges", path=path)
    if self_loops:
        logger.warning("%s: dropped %s self-loops", path, self_loops)
    if duplicates:
        logger.warning("%s: dropped %s duplicate edges", path, duplicates)

    for pair in edges:
        for node in pair:
            if node not in types:
                raise GraphFormatError(
                    "Node %s appears in the edges but has no type" % node,
                    path=types_path,
                )

    node_ids = sorted(types)
    dense = {node: i for i, node in enumerate(node_ids)}
    type_labels = sorted(set(types.values()), key=natural_key)
    type_ids = {label: t for t, label in enumerate(type_labels, 1)}
    node_type = [type_ids[types[node]] for node in node_ids]

    pairs = [(dense[u], dense[v]) for u, v in edges]
    isolated = len(node_ids) - len({n for pair in edges for n in pair})
    if isolated:
        logger.info("%s: keeping %s isolated nodes", types_path, isolated)

    edge_type = edge_type_labels = None
    edge_labels = list(edges.values())
    if edge_labels[0] is not None:
        edge_type_labels = sorted(set(edge_labels), key=natural_key)
        edge_type_ids = {label: t for t, label in enumerate(edge_type_labels, 1)}
        edge_type = [edge_type_ids[label] for label in edge_labels]

    return HeteroGraph.from_edges(
        len(node_ids),
        pairs,
        node_type,
        node_ids=node_ids,
        type_labels=type_labels,
        edge_type=edge_type,
        edge_type_labels=edge_type_labels or (),
    )


def write_edge_list(graph, path, types_path):
    """
    Writes a graph back out in the text formats read by
    ``load_edge_list``, with raw node ids and type labels restored.
    """
    node_ids = graph.node_ids.tolist()
    with open(path, "w", encoding="utf-8") as f:
        for edge_id, i, j in graph.edges():
            u, v = sorted((node_ids[i], node_ids[j]))
            if graph.edge_type is None:
                f.write(f"{u} {v}\n")
            else:
                label = graph.edge_type_labels[graph.edge_type[edge_id] - 1]
                f.write(f"{u} {v} {label}\n")
    with open(types_path, "w", encoding="utf-8") as f:
        for node, t in zip(node_ids, graph.type_list):
            f.write(f"{node} {graph.type_labels[t - 1]}\n")


# Arrays stored in the binary cache, all as little-endian int64.
CACHE_ARRAYS = ("offsets", "neighbors", "node_type", "edge_list", "node_ids")


def save_cache(graph, path):
    """
    Writes the compressed form of a graph to a numpy ``.npz`` file,
    whose ``version`` entry must match ``GRAPH_CACHE_VERSION`` for the
    cache to be loaded again. numpy appends ``.npz`` to ``path`` when
    it doesn't already end with it.
    """
    arrays = {name: getattr(graph, name).astype("<i8") for name in CACHE_ARRAYS}
    has_edge_type = graph.edge_type is not None
    np.savez(
        path,
        version=np.array([settings.GRAPH_CACHE_VERSION], dtype="<i8"),
        num_node_types=np.array([graph.num_node_types], dtype="<i8"),
        type_labels=np.array(graph.type_labels, dtype=str),
        edge_type=(graph.edge_type if has_edge_type else np.zeros(0)).astype("<i8"),
        has_edge_type=np.array([has_edge_type]),
        edge_type_labels=np.array(graph.edge_type_labels, dtype=str),
        **arrays,
    )


def load_cache(path):
    try:
        data = np.load(path, allow_pickle=False)
    except (OSError, ValueError) as e:
        raise GraphFormatError("Could not read graph cache: %s" % e, path=path)
    with data:
        version = int(data["version"][0])
        if version != settings.GRAPH_CACHE_VERSION:
            raise GraphFormatError(
                "Cache version %s, expected %s"
                % (version, settings.GRAPH_CACHE_VERSION),
                path=path,
            )
        arrays = {name: data[name].astype(np.int64) for name in CACHE_ARRAYS}
        return HeteroGraph(
            num_node_types=int(data["num_node_types"][0]),
            type_labels=tuple(data["type_labels"].tolist()),
            edge_type=(
                data["edge_type"].astype(np.int64)
                if bool(data["has_edge_type"][0])
                else None
            ),
            edge_type_labels=tuple(data["edge_type_labels"].tolist()),
            **arrays,
        )
