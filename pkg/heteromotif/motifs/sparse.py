"""
Sparse on-disk format for per-edge typed motif counts.

Keys are too wide to be read comfortably, so the motifs found in a run
are remapped to consecutive ids starting from 1, in ascending key
order. Two text files then hold the result:

- the counts file, with one line per edge, ``u v id:count id:count ...``,
  using the raw node ids of the input and sorted by ``(u, v)``. Only
  nonzero counts are written.
- the lookup file, with one line per id,
  ``id name k |E| t1,t2,...``, the types being dense type ids.

The same content can also be written as numpy arrays with
``write_binary_counts()``.
"""

import json

import numpy as np

from heteromotif.core.exceptions import ContractViolation, GraphFormatError
from heteromotif.motifs import GRAPHLETS, ORBITS
from heteromotif.motifs.codec import describe, encode
from heteromotif.motifs.engine import EdgeLocalCounts

LEVELS = ("orbit", "graphlet")


def assign_ids(keys):
    """
    Maps every key to its consecutive id, from 1 in ascending key order.
    """
    return {key: n for n, key in enumerate(sorted(set(keys)), 1)}


def raw_edges(graph):
    """
    The ``(u, v, edge_id)`` rows of every edge, with raw node ids
    ``u < v``, sorted.
    """
    node_ids = graph.node_ids.tolist()
    rows = []
    for edge_id, i, j in graph.edges():
        u, v = sorted((node_ids[i], node_ids[j]))
        rows.append((u, v, edge_id))
    return sorted(rows)


def write_counts(graph, edges, path, ids=None):
    """
    Writes the counts file for the per-edge counts ``edges``, indexed
    by edge id. Returns the key to id mapping used.
    """
    if ids is None:
        ids = assign_ids(key for counts in edges for key in counts.counts)
    with open(path, "w", encoding="utf-8") as f:
        for u, v, edge_id in raw_edges(graph):
            pairs = " ".join(
                "%s:%s" % (ids[key], n) for key, n in edges[edge_id].pairs()
            )
            f.write(f"{u} {v} {pairs}\n")
    return ids


def write_lookup(ids, path):
    with open(path, "w", encoding="utf-8") as f:
        for key, n in sorted(ids.items(), key=lambda item: item[1]):
            d = describe(key)
            types = ",".join(map(str, d.types))
            f.write(f"{n} {d.name} {d.k} {d.num_edges} {types}\n")


def read_lookup(path, level="orbit"):
    """
    Reads a lookup file back into a dict mapping ids to keys. Orbit and
    graphlet names overlap, so the level the file was written at is
    needed to tell them apart.
    """
    if level not in LEVELS:
        raise ContractViolation("level must be one of %s" % (LEVELS,))
    table = ORBITS if level == "orbit" else GRAPHLETS
    motifs = {entry[0]: motif for motif, entry in table.items()}
    keys = {}
    with open(path, encoding="utf-8") as f:
        for line_number, line in enumerate(f, 1):
            tokens = line.split()
            if not tokens:
                continue
            try:
                n, name, _, _, types = tokens
                types = [int(t) for t in types.split(",")]
                keys[int(n)] = encode(motifs[name], types)
            except (ValueError, KeyError) as e:
                raise GraphFormatError(
                    "Bad lookup line: %s" % e, path=path, line=line_number
                )
    return keys


def read_counts(path, lookup):
    """
    Reads a counts file back into a dict mapping raw ``(u, v)`` node id
    pairs to their ``EdgeLocalCounts``, given the id to key mapping
    from ``read_lookup()``.
    """
    edges = {}
    with open(path, encoding="utf-8") as f:
        for line_number, line in enumerate(f, 1):
            tokens = line.split()
            if not tokens:
                continue
            try:
                u, v = int(tokens[0]), int(tokens[1])
                counts = EdgeLocalCounts()
                for token in tokens[2:]:
                    n, count = token.split(":")
                    counts.update(lookup[int(n)], int(count))
            except (ValueError, KeyError, IndexError) as e:
                raise GraphFormatError(
                    "Bad counts line: %s" % e, path=path, line=line_number
                )
            edges[u, v] = counts
    return edges


def write_binary_counts(graph, edges, path):
    """
    Writes the per-edge counts as flat numpy arrays: one entry per
    nonzero count in ``edge_id``, ``key`` and ``count``, plus the raw
    endpoints of every edge in ``endpoints``.
    """
    edge_ids, keys, values = [], [], []
    for counts in edges:
        for key, n in counts.pairs():
            edge_ids.append(counts.edge_id)
            keys.append(key)
            values.append(n)
    np.savez(
        path,
        edge_id=np.array(edge_ids, dtype="<i8"),
        key=np.array(keys, dtype="<u8"),
        count=np.array(values, dtype="<i8"),
        endpoints=graph.node_ids[graph.edge_list].astype("<i8"),
    )


def read_binary_counts(path):
    """
    Reads arrays written by ``write_binary_counts()`` back into a list
    of ``EdgeLocalCounts`` indexed by edge id.
    """
    with np.load(path, allow_pickle=False) as data:
        num_edges = len(data["endpoints"])
        edges = [EdgeLocalCounts(edge_id) for edge_id in range(num_edges)]
        for edge_id, key, n in zip(
            data["edge_id"].tolist(), data["key"].tolist(), data["count"].tolist()
        ):
            edges[edge_id].update(key, n)
    return edges


def write_manifest(path, **fields):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(fields, f, indent=2, sort_keys=True)
        f.write("\n")
