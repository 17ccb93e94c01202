"""
Counting every edge of a graph, in the calling process or spread over a
pool of worker processes.

Workers receive the graph once, when they start, and build their own
``ScratchState`` from it. Edges are then handed out as consecutive
ranges of edge ids, ``MOTIFS_CHUNK_SIZE`` at a time, and every result
lands in the slot of its edge id. The global motif set is merged once
all ranges are done, so the result doesn't depend on the number of
workers or the order ranges finish in.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from time import perf_counter

from heteromotif.conf import settings
from heteromotif.core.exceptions import ContractViolation
from heteromotif.motifs.engine import ScratchState, count_edge

logger = logging.getLogger(__name__)

# Per-process state set up by ``_init_worker``.
_worker = {}


class MotifCounts:
    """
    Per-edge typed orbit counts for a whole graph.

    ``edges[edge_id]`` holds the ``EdgeLocalCounts`` of that edge and
    ``motifs`` the sorted keys of every typed orbit seen on any edge.
    """

    def __init__(self, graph, edges, max_k=4, workers=1, elapsed=0.0):
        self.graph = graph
        self.edges = edges
        self.max_k = max_k
        self.workers = workers
        self.elapsed = elapsed
        motifs = set()
        for counts in edges:
            motifs.update(counts.counts)
        self.motifs = tuple(sorted(motifs))

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __getitem__(self, edge_id):
        return self.edges[edge_id]

    def total(self, key):
        return sum(counts.get(key) for counts in self.edges)

    def __repr__(self):
        return "<MotifCounts edges=%s motifs=%s>" % (len(self.edges), len(self.motifs))


def _init_worker(graph, max_k):
    _worker["graph"] = graph
    _worker["scratch"] = ScratchState(graph)
    _worker["max_k"] = max_k


def _count_range(bounds):
    graph = _worker["graph"]
    scratch = _worker["scratch"]
    max_k = _worker["max_k"]
    start, stop = bounds
    edge_list = graph.edge_list[start:stop].tolist()
    return [
        count_edge(graph, (i, j), scratch, max_k=max_k, edge_id=edge_id)
        for edge_id, (i, j) in enumerate(edge_list, start)
    ]


def edge_ranges(num_edges, chunk_size):
    return [
        (start, min(start + chunk_size, num_edges))
        for start in range(0, num_edges, chunk_size)
    ]


def count_all(graph, workers=None, chunk_size=None, max_k=None):
    """
    Counts the typed orbits of every edge. ``workers``, ``chunk_size``
    and ``max_k`` default to the ``MOTIFS_WORKERS``,
    ``MOTIFS_CHUNK_SIZE`` and ``MOTIFS_MAX_K`` settings. With one
    worker everything runs in the calling process.
    """
    workers = settings.MOTIFS_WORKERS if workers is None else workers
    chunk_size = settings.MOTIFS_CHUNK_SIZE if chunk_size is None else chunk_size
    max_k = settings.MOTIFS_MAX_K if max_k is None else max_k
    if workers < 1:
        raise ContractViolation("At least one worker is needed, got %s" % workers)
    if chunk_size < 1:
        raise ContractViolation("Chunk size must be at least 1, got %s" % chunk_size)
    if max_k not in (3, 4):
        raise ContractViolation("max_k must be 3 or 4, got %s" % max_k)

    ranges = edge_ranges(graph.num_edges, chunk_size)
    pool_size = min(workers, len(ranges))
    start = perf_counter()
    edges = [None] * graph.num_edges
    if pool_size == 1:
        _init_worker(graph, max_k)
        try:
            chunks = map(_count_range, ranges)
            for (first, _), results in zip(ranges, chunks):
                edges[first : first + len(results)] = results
        finally:
            _worker.clear()
    else:
        with ProcessPoolExecutor(
            max_workers=pool_size,
            initializer=_init_worker,
            initargs=(graph, max_k),
        ) as executor:
            chunks = executor.map(_count_range, ranges)
            for (first, _), results in zip(ranges, chunks):
                edges[first : first + len(results)] = results
    elapsed = perf_counter() - start

    result = MotifCounts(graph, edges, max_k=max_k, workers=workers, elapsed=elapsed)
    logger.info(
        "Counted %s edges with %s worker(s) in %.3fs, %s distinct typed orbits",
        graph.num_edges,
        workers,
        elapsed,
        len(result.motifs),
    )
    return result
