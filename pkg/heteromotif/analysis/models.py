import numpy as np

from heteromotif.core.exceptions import ContractViolation
from heteromotif.motifs import Graphlet
from heteromotif.motifs.codec import TYPES_MASK, decode, prefix


class GlobalCounts:
    """
    Whole-graph frequencies of typed graphlets, keyed by graphlet keys
    (see ``heteromotif.motifs.codec``). Every frequency is a positive
    integer. ``num_nodes``, ``num_edges`` and ``num_types`` describe the
    graph the counts come from.
    """

    def __init__(self, counts, num_nodes=None, num_edges=None, num_types=None):
        for key, count in counts.items():
            if count < 1:
                raise ContractViolation(
                    "Global counts must be positive, got %s for key %s" % (count, key)
                )
            motif, _ = decode(key)
            if not isinstance(motif, Graphlet):
                raise ContractViolation(
                    "Global counts are keyed by graphlet, got orbit key %s" % key
                )
        self.counts = dict(sorted(counts.items()))
        self.num_nodes = num_nodes
        self.num_edges = num_edges
        self.num_types = num_types

    def get(self, key):
        return self.counts.get(key, 0)

    def items(self):
        return self.counts.items()

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def __eq__(self, other):
        if not isinstance(other, GlobalCounts):
            return NotImplemented
        return self.counts == other.counts

    def variants(self, graphlet):
        """
        The ``(key, count)`` pairs of every typed variant of the given
        graphlet, in key order.
        """
        field = prefix(Graphlet(graphlet))
        return [
            (key, count)
            for key, count in self.counts.items()
            if key & ~TYPES_MASK == field
        ]

    def __repr__(self):
        return "<GlobalCounts keys=%s>" % len(self.counts)


class MotifDistribution:
    """
    Relative frequencies of the typed variants of one graphlet.

    ``support`` holds the variant keys sorted by descending probability
    then by key, and ``p`` the matching probabilities. A graphlet with
    no occurrence gives an empty distribution.
    """

    def __init__(self, graphlet, support, p):
        self.graphlet = Graphlet(graphlet)
        self.support = tuple(support)
        self.p = np.asarray(p, dtype=np.float64)
        if len(self.support) != len(self.p):
            raise ContractViolation("Support and probabilities differ in length")
        if len(self.p) and (self.p.min() < 0 or abs(self.p.sum() - 1.0) > 1e-12):
            raise ContractViolation("Probabilities must be non-negative and sum to 1")

    @classmethod
    def from_counts(cls, graphlet, pairs):
        pairs = sorted(pairs, key=lambda pair: (-pair[1], pair[0]))
        total = sum(count for _, count in pairs)
        support = [key for key, _ in pairs]
        p = [count / total for _, count in pairs] if total else []
        return cls(graphlet, support, p)

    def __len__(self):
        return len(self.support)

    def top(self, k):
        """
        The ``k`` most frequent variants as ``(key, probability)`` pairs.
        """
        return list(zip(self.support[:k], self.p[:k].tolist()))

    def __repr__(self):
        return "<MotifDistribution %s variants=%s>" % (self.graphlet.name, len(self))
