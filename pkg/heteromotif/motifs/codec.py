"""
Canonical integer keys for typed motifs.

A key packs an 8 bit motif field above four 12 bit type fields::

    | motif (8) | t1 (12) | t2 (12) | t3 (12) | t4 (12) |

The types are sorted ascending and unused trailing fields are zero, so
any ordering of the same type multiset gives the same key, and keys
decode back to ``(motif, sorted types)``. Orbit keys store the orbit id
in the motif field. Graphlet keys, used for graphlet-level roll-ups,
set the high bit of that field so the two never collide.
"""

from itertools import combinations_with_replacement
from typing import NamedTuple

from heteromotif.core.exceptions import ContractViolation
from heteromotif.motifs import (
    GRAPHLETS,
    ORBITS,
    Graphlet,
    Orbit,
    graphlet_of,
    node_count,
)

TYPE_BITS = 12
MAX_TYPE = (1 << TYPE_BITS) - 1
MOTIF_SHIFT = 4 * TYPE_BITS
GRAPHLET_FLAG = 0x80
TYPES_MASK = (1 << MOTIF_SHIFT) - 1


def as_motif(motif):
    if isinstance(motif, Graphlet):
        return motif
    try:
        return Orbit(motif)
    except ValueError:
        raise ContractViolation("Unknown orbit: %r" % (motif,))


def motif_field(motif):
    motif = as_motif(motif)
    if isinstance(motif, Graphlet):
        return GRAPHLET_FLAG | int(motif)
    return int(motif)


def prefix(motif):
    """
    The key bits of the motif field alone, to be or-ed with packed types.
    """
    return motif_field(motif) << MOTIF_SHIFT


def encode(motif, types):
    """
    Returns the canonical key for an orbit (or graphlet) and the types
    of its nodes, given in any order.
    """
    motif = as_motif(motif)
    k = node_count(motif)
    if len(types) != k:
        raise ContractViolation(
            "%s has %s nodes, got %s types" % (motif_name(motif), k, len(types))
        )
    key = motif_field(motif)
    for t in sorted(types):
        if not 1 <= t <= MAX_TYPE:
            raise ContractViolation("Type ids must be in 1..%s, got %s" % (MAX_TYPE, t))
        key = (key << TYPE_BITS) | t
    return key << (TYPE_BITS * (4 - k))


# Unchecked packing used by the counting loops. ``p`` is ``prefix(motif)``.


def pack2(p, a, b):
    if a > b:
        a, b = b, a
    return p | a << 36 | b << 24


def pack3(p, a, b, c):
    if a > b:
        a, b = b, a
    if b > c:
        b, c = c, b
        if a > b:
            a, b = b, a
    return p | a << 36 | b << 24 | c << 12


def pack4(p, a, b, c, d):
    a, b, c, d = sorted((a, b, c, d))
    return p | a << 36 | b << 24 | c << 12 | d


def graphlet_key(key):
    """
    Rolls an orbit key up to the key of its graphlet with the same
    types. Graphlet keys are returned unchanged.
    """
    field = key >> MOTIF_SHIFT
    if field & GRAPHLET_FLAG:
        return key
    return prefix(graphlet_of(field)) | (key & TYPES_MASK)


def decode(key):
    """
    Returns ``(motif, types)`` for a key, ``motif`` being an ``Orbit``
    or a ``Graphlet`` and ``types`` the sorted type tuple.
    """
    if not isinstance(key, int) or key < 0 or key >> (MOTIF_SHIFT + 8):
        raise ContractViolation("Malformed motif key: %r" % (key,))
    field = key >> MOTIF_SHIFT
    try:
        if field & GRAPHLET_FLAG:
            motif = Graphlet(field & ~GRAPHLET_FLAG)
        else:
            motif = Orbit(field)
    except ValueError:
        raise ContractViolation("Malformed motif key %s: unknown motif field" % key)
    k = node_count(motif)
    fields = [(key >> (TYPE_BITS * (3 - n))) & MAX_TYPE for n in range(4)]
    types, padding = fields[:k], fields[k:]
    if any(padding) or 0 in types or types != sorted(types):
        raise ContractViolation("Malformed motif key %s: bad type fields" % key)
    return motif, tuple(types)


def motif_name(motif):
    if isinstance(motif, Graphlet):
        return GRAPHLETS[motif][0]
    return ORBITS[Orbit(motif)][0]


class MotifDescription(NamedTuple):
    motif: object
    name: str
    k: int
    num_edges: int
    types: tuple

    def __str__(self):
        return "%s, k=%s, |E|=%s, types {%s}" % (
            self.name,
            self.k,
            self.num_edges,
            ",".join(map(str, self.types)),
        )


def describe(key):
    """
    Human readable description of a key, as used by the lookup table
    written next to per-edge counts.
    """
    motif, types = decode(key)
    graphlet = motif if isinstance(motif, Graphlet) else ORBITS[motif][1]
    _, k, num_edges = GRAPHLETS[graphlet]
    return MotifDescription(motif, motif_name(motif), k, num_edges, types)


def type_multisets(k, num_types):
    """
    Every sorted type vector of length ``k`` over ``1..num_types``.
    """
    return combinations_with_replacement(range(1, num_types + 1), k)


def decimal_hash(motif, types, num_types=None, wide=False):
    """
    Decimal motif hash, ``g*10^4 + t1*10^3 + t2*10^2 + t3*10 + t4``,
    or with ``wide`` set ``g*10^8 + t1*10^6 + t2*10^4 + t3*10^2 + t4``
    for up to 99 types. Types are used in the order given, and padded
    with trailing zeros for motifs on fewer than 4 nodes. Kept for
    compatibility with tools using it, keys everywhere else come from
    ``encode()``.
    """
    types = list(types)
    if len(types) > 4:
        raise ContractViolation("At most 4 types, got %s" % len(types))
    digits, motif_scale = (2, 10**8) if wide else (1, 10**4)
    base = 10**digits
    largest = num_types if num_types is not None else max(types, default=0)
    if largest >= base:
        hint = "" if wide else ", use wide=True for 10 or more types"
        raise ContractViolation(
            "The decimal hash only supports types below %s%s" % (base, hint)
        )
    value = int(as_motif(motif)) * motif_scale
    for position, t in enumerate(types + [0] * (4 - len(types))):
        value += t * base ** (3 - position)
    return value
