"""
Typed graphlet orbit counting for every edge of a heterogeneous graph.

Orbits are the edge positions within the connected graphlets on 2, 3
and 4 nodes. Their numbering is fixed, as it's part of the decimal
motif hash kept for compatibility.
"""
from enum import IntEnum


class Graphlet(IntEnum):
    EDGE = 0
    WEDGE = 1
    TRIANGLE = 2
    FOUR_PATH = 3
    FOUR_STAR = 4
    FOUR_CYCLE = 5
    TAILED_TRIANGLE = 6
    CHORDAL_CYCLE = 7
    FOUR_CLIQUE = 8


class Orbit(IntEnum):
    EDGE = 0
    WEDGE = 1
    TRIANGLE = 2
    FOUR_PATH_EDGE = 3
    FOUR_PATH_CENTER = 4
    FOUR_STAR = 5
    FOUR_CYCLE = 6
    TAILED_TRIANGLE_TAIL_EDGE = 7
    TAILED_TRIANGLE_CENTER = 8
    TAILED_TRIANGLE_TRI_EDGE = 9
    CHORDAL_CYCLE_EDGE = 10
    CHORDAL_CYCLE_CENTER = 11
    FOUR_CLIQUE = 12


# name, node count, edge count
GRAPHLETS = {
    Graphlet.EDGE: ("edge", 2, 1),
    Graphlet.WEDGE: ("3-path", 3, 2),
    Graphlet.TRIANGLE: ("triangle", 3, 3),
    Graphlet.FOUR_PATH: ("4-path", 4, 3),
    Graphlet.FOUR_STAR: ("4-star", 4, 3),
    Graphlet.FOUR_CYCLE: ("4-cycle", 4, 4),
    Graphlet.TAILED_TRIANGLE: ("tailed-triangle", 4, 4),
    Graphlet.CHORDAL_CYCLE: ("chordal-cycle", 4, 5),
    Graphlet.FOUR_CLIQUE: ("4-clique", 4, 6),
}

# name, graphlet the orbit belongs to
ORBITS = {
    Orbit.EDGE: ("edge", Graphlet.EDGE),
    Orbit.WEDGE: ("3-path", Graphlet.WEDGE),
    Orbit.TRIANGLE: ("triangle", Graphlet.TRIANGLE),
    Orbit.FOUR_PATH_EDGE: ("4-path-edge", Graphlet.FOUR_PATH),
    Orbit.FOUR_PATH_CENTER: ("4-path-center", Graphlet.FOUR_PATH),
    Orbit.FOUR_STAR: ("4-star", Graphlet.FOUR_STAR),
    Orbit.FOUR_CYCLE: ("4-cycle", Graphlet.FOUR_CYCLE),
    Orbit.TAILED_TRIANGLE_TAIL_EDGE: (
        "tailed-triangle-tail-edge",
        Graphlet.TAILED_TRIANGLE,
    ),
    Orbit.TAILED_TRIANGLE_CENTER: ("tailed-triangle-center", Graphlet.TAILED_TRIANGLE),
    Orbit.TAILED_TRIANGLE_TRI_EDGE: (
        "tailed-triangle-tri-edge",
        Graphlet.TAILED_TRIANGLE,
    ),
    Orbit.CHORDAL_CYCLE_EDGE: ("chordal-cycle-edge", Graphlet.CHORDAL_CYCLE),
    Orbit.CHORDAL_CYCLE_CENTER: ("chordal-cycle-center", Graphlet.CHORDAL_CYCLE),
    Orbit.FOUR_CLIQUE: ("4-clique", Graphlet.FOUR_CLIQUE),
}


def graphlet_of(orbit):
    return ORBITS[Orbit(orbit)][1]


def node_count(motif):
    """
    Number of nodes of an orbit or graphlet.
    """
    if isinstance(motif, Orbit):
        motif = graphlet_of(motif)
    return GRAPHLETS[motif][1]


def edge_count(motif):
    """
    Number of edges of the graphlet an orbit or graphlet stands for.
    """
    if isinstance(motif, Orbit):
        motif = graphlet_of(motif)
    return GRAPHLETS[motif][2]
