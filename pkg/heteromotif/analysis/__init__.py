"""
Aggregation of per-edge counts: the roll-up from orbits to graphlets,
global typed graphlet frequencies, typed motif distributions and the
summaries built on them.
"""
