"""
Heterogeneous graph model: an immutable, compressed adjacency form of
a simple undirected graph with typed nodes, plus the text loaders,
writers and binary cache used to get graphs in and out of it.
"""
