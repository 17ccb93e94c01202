"""
Seeded random graph generators and random node type assignment, for
tests, scaling runs and type-shuffled baselines.
"""
