"""
Provides the shared parts of heteromotif: the exception hierarchy,
system checks for the registered settings, and the management
commands making up the ``heteromotif`` command-line interface.
"""
