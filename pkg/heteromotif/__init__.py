__version__ = "0.1.0"  # Do not edit, managed by semantic-release
