"""virtlink: combinatorics of virtual links on their Carter surfaces."""

__version__ = "0.1.0"
