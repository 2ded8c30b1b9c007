"""Fixed-limit Texas Hold'em research toolkit."""

__version__ = "0.1.0"
