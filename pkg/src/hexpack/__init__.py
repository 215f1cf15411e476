"""Computer-checkable ingredients for the hexagonal and dodecahedral packing bounds."""

__version__ = "0.1.0"
