"""Classification and exact verification of hyperspherical equivariant slices."""

__version__ = "0.1.0"
