"""Exact quaternion-lattice enumeration and numerical spectral analysis workbench."""

__version__ = "0.1.0"
