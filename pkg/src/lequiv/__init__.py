"""Exact class computations, lattice classification and finite-field counts
around the duality of elliptic quintics and index-five elliptic K3 surfaces."""

__version__ = "0.1.0"
