"""Torus actions on projective varieties: root polytopes, compasses,
equivariant localization and Riemann-Roch for contact manifolds."""

from .weights import Lattice, Projection, Weight

__version__ = "0.1.0"

__all__ = ["Lattice", "Projection", "Weight", "__version__"]
