"""Weight Dirac engine: exact Dirac cohomology and Euler-Poincare pairings of weight modules."""

__version__ = "0.1.0"
