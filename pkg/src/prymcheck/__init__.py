"""Exact checks of the computations behind the degree-10 Prym map for cyclic degree-7 covers of genus-2 curves."""

__version__ = "0.1.0"
