"""Exact tools for finite quadratic spaces, even-lattice genera, abelian
modular data, and the binary-code mass counts attached to framed extensions."""

__version__ = "0.1.0"
