"""Exact-arithmetic homology of associative algebras: symmetric homology
via DG resolutions, the simplicial bar pipeline, the symmetric-category
calculus, Chevalley-Eilenberg/cobar machinery, and representation
homology with matrix coefficients.
"""

__version__ = "0.1.0"
