"""
twopage: 2-page book drawings of the complete graph.
Crossing counts, k-edges, the 4n-element equivalence group, optimal constructions
and exhaustive class enumeration.
"""

__version__ = "1.0.0"
__author__ = "twopage maintainers"
