"""
Services package - billiards, plabic graphs, enumeration, verification and output.
"""
from src.services.billiards import (
    BilliardsPermutation,
    analyze,
    billiards_permutation,
    trace_beam,
    trajectory,
)
from src.services.plabic import PlabicGraph, dual, trip, trip_permutation

__all__ = [
    "BilliardsPermutation",
    "analyze",
    "billiards_permutation",
    "trace_beam",
    "trajectory",
    "PlabicGraph",
    "dual",
    "trip",
    "trip_permutation",
]
