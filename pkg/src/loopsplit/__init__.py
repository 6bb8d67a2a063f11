"""Mod 2 cohomological checks of the stable splitting of free loop spaces of
rank one symmetric spaces."""

from .algebra import GradedF2Module, PoincareSeries, RingElement, TruncPolyRing
from .loopspace import assemble_splitting, bo_description, catalog, morse_index

__all__ = [
    "GradedF2Module",
    "PoincareSeries",
    "RingElement",
    "TruncPolyRing",
    "assemble_splitting",
    "bo_description",
    "catalog",
    "morse_index",
]
