"""Exact computations for del Pezzo surfaces with a single 1/k(1,1) point."""

from .catalog import catalog_ids, cascade_size, family_record
from .hilbert import anticanonical_hilbert_P11k, cascade_hilbert, cascade_numerator
from .mutation import fundamental_group_invariant, mutate, quiver, reduced_quiver
from .polygon import LatticePolygon, convex_hull, degree, normal_form, singularity_content
from .rootsys import PolarizedLattice, enumerate_roots, summarize
from .scaffolding import Scaffolding, git_equivalent, laurent_invert

__version__ = "0.1.0"

__all__ = [
    "LatticePolygon", "PolarizedLattice", "Scaffolding",
    "anticanonical_hilbert_P11k", "cascade_hilbert", "cascade_numerator", "cascade_size", "catalog_ids",
    "convex_hull", "degree", "enumerate_roots", "family_record", "fundamental_group_invariant",
    "git_equivalent", "laurent_invert", "mutate", "normal_form", "quiver",
    "reduced_quiver", "singularity_content", "summarize",
]
