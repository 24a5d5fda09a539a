"""Generalized triangle inequality cones for the rank-3 root systems A3, B3 and C3.

The inequalities come from Schubert calculus on the flag varieties G/P,
computed with Demazure-BGG divided differences in exact rational arithmetic;
the cones are then analysed with an exact simplex and double description.
"""

from .analysis import ConeAnalysis, analyze
from .cone import HRep, VRep, cones_equal, extreme_rays_dd, facets_from_rays, farkas_redundant, minimal_facet_system
from .inequality import InequalitySystem, assemble_full_system
from .rootsys import RootSystem, build_root_system
from .weyl import WeylGroup, maximal_parabolic, weyl_group

__all__ = [
    "ConeAnalysis",
    "HRep",
    "InequalitySystem",
    "RootSystem",
    "VRep",
    "WeylGroup",
    "analyze",
    "assemble_full_system",
    "build_root_system",
    "cones_equal",
    "extreme_rays_dd",
    "facets_from_rays",
    "farkas_redundant",
    "maximal_parabolic",
    "minimal_facet_system",
    "weyl_group",
]

__version__ = "0.1.0"
