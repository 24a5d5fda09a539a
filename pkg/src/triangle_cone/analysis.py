"""End-to-end computation of one cone: inequalities, redundancy, facets, rays."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cone import HRep, ReductionReport, VRep, extreme_rays_dd, reduce_system
from .inequality import (
    InequalitySystem,
    assemble_full_system,
    canonical_key,
    chamber_system,
    trivially_redundant,
)
from .rootsys import RootSystem, build_root_system

FAMILIES = ("A3", "B3", "C3")


@dataclass(frozen=True)
class ConeAnalysis:
    root_system: RootSystem
    system: InequalitySystem
    hrep: HRep
    reduction: ReductionReport
    rays: VRep
    trivially_redundant: frozenset[int]  # indices into system.inequalities

    @property
    def facets(self) -> HRep:
        return self.reduction.facets

    @property
    def removed(self) -> frozenset[int]:
        return frozenset(v.index for v in self.reduction.removed)

    @property
    def further_redundant(self) -> frozenset[int]:
        """Removed rows that are not consequences of the chamber alone."""
        return self.removed - self.trivially_redundant

    def key(self, i: int) -> tuple[int, ...]:
        return canonical_key(self.root_system, self.system.inequalities[i].coeffs)


def system_hrep(system: InequalitySystem) -> HRep:
    rows = system.inequalities
    H = HRep.from_rows(system.dimension, [q.coeffs for q in rows], system.equalities, [q.label for q in rows])
    if len(H.inequalities) != len(rows):
        raise ValueError("assembled system contains rows equal modulo the equalities")
    return H


@lru_cache(maxsize=None)
def analyze(family: str) -> ConeAnalysis:
    rs = build_root_system(family)
    system = assemble_full_system(rs)
    H = system_hrep(system)
    chamber, eqs = chamber_system(rs)
    trivial = frozenset(
        i
        for i, q in enumerate(system.inequalities)
        if q.parabolic is not None and trivially_redundant(q, chamber, eqs).redundant
    )
    reduction = reduce_system(H)
    rays = extreme_rays_dd(reduction.facets)
    return ConeAnalysis(rs, system, H, reduction, rays, trivial)
