# formations/residual.py

from __future__ import annotations

import logging

from formations.base import FormationSpec
from formations.registry import is_member
from groups.homomorphism import quotient
from groups.perm_group import PermGroup
from lattice.subgroups import SubgroupRef, all_subgroups
from utils.errors import ArgumentError

logger = logging.getLogger(__name__)


def quotient_in(G: PermGroup, N: SubgroupRef, spec: FormationSpec) -> bool:
    """G/N ∈ F."""
    if N.order == G.order():
        return is_member(PermGroup.trivial(1), spec)
    Q, _ = quotient(G, N.as_group())
    return is_member(Q, spec)


def residual(G: PermGroup, spec: FormationSpec) -> SubgroupRef:
    """
    G^F: intersection of every normal N with G/N ∈ F, found by a full scan of
    the normal subgroups. When no quotient qualifies the residual is G.
    """
    lat = all_subgroups(G)
    if is_member(G, spec):
        return lat.trivial

    candidates = [N for N in lat.normal_subgroups() if quotient_in(G, N, spec)]
    if not candidates:
        return lat.full

    result = lat.intersect_all(candidates)
    if not quotient_in(G, result, spec):
        raise ArgumentError(f"{spec.label} is not closed under subdirect products on this group")
    logger.debug("Residual for %s: order %d inside order %d", spec.label, result.order, G.order())
    return result
