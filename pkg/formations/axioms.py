# formations/axioms.py

"""
Corpus-level checks of the closure properties of a group class.

A class is given as a membership callable, so the same checks serve the
built-in formations (`membership(spec)`) and the classes defined through
subnormality (H_t, wF, ...). Each check returns the offending subgroups;
an empty list means the property holds on G.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable

from formations.base import FormationSpec
from formations.registry import is_member
from formations.residual import residual
from groups.homomorphism import quotient
from groups.perm_group import PermGroup, direct_product
from lattice.structure import frattini
from lattice.subgroups import SubgroupRef, all_subgroups

Member = Callable[[PermGroup], bool]


def membership(spec: FormationSpec) -> Member:
    def member(G: PermGroup) -> bool:
        return is_member(G, spec)

    return member


def factor_group(G: PermGroup, N: SubgroupRef) -> PermGroup:
    """G/N as a permutation group; G/G is the trivial group on one point."""
    if N.order == G.order():
        return PermGroup.trivial(1)
    Q, _ = quotient(G, N.as_group())
    return Q


def quotient_closure_failures(G: PermGroup, member: Member) -> list[SubgroupRef]:
    """Normal N with G in the class but G/N outside it."""
    if not member(G):
        return []
    return [N for N in all_subgroups(G).normal_subgroups() if not member(factor_group(G, N))]


def subdirect_closure_failures(G: PermGroup, member: Member) -> list[tuple[SubgroupRef, SubgroupRef]]:
    """Pairs N1, N2 with G/N1, G/N2 in the class and G/(N1 ∩ N2) outside it."""
    lat = all_subgroups(G)
    good = [N for N in lat.normal_subgroups() if member(factor_group(G, N))]
    good_masks = {N.mask for N in good}
    failures = []
    for a, b in combinations(good, 2):
        meet = lat.intersect(a, b)
        if meet.mask not in good_masks:
            failures.append((a, b))
    return failures


def heredity_failures(G: PermGroup, member: Member) -> list[SubgroupRef]:
    """Subgroups of a member that fall outside the class."""
    if not member(G):
        return []
    return [H for H in all_subgroups(G) if not member(H.as_group())]


def saturation_holds(G: PermGroup, member: Member) -> bool | None:
    """
    G/Φ(G) in the class implies G in it. None when Φ(G) = 1 (nothing to check).
    """
    phi = frattini(G)
    if phi.order == 1:
        return None
    return not member(factor_group(G, phi)) or member(G)


def direct_product_holds(G1: PermGroup, G2: PermGroup, member: Member) -> bool | None:
    """G1, G2 in the class implies G1 x G2 in it. None when a factor is outside."""
    if not (member(G1) and member(G2)):
        return None
    return member(direct_product(G1, G2))


def residual_commutes_with_quotient(G: PermGroup, N: SubgroupRef, spec: FormationSpec) -> bool:
    """(G/N)^F = G^F N / N, compared by order through the quotient map."""
    lat = all_subgroups(G)
    R = residual(G, spec)
    if N.order == G.order():
        return True
    Q, hom = quotient(G, N.as_group())
    image = lat.map_through(hom, lat.join(R, N), all_subgroups(Q))
    return residual(Q, spec).order == image.order
