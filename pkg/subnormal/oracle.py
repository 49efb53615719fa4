# subnormal/oracle.py

from __future__ import annotations

from functools import lru_cache

from sympy import isprime

from config.settings import ORACLE_ORDER_CAP
from formations.base import FormationSpec
from formations.registry import is_member
from groups.perm_group import PermGroup
from groups.permutation import Permutation
from lattice.structure import node_in
from lattice.subgroups import SubgroupLattice, SubgroupRef, all_subgroups
from subnormal.models import PolicyKind, StepPolicy
from utils.errors import CapacityError


def _admissible(p: int, t: int) -> bool:
    n = p - 1
    q = 2
    while q * q <= n:
        if n % q ** (t + 1) == 0:
            return False
        while n % q == 0:
            n //= q
        q += 1
    # lo que queda es 1 o un primo con exponente 1
    return True


# ------------------------------------------------------------------ #
#  Residuo propio del oráculo (sin formations.residual)
# ------------------------------------------------------------------ #

def _coset_quotient(elems: list[Permutation], n_set: set[Permutation], gens) -> PermGroup:
    """Y/N from the right cosets Nx, each generator acting by right multiplication."""
    coset_of: dict[Permutation, int] = {}
    reps: list[Permutation] = []
    for x in elems:
        if x in coset_of:
            continue
        reps.append(x)
        for n in n_set:
            coset_of[n * x] = len(reps) - 1
    if len(reps) == 1:
        return PermGroup.trivial(1)
    return PermGroup(len(reps), [Permutation(tuple(coset_of[r * g] for r in reps)) for g in gens])


def _residual_elements(Y: SubgroupRef, spec: FormationSpec) -> frozenset[Permutation]:
    """
    Y^F as an element set: the intersection of every normal N of Y (checked
    element by element) whose coset quotient lies in F.
    """
    Yg = Y.as_group()
    elems = Yg.elements()
    gens = Yg.generators
    ylat = all_subgroups(Yg)
    result = set(elems)
    for N in ylat.nodes:
        n_set = set(ylat.elements_of(N))
        if not all(n.conjugate_by(g) in n_set for g in gens for n in n_set):
            continue
        if is_member(_coset_quotient(elems, n_set, gens), spec):
            result &= n_set
    return frozenset(result)


def _edge_ok(lat: SubgroupLattice, X: SubgroupRef, Y: SubgroupRef, policy: StepPolicy, residuals: dict) -> bool:
    x_elems = set(lat.elements_of(X))
    normal = all(x.conjugate_by(y) in x_elems for y in Y.generators for x in x_elems)
    index = Y.order // X.order
    prime = bool(isprime(index))
    kind = policy.kind

    if kind is PolicyKind.SUBNORMAL:
        return normal
    if kind is PolicyKind.P_SUB:
        return prime
    if kind is PolicyKind.K_P_SUB:
        return normal or prime
    if kind is PolicyKind.K_P_T:
        return normal or (prime and _admissible(index, policy.t))

    if Y.node_id not in residuals:
        residuals[Y.node_id] = _residual_elements(Y, policy.formation)
    residual_in_x = residuals[Y.node_id] <= x_elems
    if kind is PolicyKind.F_SUB:
        return residual_in_x
    return normal or residual_in_x


@lru_cache(maxsize=64)
def _memo(G: PermGroup, policy: StepPolicy) -> tuple[dict, dict, dict]:
    # (edge verdicts, node -> reaches G, node -> residual); ninguno depende del subgrupo de partida
    return {}, {}, {}


def brute_force_oracle(G: PermGroup, H: SubgroupRef | PermGroup, policy: StepPolicy) -> bool:
    """
    Depth-first enumeration of strictly ascending subgroup sequences from H
    to G, every edge checked element by element. A node already known to
    reach G (or not) is not expanded again.
    """
    if G.order() > ORACLE_ORDER_CAP:
        raise CapacityError(f"oracle limited to order {ORACLE_ORDER_CAP}, got {G.order()}")

    lat = all_subgroups(G)
    start = node_in(lat, H)
    top = lat.full
    edges, reaches, residuals = _memo(G, policy)

    def edge(X: SubgroupRef, Y: SubgroupRef) -> bool:
        key = (X.node_id, Y.node_id)
        if key not in edges:
            edges[key] = _edge_ok(lat, X, Y, policy, residuals)
        return edges[key]

    def reach(X: SubgroupRef) -> bool:
        if X == top:
            return True
        if X.node_id in reaches:
            return reaches[X.node_id]
        result = False
        for Y in lat.nodes:
            if Y.order > X.order and X.mask & Y.mask == X.mask and edge(X, Y) and reach(Y):
                result = True
                break
        reaches[X.node_id] = result
        return result

    return reach(start)
