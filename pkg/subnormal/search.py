# subnormal/search.py

"""
Subnormality variants as reachability in the containment digraph.

A chain H = H_0 <= H_1 <= ... <= H_n = G may repeat terms; dropping the
repeats leaves a path of strict inclusions, so it is enough to search
strict edges (plus the zero-length chain when H = G). The search is a
breadth-first walk, so the witness is a shortest chain; neighbours are
visited in lattice order, which fixes ties by element_key.
"""

from __future__ import annotations

import logging

import networkx as nx

from formations.residual import residual
from groups.perm_group import PermGroup
from lattice.structure import node_in
from lattice.subgroups import SubgroupLattice, SubgroupRef, all_subgroups
from subnormal.models import ChainWitness, NormalStep, PolicyKind, PrimeStep, ResidualStep, StepPolicy
from subnormal.policies import step_tag
from utils.errors import ArgumentError
from utils.numbers import is_prime

logger = logging.getLogger(__name__)


def is_subnormal_variant(
    G: PermGroup, H: SubgroupRef | PermGroup, policy: StepPolicy
) -> tuple[bool, ChainWitness | None]:
    lat = all_subgroups(G)
    start = node_in(lat, H)
    target = lat.full
    if start == target:
        return True, ChainWitness([start])

    tags: dict[tuple[int, int], object] = {}

    def allowed(u: int, v: int) -> bool:
        key = (u, v)
        if key not in tags:
            tags[key] = step_tag(lat, lat.nodes[u], lat.nodes[v], policy)
        return tags[key] is not None

    view = nx.subgraph_view(lat.containment, filter_edge=allowed)
    parent: dict[int, int] = {}
    for u, v in nx.bfs_edges(view, start.node_id):
        parent[v] = u
        if v == target.node_id:
            break

    if target.node_id not in parent:
        logger.debug("No %s chain from order %d to order %d", policy.label, start.order, target.order)
        return False, None

    path = [target.node_id]
    while path[-1] != start.node_id:
        path.append(parent[path[-1]])
    path.reverse()
    nodes = [lat.nodes[i] for i in path]
    steps = [tags[(path[i], path[i + 1])] for i in range(len(path) - 1)]
    return True, ChainWitness(nodes, steps)


def is_subnormal(G: PermGroup, H: SubgroupRef | PermGroup, policy: StepPolicy) -> bool:
    return is_subnormal_variant(G, H, policy)[0]


# ------------------------------------------------------------------ #
#  Testigos
# ------------------------------------------------------------------ #

def _gens_text(node: SubgroupRef) -> str:
    return ",".join(g.to_cycle_string() for g in node.generators) or "()"


def serialize(witness: ChainWitness) -> str:
    """
    One line per subgroup, `order=<n> gens=<cycles>`, with the tag of the
    incoming edge as suffix. The zero-length chain serialises to "".
    """
    if not witness.steps:
        return ""
    lines = [f"order={witness.nodes[0].order} gens={_gens_text(witness.nodes[0])}"]
    for _, y, step in witness.edges():
        lines.append(f"order={y.order} gens={_gens_text(y)} {step.tag()}")
    return "\n".join(lines)


def _is_normal_direct(X: SubgroupRef, Y: SubgroupRef) -> bool:
    elems = set(all_subgroups(X.parent).elements_of(X))
    return all(x.conjugate_by(y) in elems for y in Y.generators for x in X.generators)


def validate_witness(witness: ChainWitness, policy: StepPolicy) -> bool:
    """
    Replay every edge with element-level checks that do not go through the
    lattice's normalizer tables or the search's cached tags.
    """
    G = witness.start.parent
    lat = all_subgroups(G)
    if witness.end != lat.full:
        return False
    kind = policy.kind
    for X, Y, step in witness.edges():
        if not (X < Y):
            return False
        index = Y.order // X.order
        if isinstance(step, NormalStep):
            if kind in (PolicyKind.P_SUB, PolicyKind.F_SUB) or not _is_normal_direct(X, Y):
                return False
        elif isinstance(step, PrimeStep):
            if kind not in (PolicyKind.P_SUB, PolicyKind.K_P_SUB, PolicyKind.K_P_T):
                return False
            if step.p != index or not is_prime(index):
                return False
            if kind is PolicyKind.K_P_T and any(e > policy.t for e in _multiplicities(index - 1)):
                return False
        elif isinstance(step, ResidualStep):
            if kind not in (PolicyKind.F_SUB, PolicyKind.K_F_SUB):
                return False
            R = residual(Y.as_group(), policy.formation)
            x_elems = set(lat.elements_of(X))
            if not all(g in x_elems for g in R.generators):
                return False
        else:
            return False
    return True


def _multiplicities(n: int) -> list[int]:
    out = []
    q = 2
    while n > 1:
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        if e:
            out.append(e)
        q += 1
    return out


def relocate(witness: ChainWitness, lat: SubgroupLattice) -> ChainWitness:
    """The same chain with nodes re-expressed in another lattice (of an overgroup)."""
    return ChainWitness([lat.generated_by(n.generators) for n in witness.nodes], list(witness.steps))


def compose_witnesses(a: ChainWitness, b: ChainWitness) -> ChainWitness:
    """H -> ... -> R followed by R -> ... -> G, both in the same lattice."""
    if a.end != b.start:
        raise ArgumentError("witnesses do not meet: the first must end where the second starts")
    return ChainWitness(a.nodes + b.nodes[1:], a.steps + b.steps)
