# lattice/structure.py

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from groups.perm_group import PermGroup
from lattice.subgroups import SubgroupLattice, SubgroupRef, all_subgroups
from utils.errors import ArgumentError
from utils.numbers import p_part, prime_divisors, require_prime


@dataclass(frozen=True)
class ChiefSeries:
    terms: tuple[SubgroupRef, ...]   # 1 = terms[0] < ... < terms[-1] = G

    def factors(self) -> list[tuple[SubgroupRef, SubgroupRef]]:
        """(H, K) pairs with K < H consecutive."""
        return [(self.terms[i + 1], self.terms[i]) for i in range(len(self.terms) - 1)]

    def factor_orders(self) -> list[int]:
        return [h.order // k.order for h, k in self.factors()]


def node_in(lat: SubgroupLattice, H: SubgroupRef | PermGroup) -> SubgroupRef:
    """
    The lattice's own node for H. Masks only mean something in the lattice
    that produced them; a node of any other lattice is looked up again
    through its generators.
    """
    if isinstance(H, SubgroupRef):
        if H.parent is lat.group:
            return lat.node_of_mask(H.mask)
        return lat.generated_by(H.generators)
    return lat.locate(H)


def normalizer(G: PermGroup, H: SubgroupRef | PermGroup) -> SubgroupRef:
    lat = all_subgroups(G)
    return lat.node_of_mask(lat.normalizer_mask(node_in(lat, H)))


def conjugate_mask(lat: SubgroupLattice, node: SubgroupRef, g: int) -> int:
    out = 0
    for x in node.element_key:
        out |= 1 << lat.table.conj(x, g)
    return out


def conjugates(G: PermGroup, H: SubgroupRef | PermGroup) -> list[SubgroupRef]:
    """Distinct conjugates of H in G, in lattice order."""
    lat = all_subgroups(G)
    node = node_in(lat, H)
    masks = {conjugate_mask(lat, node, g) for g in range(len(lat.table))}
    return sorted((lat.node_of_mask(m) for m in masks), key=lambda n: n.node_id)


def core(G: PermGroup, M: SubgroupRef | PermGroup) -> SubgroupRef:
    lat = all_subgroups(G)
    return lat.intersect_all(conjugates(G, M))


def sylow(G: PermGroup, p: int) -> SubgroupRef:
    require_prime(p)
    lat = all_subgroups(G)
    target = p_part(G.order(), p)
    # el primer nodo del orden p^a: menor element_key entre los de ese orden
    return next(n for n in lat.nodes if n.order == target)


def all_sylows(G: PermGroup, p: int) -> list[SubgroupRef]:
    return conjugates(G, sylow(G, p))


def maximal_subgroups(G: PermGroup) -> list[SubgroupRef]:
    lat = all_subgroups(G)
    if len(lat) == 1:
        return []
    return [lat.nodes[i] for i in sorted(lat.hasse.predecessors(lat.full.node_id))]


def minimal_normal_subgroups(G: PermGroup) -> list[SubgroupRef]:
    if G.is_trivial():
        raise ArgumentError("the trivial group has no minimal normal subgroups")
    lat = all_subgroups(G)
    candidates = [n for n in lat.normal_subgroups() if n.order > 1]
    return [n for n in candidates if not any(m < n for m in candidates)]


def frattini(G: PermGroup) -> SubgroupRef:
    lat = all_subgroups(G)
    maxes = maximal_subgroups(G)
    return lat.intersect_all(maxes) if maxes else lat.trivial


def o_p(G: PermGroup, p: int) -> SubgroupRef:
    return core(G, sylow(G, p))


def fitting(G: PermGroup) -> SubgroupRef:
    lat = all_subgroups(G)
    result = lat.trivial
    for p in prime_divisors(G.order()):
        result = lat.join(result, o_p(G, p))
    return result


def derived_subgroup(G: PermGroup) -> SubgroupRef:
    return all_subgroups(G).locate(G.derived_subgroup())


def center(G: PermGroup) -> SubgroupRef:
    return all_subgroups(G).locate(G.center())


# ------------------------------------------------------------------ #
#  Series principales
# ------------------------------------------------------------------ #

def _normal_covers(lat: SubgroupLattice, node: SubgroupRef) -> list[SubgroupRef]:
    above = [n for n in lat.normal_subgroups() if node < n]
    return [n for n in above if not any(m < n for m in above)]


def chief_series(G: PermGroup) -> ChiefSeries:
    """
    Bottom-up maximal chain of normal subgroups; at every step the minimal
    normal cover with the smallest element_key (plain tuple order) is taken.
    """
    lat = all_subgroups(G)
    terms = [lat.trivial]
    while terms[-1] != lat.full:
        terms.append(min(_normal_covers(lat, terms[-1]), key=lambda n: n.element_key))
    return ChiefSeries(tuple(terms))


def all_chief_series(G: PermGroup) -> Iterator[ChiefSeries]:
    """Every chief series of G (maximal chains of the normal sublattice)."""
    lat = all_subgroups(G)

    def extend(prefix: list[SubgroupRef]) -> Iterator[ChiefSeries]:
        if prefix[-1] == lat.full:
            yield ChiefSeries(tuple(prefix))
            return
        for cover in _normal_covers(lat, prefix[-1]):
            yield from extend(prefix + [cover])

    yield from extend([lat.trivial])


def is_chief_factor(G: PermGroup, H: SubgroupRef, K: SubgroupRef) -> bool:
    lat = all_subgroups(G)
    H, K = node_in(lat, H), node_in(lat, K)
    if not (lat.is_normal(H) and lat.is_normal(K) and K < H):
        return False
    return H in _normal_covers(lat, K)


def chief_centralizer(G: PermGroup, H: SubgroupRef, K: SubgroupRef) -> SubgroupRef:
    """C_G(H/K) = {g : [g, h] in K for every h in H}."""
    lat = all_subgroups(G)
    H, K = node_in(lat, H), node_in(lat, K)
    if not is_chief_factor(G, H, K):
        raise ArgumentError("H/K is not a chief factor of G")

    t = lat.table
    k_mask = K.mask
    mask = 0
    for g in range(len(t)):
        if all((k_mask >> t.commutator(g, h)) & 1 for h in H.element_key):
            mask |= 1 << g
    return lat.node_of_mask(mask)


def automizer_is_abelian_of_exponent_dividing(
    G: PermGroup, H: SubgroupRef, K: SubgroupRef, m: int
) -> bool:
    """
    G/C_G(H/K) abelian with exponent dividing m: commutators of the
    generators of G and m-th powers of all elements land in the centralizer.
    """
    return quotient_is_abelian_of_exponent_dividing(G, chief_centralizer(G, H, K), m)


def quotient_is_abelian_of_exponent_dividing(G: PermGroup, N: SubgroupRef | PermGroup, m: int) -> bool:
    """G/N abelian with exponent dividing m, decided inside G's Cayley table."""
    if m < 1:
        raise ArgumentError(f"m must be positive, got {m}")
    lat = all_subgroups(G)
    node = node_in(lat, N)
    if not lat.is_normal(node):
        raise ArgumentError("G/N requested for a subgroup that is not normal")
    t = lat.table
    gens = [t.index[g] for g in G.generators]
    if not all((node.mask >> t.commutator(a, b)) & 1 for a in gens for b in gens):
        return False
    return all((node.mask >> t.power(g, m)) & 1 for g in range(len(t)))
