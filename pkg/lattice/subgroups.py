# lattice/subgroups.py

"""
Subgroup lattice of a desk-scale permutation group.

Elements of the parent are numbered by their position in G.elements()
(lexicographic on image arrays). A subgroup is stored as a bitmask over
those numbers (Python int) and identified by its sorted index tuple,
the `element_key`. Enumeration seeds with the cyclic subgroups and joins
(subgroup, cyclic generator outside it) until nothing new appears.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

import networkx as nx
import numpy as np

from config.settings import LATTICE_ORDER_CAP
from groups.homomorphism import Homomorphism
from groups.perm_group import PermGroup
from groups.permutation import Permutation
from utils.errors import ArgumentError, CapacityError, MembershipError

logger = logging.getLogger(__name__)


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def indices_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class ElementTable:
    """
    Cayley table of a group: mult[a][b] is the index of compose(a, b).
    Built row by row with numpy fancy indexing (row b of arr[:, arr[a]] is b∘a
    in image-array form, i.e. "first a, then b").
    """

    def __init__(self, group: PermGroup) -> None:
        self.elements: list[Permutation] = group.elements()
        self.index: dict[Permutation, int] = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)

        arr = np.array([e.images for e in self.elements], dtype=np.int32)
        by_images = {e.images: i for i, e in enumerate(self.elements)}
        table = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            products = arr[:, arr[a]]
            table[a] = [by_images[tuple(row)] for row in products.tolist()]

        self.identity = by_images[tuple(range(group.degree))]
        self.table = table
        self.mult: list[list[int]] = table.tolist()
        self.inverse: list[int] = np.argmax(table == self.identity, axis=1).tolist()
        self.orders: list[int] = [e.order() for e in self.elements]

    def __len__(self) -> int:
        return len(self.elements)

    def conj(self, x: int, g: int) -> int:
        """g^-1 x g."""
        mult = self.mult
        return mult[mult[self.inverse[g]][x]][g]

    def closure(self, gens: Iterable[int]) -> int:
        """Bitmask of the subgroup generated by the given element indices."""
        gens = [g for g in gens if g != self.identity]
        mask = 1 << self.identity
        frontier = [self.identity]
        mult = self.mult
        while frontier:
            nxt = []
            for x in frontier:
                row = mult[x]
                for g in gens:
                    y = row[g]
                    bit = 1 << y
                    if not mask & bit:
                        mask |= bit
                        nxt.append(y)
            frontier = nxt
        return mask

    def commutator(self, g: int, h: int) -> int:
        """g^-1 h^-1 g h."""
        mult, inv = self.mult, self.inverse
        return mult[mult[mult[inv[g]][inv[h]]][g]][h]

    def power(self, g: int, m: int) -> int:
        result = self.identity
        for _ in range(m % self.orders[g]):
            result = self.mult[result][g]
        return result


@dataclass(frozen=True, eq=False)
class SubgroupRef:
    parent: PermGroup = field(repr=False)
    element_key: tuple[int, ...]
    generators: tuple[Permutation, ...] = field(repr=False)
    node_id: int = -1
    mask: int = field(default=0, repr=False)

    @property
    def order(self) -> int:
        return len(self.element_key)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubgroupRef):
            return NotImplemented
        return self.element_key == other.element_key

    def __hash__(self) -> int:
        return hash(self.element_key)

    def __le__(self, other: SubgroupRef) -> bool:
        return self.mask & other.mask == self.mask

    def __lt__(self, other: SubgroupRef) -> bool:
        return self.mask != other.mask and self <= other

    def as_group(self) -> PermGroup:
        return PermGroup(self.parent.degree, self.generators)


class SubgroupLattice:
    """
    All subgroups of `group`, sorted by (order, element_key): node 0 is the
    trivial subgroup and the last node is the group itself.

    `containment` holds every strict inclusion X -> Y with the index as edge
    attribute; `hasse` is its transitive reduction (cover relation).
    """

    def __init__(self, group: PermGroup, table: ElementTable, masks: dict[int, tuple[int, ...]]) -> None:
        self.group = group
        self.table = table

        entries = sorted(masks.items(), key=lambda kv: (kv[0].bit_count(), indices_of(kv[0])))
        self.nodes: list[SubgroupRef] = []
        self._by_mask: dict[int, int] = {}
        for node_id, (mask, gen_idx) in enumerate(entries):
            ref = SubgroupRef(
                parent=group,
                element_key=tuple(indices_of(mask)),
                generators=tuple(table.elements[g] for g in gen_idx),
                node_id=node_id,
                mask=mask,
            )
            self.nodes.append(ref)
            self._by_mask[mask] = node_id
        self._gen_idx: list[tuple[int, ...]] = [gen_idx for _, gen_idx in entries]

        self.containment = nx.DiGraph()
        self.containment.add_nodes_from(range(len(self.nodes)))
        for i, x in enumerate(self.nodes):
            for j in range(i + 1, len(self.nodes)):
                y = self.nodes[j]
                if y.order > x.order and y.order % x.order == 0 and x.mask & y.mask == x.mask:
                    self.containment.add_edge(i, j, index=y.order // x.order)

        gen_ids = [table.index[g] for g in group.generators]
        self.normal_flags: list[bool] = [
            all((ref.mask >> table.conj(x, g)) & 1 for g in gen_ids for x in self._gen_idx[ref.node_id])
            for ref in self.nodes
        ]
        self._normalizers: dict[int, int] = {}
        # (element_key, formation) -> máscara del residuo del subgrupo como grupo aislado
        self.residual_cache: dict[tuple, int] = {}
        logger.debug(
            "Lattice of group of order %d: %d subgroups, %d inclusions",
            group.order(), len(self.nodes), self.containment.number_of_edges(),
        )

    # ------------------------------------------------------------------ #
    #  Acceso
    # ------------------------------------------------------------------ #

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[SubgroupRef]:
        return iter(self.nodes)

    @property
    def trivial(self) -> SubgroupRef:
        return self.nodes[0]

    @property
    def full(self) -> SubgroupRef:
        return self.nodes[-1]

    @cached_property
    def hasse(self) -> nx.DiGraph:
        return nx.transitive_reduction(self.containment)

    def index(self, x: SubgroupRef, y: SubgroupRef) -> int:
        """[Y:X] for X <= Y."""
        if not x <= y:
            raise ArgumentError("index requested for subgroups that are not nested")
        return y.order // x.order

    def generator_indices(self, node: SubgroupRef) -> tuple[int, ...]:
        return self._gen_idx[node.node_id]

    def node_of_mask(self, mask: int) -> SubgroupRef:
        try:
            return self.nodes[self._by_mask[mask]]
        except KeyError:
            raise MembershipError("element set is not a subgroup of the lattice's group")

    def elements_of(self, node: SubgroupRef) -> list[Permutation]:
        return [self.table.elements[i] for i in node.element_key]

    # ------------------------------------------------------------------ #
    #  Búsqueda de nodos
    # ------------------------------------------------------------------ #

    def _element_ids(self, perms: Iterable[Permutation]) -> list[int]:
        out = []
        for p in perms:
            try:
                out.append(self.table.index[p])
            except KeyError:
                raise MembershipError(f"{p} is not an element of the group")
        return out

    def generated_by(self, perms: Iterable[Permutation]) -> SubgroupRef:
        return self.node_of_mask(self.table.closure(self._element_ids(perms)))

    def find(self, elements: Iterable[Permutation]) -> SubgroupRef | None:
        """Node whose element set is exactly `elements`, or None."""
        try:
            mask = mask_of(self._element_ids(elements))
        except MembershipError:
            return None
        node_id = self._by_mask.get(mask)
        return None if node_id is None else self.nodes[node_id]

    def locate(self, H: PermGroup) -> SubgroupRef:
        """Node of a subgroup given as a standalone group on the same points."""
        if H.degree != self.group.degree:
            raise MembershipError("subgroup acts on a different number of points")
        return self.generated_by(H.generators)

    def join(self, x: SubgroupRef, y: SubgroupRef) -> SubgroupRef:
        return self.node_of_mask(self.table.closure(self._gen_idx[x.node_id] + self._gen_idx[y.node_id]))

    def intersect(self, x: SubgroupRef, y: SubgroupRef) -> SubgroupRef:
        return self.node_of_mask(x.mask & y.mask)

    def intersect_all(self, nodes: Iterable[SubgroupRef]) -> SubgroupRef:
        mask = self.full.mask
        for node in nodes:
            mask &= node.mask
        return self.node_of_mask(mask)

    def product_is_subgroup(self, x: SubgroupRef, y: SubgroupRef) -> bool:
        """XY = YX, i.e. |<X, Y>| = |X||Y|/|X ∩ Y|."""
        return self.join(x, y).order * self.intersect(x, y).order == x.order * y.order

    def map_through(self, hom: Homomorphism, node: SubgroupRef, target: SubgroupLattice) -> SubgroupRef:
        """f(X) as a node of the target's lattice."""
        return target.generated_by(hom.image(g) for g in node.generators)

    # ------------------------------------------------------------------ #
    #  Normalidad
    # ------------------------------------------------------------------ #

    def normalizer_mask(self, node: SubgroupRef) -> int:
        cached = self._normalizers.get(node.node_id)
        if cached is not None:
            return cached
        t = self.table
        gens = self._gen_idx[node.node_id]
        mask = node.mask
        result = 0
        for g in range(len(t)):
            if all((mask >> t.conj(x, g)) & 1 for x in gens):
                result |= 1 << g
        self._normalizers[node.node_id] = result
        return result

    def is_normal_in(self, x: SubgroupRef, y: SubgroupRef) -> bool:
        """X ⊴ Y  <=>  X <= Y <= N(X)."""
        return x <= y and y.mask & self.normalizer_mask(x) == y.mask

    def is_normal(self, node: SubgroupRef) -> bool:
        return self.normal_flags[node.node_id]

    def normal_subgroups(self) -> list[SubgroupRef]:
        return [n for n in self.nodes if self.normal_flags[n.node_id]]

    def subgroups_of(self, node: SubgroupRef) -> list[SubgroupRef]:
        """Nodes contained in `node` (itself included), in lattice order."""
        return [n for n in self.nodes if n.order <= node.order and n <= node]

    def overgroups_of(self, node: SubgroupRef) -> list[SubgroupRef]:
        return [n for n in self.nodes if n.order >= node.order and node <= n]


def _enumerate_masks(table: ElementTable) -> dict[int, tuple[int, ...]]:
    found: dict[int, tuple[int, ...]] = {}
    cyclic: list[tuple[int, int]] = []
    for g in range(len(table)):
        mask = table.closure([g])
        if mask not in found:
            found[mask] = (g,) if g != table.identity else ()
            cyclic.append((mask, g))

    queue = deque(found)
    while queue:
        h_mask = queue.popleft()
        h_gens = found[h_mask]
        for c_mask, g in cyclic:
            if c_mask & h_mask == c_mask:
                continue
            joined = table.closure(h_gens + (g,))
            if joined not in found:
                found[joined] = h_gens + (g,)
                queue.append(joined)
    return found


@lru_cache(maxsize=128)
def all_subgroups(G: PermGroup) -> SubgroupLattice:
    if G.order() > LATTICE_ORDER_CAP:
        raise CapacityError(f"group of order {G.order()} exceeds LATTICE_ORDER_CAP={LATTICE_ORDER_CAP}")
    table = ElementTable(G)
    masks = _enumerate_masks(table)
    return SubgroupLattice(G, table, masks)
