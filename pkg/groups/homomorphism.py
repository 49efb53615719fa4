# groups/homomorphism.py

from __future__ import annotations

import logging
from collections import deque
from functools import cached_property

from config.settings import QUOTIENT_DEGREE_CAP
from groups.perm_group import PermGroup
from groups.permutation import Permutation, compose
from utils.errors import ArgumentError, CapacityError, MembershipError, NormalityError

logger = logging.getLogger(__name__)


class Homomorphism:
    """
    Homomorphism source -> target given by the images of the source generators.

    The full element table is built lazily by walking the Cayley graph of the
    source; reaching an element twice with two different images means the
    generator images do not respect the relations, and is an ArgumentError.
    """

    def __init__(
        self,
        source: PermGroup,
        target: PermGroup,
        generator_images: dict[Permutation, Permutation],
        table: dict[Permutation, Permutation] | None = None,
    ) -> None:
        missing = [g for g in source.generators if g not in generator_images]
        if missing:
            raise ArgumentError(f"no image given for generator {missing[0]}")
        for img in generator_images.values():
            if not target.contains(img):
                raise MembershipError(f"generator image {img} is not in the target group")

        self.source = source
        self.target = target
        self.generator_images = dict(generator_images)
        if table is not None:
            self.__dict__["_table"] = table

    @cached_property
    def _table(self) -> dict[Permutation, Permutation]:
        one = self.source.identity()
        table = {one: self.target.identity()}
        queue = deque([one])
        gens = [(g, self.generator_images[g]) for g in self.source.generators]
        while queue:
            x = queue.popleft()
            fx = table[x]
            for g, fg in gens:
                y = compose(x, g)
                fy = compose(fx, fg)
                known = table.get(y)
                if known is None:
                    table[y] = fy
                    queue.append(y)
                elif known != fy:
                    raise ArgumentError("generator images do not define a homomorphism")
        return table

    def image(self, x: Permutation) -> Permutation:
        try:
            return self._table[x]
        except KeyError:
            raise MembershipError(f"{x} is not in the source group")

    def image_of(self, H: PermGroup) -> PermGroup:
        """f(H) as a subgroup of the target."""
        return PermGroup(self.target.degree, [self.image(h) for h in H.generators])

    def preimage_of(self, K: PermGroup) -> PermGroup:
        """f^-1(K), a subgroup of the source containing the kernel."""
        return PermGroup.from_elements(
            self.source.degree,
            (x for x, fx in self._table.items() if K.contains(fx)),
        )

    def kernel(self) -> PermGroup:
        return self.preimage_of(PermGroup.trivial(self.target.degree))

    def __repr__(self) -> str:
        return f"Homomorphism({self.source.order()} -> {self.target.order()})"


def is_normal_subgroup(N: PermGroup, G: PermGroup) -> bool:
    if not N.is_subgroup_of(G):
        return False
    return all(N.contains(n.conjugate_by(g)) for g in G.generators for n in N.generators)


def quotient(G: PermGroup, N: PermGroup) -> tuple[PermGroup, Homomorphism]:
    """
    G/N as the permutation group of G acting on the right cosets Nx by right
    multiplication. Cosets are numbered in the order of their smallest element
    (so the coset N itself is point 0).
    """
    if not N.is_subgroup_of(G):
        raise MembershipError("quotient by a subgroup that is not contained in the group")
    if not is_normal_subgroup(N, G):
        raise NormalityError("quotient by a subgroup that is not normal")

    index = G.order() // N.order()
    if index > QUOTIENT_DEGREE_CAP:
        raise CapacityError(f"index {index} exceeds QUOTIENT_DEGREE_CAP={QUOTIENT_DEGREE_CAP}")

    n_elems = N.elements()
    coset_of: dict[Permutation, int] = {}
    reps: list[Permutation] = []
    for x in G.elements():
        if x in coset_of:
            continue
        i = len(reps)
        reps.append(x)
        for n in n_elems:
            coset_of[compose(n, x)] = i

    def act(g: Permutation) -> Permutation:
        return Permutation(tuple(coset_of[compose(r, g)] for r in reps))

    # la acción en coclases de un normal es regular: cada elemento se calcula directo
    table = {x: act(x) for x in G.elements()}
    images = {g: table[g] for g in G.generators}
    Q = PermGroup(index, images.values())
    logger.debug("Quotient of order %d by normal subgroup of order %d", G.order(), N.order())
    return Q, Homomorphism(G, Q, images, table=table)
