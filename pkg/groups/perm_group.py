# groups/perm_group.py

from __future__ import annotations

import logging
import math
from functools import cached_property, reduce
from typing import Iterable

from sympy.combinatorics import PermutationGroup

from config.settings import ELEMENT_ENUM_CAP
from groups.permutation import Permutation
from utils.errors import CapacityError, DegreeError, FormatError, MembershipError

logger = logging.getLogger(__name__)


class PermGroup:
    """
    Grupo de permutaciones finito sobre los puntos 0..degree-1.

    La estructura base / generadores fuertes la calcula el Schreier-Sims
    determinista de sympy; una vez construido el objeto no se modifica,
    así que se puede compartir entre hilos y usar como clave de caché.

    Igualdad = mismo conjunto de permutaciones (mismo grado, mismo orden
    y cada generador de uno pertenece al otro).
    """

    def __init__(self, degree: int, generators: Iterable[Permutation]) -> None:
        if not isinstance(degree, int) or degree < 1:
            raise FormatError(f"degree must be a positive integer, got {degree!r}")

        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                raise FormatError(f"generator {g!r} is not a Permutation")
            if g.degree != degree:
                raise FormatError(f"generator {g} has degree {g.degree}, expected {degree}")
            if not g.is_identity() and g not in gens:
                gens.append(g)

        self._degree = degree
        self._generators: tuple[Permutation, ...] = tuple(gens)

        sym_gens = [g.to_sympy() for g in gens] or [Permutation.identity(degree).to_sympy()]
        self._sym = PermutationGroup(sym_gens)
        self._sym.schreier_sims()
        self._order = int(self._sym.order())

    # ------------------------------------------------------------------ #
    #  Constructores alternativos
    # ------------------------------------------------------------------ #

    @classmethod
    def from_sympy(cls, group: PermutationGroup, degree: int | None = None) -> PermGroup:
        degree = degree or group.degree
        gens = [Permutation.from_sympy(g, degree) for g in group.generators]
        return cls(degree, gens)

    @classmethod
    def trivial(cls, degree: int) -> PermGroup:
        return cls(degree, [])

    @classmethod
    def from_elements(cls, degree: int, elements: Iterable[Permutation]) -> PermGroup:
        """
        Subgroup generated by `elements` with a small generating set:
        an element is kept only if it is not already in the group so far.
        """
        group = cls.trivial(degree)
        for x in sorted(elements):
            if not group.contains(x):
                group = cls(degree, group.generators + (x,))
        return group

    # ------------------------------------------------------------------ #
    #  Datos básicos
    # ------------------------------------------------------------------ #

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return self._generators

    @property
    def base(self) -> list[int]:
        return list(self._sym.base)

    @property
    def strong_generators(self) -> list[Permutation]:
        return [Permutation.from_sympy(s, self._degree) for s in self._sym.strong_gens]

    @property
    def transversal_sizes(self) -> list[int]:
        return [len(t) for t in self._sym.basic_transversals]

    @property
    def sympy_group(self) -> PermutationGroup:
        return self._sym

    def order(self) -> int:
        return self._order

    def contains(self, p: Permutation) -> bool:
        if p.degree != self._degree:
            raise DegreeError(f"permutation of degree {p.degree} tested against a group of degree {self._degree}")
        return bool(self._sym.contains(p.to_sympy(), strict=False))

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def identity(self) -> Permutation:
        return Permutation.identity(self._degree)

    # ------------------------------------------------------------------ #
    #  Enumeración
    # ------------------------------------------------------------------ #

    def elements(self) -> list[Permutation]:
        """All elements, sorted lexicographically on image arrays."""
        if self._order > ELEMENT_ENUM_CAP:
            raise CapacityError(
                f"group of order {self._order} exceeds ELEMENT_ENUM_CAP={ELEMENT_ENUM_CAP}"
            )
        return list(self._elements)

    @cached_property
    def _elements(self) -> tuple[Permutation, ...]:
        if self._order == 1:
            return (self.identity(),)
        elems = sorted(Permutation(tuple(a)) for a in self._sym.generate_schreier_sims(af=True))
        logger.debug("Enumerated %d elements (degree %d)", len(elems), self._degree)
        return tuple(elems)

    def exponent(self) -> int:
        return reduce(math.lcm, (g.order() for g in self.elements()), 1)

    # ------------------------------------------------------------------ #
    #  Propiedades
    # ------------------------------------------------------------------ #

    def is_trivial(self) -> bool:
        return self._order == 1

    def is_abelian(self) -> bool:
        return bool(self._sym.is_abelian)

    def is_soluble(self) -> bool:
        return bool(self._sym.is_solvable)

    def is_nilpotent(self) -> bool:
        return bool(self._sym.is_nilpotent)

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return (
            self._degree == other.degree
            and other.order() % self._order == 0
            and all(other.contains(g) for g in self._generators)
        )

    def derived_subgroup(self) -> PermGroup:
        return PermGroup.from_sympy(self._sym.derived_subgroup(), self._degree)

    def center(self) -> PermGroup:
        return PermGroup.from_sympy(self._sym.center(), self._degree)

    def subgroup(self, generators: Iterable[Permutation]) -> PermGroup:
        """Subgroup generated by `generators`; each must lie in this group."""
        gens = list(generators)
        for g in gens:
            if not self.contains(g):
                raise MembershipError(f"{g} is not an element of the group")
        return PermGroup(self._degree, gens)

    # ------------------------------------------------------------------ #
    #  Igualdad / hash
    # ------------------------------------------------------------------ #

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        if self is other:
            return True
        return (
            self._degree == other._degree
            and self._order == other._order
            and all(other.contains(g) for g in self._generators)
        )

    def __hash__(self) -> int:
        return hash((self._degree, self._order))

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self._generators) or "()"
        return f"PermGroup(degree={self._degree}, order={self._order}, gens=[{gens}])"


def build_group(degree: int, gens: Iterable[Permutation]) -> PermGroup:
    """
    Schreier-Sims construction. Checks the BSGS invariants once:
    the order is the product of the transversal sizes and divides degree!.
    """
    group = PermGroup(degree, gens)
    if group.order() != math.prod(group.transversal_sizes):
        raise FormatError("inconsistent base / strong generating set")
    if math.factorial(degree) % group.order():
        raise FormatError(f"order {group.order()} does not divide {degree}!")
    return group


def conjugate(H: PermGroup, g: Permutation, inside: PermGroup) -> PermGroup:
    """H^g = <g^-1 h g : h in gens(H)>."""
    if not inside.contains(g):
        raise MembershipError(f"{g} is not an element of the ambient group")
    if not H.is_subgroup_of(inside):
        raise MembershipError("the conjugated subgroup is not contained in the ambient group")
    return PermGroup(H.degree, [h.conjugate_by(g) for h in H.generators])


def direct_product(G1: PermGroup, G2: PermGroup) -> PermGroup:
    """G1 x G2 acting on disjoint point sets (G2's points shifted by G1.degree)."""
    n1, n2 = G1.degree, G2.degree
    degree = n1 + n2
    gens = []
    for g in G1.generators:
        gens.append(Permutation(g.images + tuple(range(n1, degree))))
    for g in G2.generators:
        gens.append(Permutation(tuple(range(n1)) + tuple(x + n1 for x in g.images)))
    return PermGroup(degree, gens)
