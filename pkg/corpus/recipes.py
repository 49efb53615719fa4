# corpus/recipes.py

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from sympy import primitive_root
from sympy.combinatorics.named_groups import (
    AlternatingGroup,
    CyclicGroup,
    DihedralGroup,
    SymmetricGroup,
)

from groups.perm_group import PermGroup, direct_product
from groups.permutation import Permutation
from utils.errors import ArgumentError, FormatError
from utils.numbers import require_prime


class RecipeKind(str, Enum):
    CYCLIC = "CYCLIC"
    DIHEDRAL = "DIHEDRAL"
    SYMMETRIC = "SYMMETRIC"
    ALTERNATING = "ALTERNATING"
    QUATERNION8 = "QUATERNION8"
    DIRECT_PRODUCT = "DIRECT_PRODUCT"
    SEMIDIRECT_CYCLIC = "SEMIDIRECT_CYCLIC"
    HOLOMORPH_CYCLIC = "HOLOMORPH_CYCLIC"
    AFFINE_PLANE_S3 = "AFFINE_PLANE_S3"
    FROM_FILE = "FROM_FILE"


@dataclass(frozen=True)
class GroupRecipe:
    name: str
    kind: RecipeKind
    params: tuple[int, ...] = ()
    factors: tuple["GroupRecipe", ...] = ()
    path: Path | None = None

    @classmethod
    def cyclic(cls, n: int) -> GroupRecipe:
        return cls(f"Z{n}", RecipeKind.CYCLIC, (n,))

    @classmethod
    def dihedral(cls, n: int) -> GroupRecipe:
        """Symmetries of the n-gon, order 2n."""
        return cls(f"D{n}", RecipeKind.DIHEDRAL, (n,))

    @classmethod
    def symmetric(cls, n: int) -> GroupRecipe:
        return cls(f"S{n}", RecipeKind.SYMMETRIC, (n,))

    @classmethod
    def alternating(cls, n: int) -> GroupRecipe:
        return cls(f"A{n}", RecipeKind.ALTERNATING, (n,))

    @classmethod
    def quaternion8(cls) -> GroupRecipe:
        return cls("Q8", RecipeKind.QUATERNION8)

    @classmethod
    def direct_product(cls, r1: GroupRecipe, r2: GroupRecipe) -> GroupRecipe:
        return cls(f"{r1.name}x{r2.name}", RecipeKind.DIRECT_PRODUCT, factors=(r1, r2))

    @classmethod
    def semidirect_cyclic(cls, p: int, d: int) -> GroupRecipe:
        """Z_p ⋊ Z_d, d | p - 1."""
        return cls(f"SD{p}_{d}", RecipeKind.SEMIDIRECT_CYCLIC, (p, d))

    @classmethod
    def holomorph_cyclic(cls, p: int) -> GroupRecipe:
        return cls(f"Hol{p}", RecipeKind.HOLOMORPH_CYCLIC, (p,))

    @classmethod
    def affine_plane_s3(cls, p: int) -> GroupRecipe:
        """F_p^2 ⋊ S_3, order 6p^2."""
        return cls(f"V{p}_S3", RecipeKind.AFFINE_PLANE_S3, (p,))

    @classmethod
    def from_file(cls, path: str | Path) -> GroupRecipe:
        path = Path(path)
        return cls(path.stem, RecipeKind.FROM_FILE, path=path)


# ------------------------------------------------------------------ #
#  Constructores concretos
# ------------------------------------------------------------------ #

# Q8 on 8 points (0-based): i = (0 1 3 7)(2 5 4 6), j = (0 2 3 4)(1 6 7 5)
_Q8_GENS = ([[0, 1, 3, 7], [2, 5, 4, 6]], [[0, 2, 3, 4], [1, 6, 7, 5]])


def _positive(n: int, what: str, minimum: int = 1) -> int:
    if not isinstance(n, int) or n < minimum:
        raise ArgumentError(f"{what} needs n >= {minimum}, got {n!r}")
    return n


def affine_semidirect(p: int, d: int) -> PermGroup:
    """
    Z_p ⋊ Z_d as the affine maps x -> ax + b on Z_p, a in the order-d
    subgroup of (Z/p)^*: generated by x -> x + 1 and x -> r^((p-1)/d) x.
    """
    require_prime(p)
    if d < 1 or (p - 1) % d:
        raise ArgumentError(f"d={d} does not divide p-1={p - 1}")
    translation = Permutation(tuple((x + 1) % p for x in range(p)))
    gens = [translation]
    if d > 1:
        a = pow(int(primitive_root(p)), (p - 1) // d, p)
        gens.append(Permutation(tuple((a * x) % p for x in range(p))))
    return PermGroup(p, gens)


def affine_plane_s3(p: int) -> PermGroup:
    """
    F_p^2 ⋊ S_3 on the p^2 points (x, y) -> x*p + y. S_3 acts on the sum-zero
    plane of F_p^3 in the basis e1 - e2, e2 - e3; for p > 3 that plane is
    irreducible, so the group is soluble and not supersoluble.
    """
    require_prime(p)
    if p <= 3:
        raise ArgumentError(f"AFFINE_PLANE_S3 needs a prime p > 3, got {p}")

    def affine(f) -> Permutation:
        return Permutation(tuple(f(x // p, x % p) for x in range(p * p)))

    gens = [
        affine(lambda x, y: ((x + 1) % p) * p + y),
        affine(lambda x, y: x * p + (y + 1) % p),
        affine(lambda x, y: (-y % p) * p + (x - y) % p),   # 3-ciclo
        affine(lambda x, y: ((y - x) % p) * p + y),        # trasposición
    ]
    return PermGroup(p * p, gens)


def build(recipe: GroupRecipe) -> PermGroup:
    kind = recipe.kind
    if kind is RecipeKind.CYCLIC:
        n = _positive(recipe.params[0], "CYCLIC")
        return PermGroup.trivial(1) if n == 1 else PermGroup.from_sympy(CyclicGroup(n))
    if kind is RecipeKind.DIHEDRAL:
        return PermGroup.from_sympy(DihedralGroup(_positive(recipe.params[0], "DIHEDRAL", 3)))
    if kind is RecipeKind.SYMMETRIC:
        n = _positive(recipe.params[0], "SYMMETRIC")
        return PermGroup.trivial(1) if n == 1 else PermGroup.from_sympy(SymmetricGroup(n))
    if kind is RecipeKind.ALTERNATING:
        n = _positive(recipe.params[0], "ALTERNATING")
        return PermGroup.trivial(1) if n <= 2 else PermGroup.from_sympy(AlternatingGroup(n))
    if kind is RecipeKind.QUATERNION8:
        return PermGroup(8, [Permutation.from_cycles(c, 8) for c in _Q8_GENS])
    if kind is RecipeKind.DIRECT_PRODUCT:
        r1, r2 = recipe.factors
        return direct_product(build(r1), build(r2))
    if kind is RecipeKind.SEMIDIRECT_CYCLIC:
        p, d = recipe.params
        return affine_semidirect(p, d)
    if kind is RecipeKind.HOLOMORPH_CYCLIC:
        p = require_prime(recipe.params[0])
        return affine_semidirect(p, p - 1)
    if kind is RecipeKind.AFFINE_PLANE_S3:
        return affine_plane_s3(recipe.params[0])
    if kind is RecipeKind.FROM_FILE:
        from corpus.group_files import parse_group_file

        try:
            text = recipe.path.read_text(encoding="utf-8")
        except OSError as e:
            raise FormatError(f"cannot read group file {recipe.path}: {e.strerror or e}")
        return parse_group_file(text)
    raise ArgumentError(f"unknown recipe kind {kind!r}")


# ------------------------------------------------------------------ #
#  Nombres de la CLI
# ------------------------------------------------------------------ #

_ALIASES = {
    "G39": GroupRecipe.semidirect_cyclic(13, 3),
    "Q8": GroupRecipe.quaternion8(),
}

_NAME_RE = [
    (re.compile(r"^(?:Z|C)(\d+)$"), lambda m: GroupRecipe.cyclic(int(m[1]))),
    (re.compile(r"^S(\d+)$"), lambda m: GroupRecipe.symmetric(int(m[1]))),
    (re.compile(r"^A(\d+)$"), lambda m: GroupRecipe.alternating(int(m[1]))),
    (re.compile(r"^D(\d+)$"), lambda m: GroupRecipe.dihedral(int(m[1]))),
    (re.compile(r"^HOL(\d+)$"), lambda m: GroupRecipe.holomorph_cyclic(int(m[1]))),
    (re.compile(r"^SD(\d+)_(\d+)$"), lambda m: GroupRecipe.semidirect_cyclic(int(m[1]), int(m[2]))),
    (re.compile(r"^V(\d+)_S3$"), lambda m: GroupRecipe.affine_plane_s3(int(m[1]))),
]


def recipe_from_name(name: str) -> GroupRecipe:
    """
    Builtin names: Z<n> (or C<n>), S<n>, A<n>, D<n>, Q8, Hol<p>, SD<p>_<d>, V<p>_S3,
    G39 (the nonabelian group of order 39), and products such as Z2xS3.
    Case-insensitive.
    """
    text = name.strip().upper().replace("×", "X")
    if not text:
        raise ArgumentError("empty group name")
    if "X" in text:
        parts = text.split("X")
        if not all(parts):
            raise ArgumentError(f"malformed product name {name!r}")
        recipe = recipe_from_name(parts[0])
        for part in parts[1:]:
            recipe = GroupRecipe.direct_product(recipe, recipe_from_name(part))
        return recipe
    if text in _ALIASES:
        return _ALIASES[text]
    for pattern, ctor in _NAME_RE:
        m = pattern.match(text)
        if m:
            return ctor(m)
    raise ArgumentError(f"unknown builtin group {name!r}")


def recipe_from_source(source: str) -> GroupRecipe:
    """`builtin:NAME` or `file:PATH`; a bare name is read as a builtin."""
    kind, sep, rest = source.strip().partition(":")
    if not sep:
        return recipe_from_name(kind)
    if kind.lower() == "builtin":
        return recipe_from_name(rest)
    if kind.lower() == "file":
        if not rest.strip():
            raise ArgumentError("file: source needs a path")
        return GroupRecipe.from_file(rest.strip())
    raise ArgumentError(f"unknown group source {source!r}; use builtin:NAME or file:PATH")
