# groups/permutation.py

"""
Permutations on the points 0..n-1, stored as image tuples.

Composition is left-to-right everywhere in the project:
compose(a, b) maps x to b(a(x)), i.e. "first a, then b". This is also
sympy's convention for `p * q`, so conversions never reorder products.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import reduce

from sympy.combinatorics import Permutation as SympyPermutation

from utils.errors import DegreeError, FormatError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_SEP_RE = re.compile(r"[\s,]+")


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise FormatError("a permutation needs at least one point")
        if sorted(images) != list(range(len(images))):
            raise FormatError(f"{list(images)} is not a bijection on 0..{len(images) - 1}")

    # ------------------------------------------------------------------ #
    #  Construcción
    # ------------------------------------------------------------------ #

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        if degree < 1:
            raise FormatError(f"degree must be positive, got {degree}")
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> Permutation:
        """
        Product of the given cycles, applied left to right.
        Points are 0-based; a point outside 0..degree-1 is a FormatError.
        """
        result = cls.identity(degree)
        for cycle in cycles:
            cycle = [int(x) for x in cycle]
            if len(set(cycle)) != len(cycle):
                raise FormatError(f"repeated point in cycle {cycle}")
            images = list(range(degree))
            for i, point in enumerate(cycle):
                if not 0 <= point < degree:
                    raise FormatError(f"point {point} out of range for degree {degree}")
                images[point] = cycle[(i + 1) % len(cycle)]
            result = compose(result, cls(tuple(images)))
        return result

    @classmethod
    def parse(cls, text: str, degree: int, one_based: bool = True) -> Permutation:
        """
        Parse cycle notation such as "(1 2 3)(4 5)" or "(1,2)". "()" is the identity.
        """
        stripped = text.strip()
        if not stripped:
            raise FormatError("empty permutation text")
        # todo lo que no sea un ciclo entre paréntesis es basura
        leftover = _CYCLE_RE.sub("", stripped).strip()
        if leftover:
            raise FormatError(f"malformed cycle notation {text!r}")

        shift = 1 if one_based else 0
        cycles = []
        for body in _CYCLE_RE.findall(stripped):
            body = body.strip()
            if not body:
                continue
            try:
                points = [int(tok) - shift for tok in _SEP_RE.split(body) if tok]
            except ValueError:
                raise FormatError(f"non-integer point in cycle ({body})")
            if len(points) > 1:
                cycles.append(points)
        return cls.from_cycles(cycles, degree)

    @classmethod
    def from_sympy(cls, perm: SympyPermutation, degree: int | None = None) -> Permutation:
        images = list(perm.array_form)
        if degree is not None and len(images) < degree:
            images.extend(range(len(images), degree))
        return cls(tuple(images))

    # ------------------------------------------------------------------ #
    #  Aritmética
    # ------------------------------------------------------------------ #

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def __pow__(self, exponent: int) -> Permutation:
        base = self if exponent >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        n = abs(exponent)
        while n:
            if n & 1:
                result = compose(result, base)
            base = compose(base, base)
            n >>= 1
        return result

    def conjugate_by(self, g: Permutation) -> Permutation:
        """g^-1 * self * g."""
        return compose(compose(g.inverse(), self), g)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point, sorted."""
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point]
            out.append(tuple(cycle))
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def to_cycle_string(self, one_based: bool = True) -> str:
        shift = 1 if one_based else 0
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(x + shift) for x in c) + ")" for c in cycles)

    def to_sympy(self) -> SympyPermutation:
        return SympyPermutation(list(self.images))

    def __str__(self) -> str:
        return self.to_cycle_string()


def compose(a: Permutation, b: Permutation) -> Permutation:
    """x -> b(a(x)). Degree mismatch raises DegreeError."""
    if a.degree != b.degree:
        raise DegreeError(f"cannot compose permutations of degree {a.degree} and {b.degree}")
    bi = b.images
    return Permutation(tuple(bi[x] for x in a.images))


def parse_permutation_list(text: str, degree: int, one_based: bool = True) -> list[Permutation]:
    """
    Comma separated list of permutations in cycle notation:
    "(1 2)(3 4), (1 3)(2 4)". Commas inside a cycle are point separators.
    """
    perms = []
    depth = 0
    current = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise FormatError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            perms.append("".join(current))
            current = []
            continue
        current.append(ch)
    if depth != 0:
        raise FormatError(f"unbalanced parentheses in {text!r}")
    perms.append("".join(current))
    return [Permutation.parse(p, degree, one_based=one_based) for p in perms if p.strip()]
