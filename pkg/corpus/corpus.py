# corpus/corpus.py

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from config.settings import LATTICE_ORDER_CAP
from corpus.recipes import GroupRecipe, build, recipe_from_name
from groups.perm_group import PermGroup
from lattice.subgroups import all_subgroups
from utils.errors import ArgumentError, FormatError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    group: PermGroup
    provenance: str

    @property
    def order(self) -> int:
        return self.group.order()


class Corpus:
    """Named groups, unique names, each within LATTICE_ORDER_CAP."""

    def __init__(self, entries: list[CorpusEntry] | None = None) -> None:
        self._entries: list[CorpusEntry] = []
        self._names: set[str] = set()
        for e in entries or []:
            self.add(e.name, e.group, e.provenance)

    def add(self, name: str, group: PermGroup, provenance: str) -> None:
        if name in self._names:
            raise ArgumentError(f"duplicate corpus entry {name!r}")
        if group.order() > LATTICE_ORDER_CAP:
            raise ArgumentError(
                f"{name} has order {group.order()}, above LATTICE_ORDER_CAP={LATTICE_ORDER_CAP}"
            )
        self._entries.append(CorpusEntry(name, group, provenance))
        self._names.add(name)

    def add_recipe(self, recipe: GroupRecipe, provenance: str = "builtin") -> None:
        self.add(recipe.name, build(recipe), provenance)

    def extend(self, other: Corpus) -> None:
        for e in other:
            self.add(e.name, e.group, e.provenance)

    def filter(self, max_order: int) -> Corpus:
        return Corpus([e for e in self._entries if e.order <= max_order])

    def names(self) -> list[str]:
        return [e.name for e in self._entries]

    def by_name(self, name: str) -> CorpusEntry:
        for e in self._entries:
            if e.name == name:
                return e
        raise ArgumentError(f"no corpus entry named {name!r}")

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[CorpusEntry]:
        return iter(self._entries)

    def __getitem__(self, i: int) -> CorpusEntry:
        return self._entries[i]


def harvest(G: PermGroup, min_order: int, prefix: str = "G") -> Corpus:
    """One entry per subgroup of G of order >= min_order, named <prefix>.sub<node>."""
    lat = all_subgroups(G)
    out = Corpus()
    for node in lat:
        if node.order >= min_order:
            out.add(f"{prefix}.sub{node.node_id}", node.as_group(), f"subgroup of {prefix}, order {node.order}")
    return out


# productos directos del corpus estándar (orden <= 96)
_PRODUCTS: list[tuple[str, str]] = [
    ("Z2", "S3"), ("Z3", "S3"), ("S3", "S3"), ("Z4", "S3"), ("Z2", "A4"), ("Z3", "A4"),
    ("Z2", "D4"), ("Q8", "Z3"), ("Z2", "Hol5"), ("Z2", "SD7_3"), ("Z2", "S4"), ("S3", "D5"),
    ("Z2", "SD13_3"), ("Z3", "S4"), ("Z2xZ2", "Z3"), ("A4", "Z4"), ("D4", "S3"), ("Q8", "S3"),
]


@lru_cache(maxsize=1)
def standard_corpus() -> Corpus:
    corpus = Corpus()
    corpus.extend(harvest(build(GroupRecipe.symmetric(4)), 1, prefix="S4"))
    corpus.extend(harvest(build(GroupRecipe.symmetric(5)), 4, prefix="S5"))

    A5 = GroupRecipe.alternating(5)
    corpus.add_recipe(A5, "alternating group of degree 5")

    A6 = build(GroupRecipe.alternating(6))
    for p in (2, 3, 5):
        # solo los Sylow: el retículo completo de A6 no hace falta
        P = PermGroup.from_sympy(A6.sympy_group.sylow_subgroup(p), A6.degree)
        corpus.add(f"A6.Syl{p}", P, f"Sylow {p}-subgroup of A6")

    corpus.add_recipe(GroupRecipe.quaternion8())
    for n in range(4, 11):
        corpus.add_recipe(GroupRecipe.dihedral(n))
    for n in range(1, 25):
        corpus.add_recipe(GroupRecipe.cyclic(n))
    for p in (5, 13, 17):
        corpus.add_recipe(GroupRecipe.holomorph_cyclic(p), "holomorph of a cyclic group of prime order")
    for p, d in ((13, 3), (7, 3)):
        corpus.add_recipe(GroupRecipe.semidirect_cyclic(p, d), "affine semidirect product")
    corpus.add_recipe(GroupRecipe.affine_plane_s3(7), "soluble, not supersoluble: separates H_t from U_t^0")

    for left, right in _PRODUCTS:
        recipe = GroupRecipe.direct_product(recipe_from_name(left), recipe_from_name(right))
        corpus.add(f"{left}x{right}", build(recipe), "direct product")

    logger.info("Standard corpus: %d groups", len(corpus))
    return corpus


def load_file_list(path: str | Path) -> Corpus:
    """
    Corpus from a text file listing one group per line: a path to a group
    file (relative to the list's directory) or `builtin:NAME`.
    """
    path = Path(path)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise FormatError(f"cannot read corpus list {path}: {e.strerror or e}")

    corpus = Corpus()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("builtin:"):
            recipe = recipe_from_name(line[len("builtin:"):])
        else:
            file_path = Path(line)
            if not file_path.is_absolute():
                file_path = path.parent / file_path
            recipe = GroupRecipe.from_file(file_path)
        try:
            corpus.add_recipe(recipe, provenance=line)
        except ArgumentError as e:
            raise FormatError(str(e), line=lineno)
    if not len(corpus):
        raise FormatError(f"corpus list {path} names no groups")
    return corpus
