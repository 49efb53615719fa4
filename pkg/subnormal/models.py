# subnormal/models.py

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from formations.base import FormationSpec
from lattice.subgroups import SubgroupRef
from utils.errors import ArgumentError


class PolicyKind(str, Enum):
    SUBNORMAL = "subnormal"
    P_SUB = "psub"
    K_P_SUB = "kpsub"
    K_P_T = "kpt"
    F_SUB = "fsub"
    K_F_SUB = "kfsub"


@dataclass(frozen=True)
class StepPolicy:
    kind: PolicyKind
    t: int | None = None
    formation: FormationSpec | None = None

    def __post_init__(self) -> None:
        if self.kind is PolicyKind.K_P_T and (self.t is None or self.t < 1):
            raise ArgumentError("K_P_T needs a positive t")
        if self.kind in (PolicyKind.F_SUB, PolicyKind.K_F_SUB) and self.formation is None:
            raise ArgumentError(f"{self.kind.value} needs a formation")

    @property
    def label(self) -> str:
        if self.kind is PolicyKind.K_P_T:
            return f"kpt{self.t}"
        if self.formation is not None:
            return f"{self.kind.value}:{self.formation.label}"
        return self.kind.value

    def __str__(self) -> str:
        return self.label


# ------------------------------------------------------------------ #
#  Etiquetas de cada paso de la cadena
# ------------------------------------------------------------------ #

@dataclass(frozen=True)
class NormalStep:
    def tag(self) -> str:
        return "[normal]"


@dataclass(frozen=True)
class PrimeStep:
    p: int

    def tag(self) -> str:
        return f"[p={self.p}]"


@dataclass(frozen=True)
class ResidualStep:
    def tag(self) -> str:
        return "[residual]"


Step = NormalStep | PrimeStep | ResidualStep


@dataclass
class ChainWitness:
    """
    H = nodes[0] < nodes[1] < ... < nodes[-1] = G; steps[i] certifies the
    edge nodes[i] -> nodes[i+1]. H = G is the empty chain (no steps).
    """
    nodes: list[SubgroupRef]
    steps: list[Step] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.nodes:
            raise ArgumentError("a witness needs at least its starting subgroup")
        if len(self.steps) != len(self.nodes) - 1:
            raise ArgumentError("a witness needs exactly one step tag per edge")

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def start(self) -> SubgroupRef:
        return self.nodes[0]

    @property
    def end(self) -> SubgroupRef:
        return self.nodes[-1]

    def edges(self) -> list[tuple[SubgroupRef, SubgroupRef, Step]]:
        return [(self.nodes[i], self.nodes[i + 1], s) for i, s in enumerate(self.steps)]

    def summary(self) -> str:
        """Compact one-line form used in reports: orders and tags."""
        if not self.steps:
            return "empty"
        parts = [str(self.nodes[0].order)]
        for _, y, step in self.edges():
            parts.append(f"{step.tag()}{y.order}")
        return "".join(parts)
