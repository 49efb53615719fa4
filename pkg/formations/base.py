# formations/base.py

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from groups.perm_group import PermGroup
from utils.errors import ArgumentError
from utils.numbers import require_prime


class FormationKind(str, Enum):
    NILPOTENT = "NILPOTENT"
    SOLUBLE = "SOLUBLE"
    SUPERSOLUBLE = "SUPERSOLUBLE"
    P_GROUPS = "P_GROUPS"                 # N_p
    ABELIAN_EXP_DIV = "ABELIAN_EXP_DIV"   # A(m)
    NP_A = "NP_A"                         # N_p A(p-1)
    U_K = "U_K"
    H_T = "H_T"
    U_T0 = "U_T0"
    LOCAL = "LOCAL"                       # LF(f)
    ABELIAN = "ABELIAN"
    SYLOW_NP_A = "SYLOW_NP_A"             # Syl(G) ⊆ N_p A(p-1), optionally soluble
    TRIVIAL = "TRIVIAL"


@dataclass(frozen=True)
class LocalFunction:
    """
    f: primes -> formations. `name` and `t` identify the function; the
    evaluator itself is not compared so two equal names hash the same.
    """
    name: str
    t: int
    evaluator: Callable[[int], "FormationSpec"] = field(compare=False, repr=False)

    def __call__(self, p: int) -> FormationSpec:
        return self.evaluator(require_prime(p))


# parámetros obligatorios por tipo
_REQUIRED: dict[FormationKind, tuple[str, ...]] = {
    FormationKind.P_GROUPS: ("p",),
    FormationKind.ABELIAN_EXP_DIV: ("m",),
    FormationKind.NP_A: ("p",),
    FormationKind.U_K: ("k",),
    FormationKind.H_T: ("t",),
    FormationKind.U_T0: ("t",),
    FormationKind.LOCAL: ("local",),
    FormationKind.SYLOW_NP_A: ("p",),
}


@dataclass(frozen=True)
class FormationSpec:
    kind: FormationKind
    p: int | None = None
    m: int | None = None
    k: int | None = None
    t: int | None = None
    local: LocalFunction | None = None
    soluble: bool = False

    def __post_init__(self) -> None:
        for name in _REQUIRED.get(self.kind, ()):
            if getattr(self, name) is None:
                raise ArgumentError(f"{self.kind.value} needs parameter {name!r}")
        if self.p is not None:
            require_prime(self.p)
        for name in ("m", "k", "t"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise ArgumentError(f"{name} must be positive, got {value}")

    # constructores cortos
    @classmethod
    def nilpotent(cls) -> FormationSpec:
        return cls(FormationKind.NILPOTENT)

    @classmethod
    def soluble_groups(cls) -> FormationSpec:
        return cls(FormationKind.SOLUBLE)

    @classmethod
    def supersoluble(cls) -> FormationSpec:
        return cls(FormationKind.SUPERSOLUBLE)

    @classmethod
    def abelian(cls) -> FormationSpec:
        return cls(FormationKind.ABELIAN)

    @classmethod
    def trivial(cls) -> FormationSpec:
        return cls(FormationKind.TRIVIAL)

    @classmethod
    def p_groups(cls, p: int) -> FormationSpec:
        return cls(FormationKind.P_GROUPS, p=p)

    @classmethod
    def abelian_exp_div(cls, m: int) -> FormationSpec:
        return cls(FormationKind.ABELIAN_EXP_DIV, m=m)

    @classmethod
    def np_a(cls, p: int) -> FormationSpec:
        return cls(FormationKind.NP_A, p=p)

    @classmethod
    def sylow_np_a(cls, p: int, soluble: bool = False) -> FormationSpec:
        return cls(FormationKind.SYLOW_NP_A, p=p, soluble=soluble)

    @classmethod
    def u_k(cls, k: int) -> FormationSpec:
        return cls(FormationKind.U_K, k=k)

    @classmethod
    def h_t(cls, t: int) -> FormationSpec:
        return cls(FormationKind.H_T, t=t)

    @classmethod
    def u_t0(cls, t: int) -> FormationSpec:
        return cls(FormationKind.U_T0, t=t)

    @classmethod
    def lf(cls, f: LocalFunction) -> FormationSpec:
        return cls(FormationKind.LOCAL, local=f)

    @property
    def label(self) -> str:
        match self.kind:
            case FormationKind.P_GROUPS:
                return f"N_{self.p}"
            case FormationKind.ABELIAN_EXP_DIV:
                return f"A({self.m})"
            case FormationKind.NP_A:
                return f"N_{self.p}A({self.p - 1})"
            case FormationKind.SYLOW_NP_A:
                prefix = "S|" if self.soluble else ""
                return f"{prefix}Syl⊆N_{self.p}A({self.p - 1})"
            case FormationKind.U_K:
                return f"U_{self.k}"
            case FormationKind.H_T:
                return f"H_{self.t}"
            case FormationKind.U_T0:
                return f"U_{self.t}^0"
            case FormationKind.LOCAL:
                return f"LF({self.local.name},t={self.local.t})"
            case _:
                return self.kind.value

    def __str__(self) -> str:
        return self.label


class BaseFormation(ABC):
    """
    A built-in group class.

    Subclasses implement is_member(G); the class attributes describe
    the closure properties the harness relies on when picking which
    formations a statement applies to.
    """

    hereditary: bool = True
    saturated: bool = False

    def __init__(self, spec: FormationSpec) -> None:
        self.spec = spec

    @abstractmethod
    def is_member(self, G: PermGroup) -> bool:
        raise NotImplementedError

    def admits_prime(self, q: int) -> bool:
        """q ∈ π(F). Every built-in except N_p contains groups of every prime order."""
        return True

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.spec.label})"
