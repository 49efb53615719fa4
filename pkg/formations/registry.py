# formations/registry.py

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Type

from formations.base import BaseFormation, FormationKind, FormationSpec
from formations.catalogue import (
    AbelianExpDivFormation,
    AbelianFormation,
    LocalFormation,
    NilpotentFormation,
    NpAFormation,
    PGroupFormation,
    SolubleFormation,
    SupersolubleFormation,
    SylowNpAFormation,
    TrivialFormation,
    UkFormation,
)
from groups.perm_group import PermGroup
from utils.errors import ArgumentError

# Mapa: tipo de formación -> clase que decide la pertenencia.
# H_T y U_T0 viven en subnormal.classes (dependen de la búsqueda de cadenas)
# y se resuelven en create_formation para no importar en círculo.
FORMATION_REGISTRY: Dict[FormationKind, Type[BaseFormation]] = {
    FormationKind.TRIVIAL: TrivialFormation,
    FormationKind.NILPOTENT: NilpotentFormation,
    FormationKind.SOLUBLE: SolubleFormation,
    FormationKind.SUPERSOLUBLE: SupersolubleFormation,
    FormationKind.ABELIAN: AbelianFormation,
    FormationKind.P_GROUPS: PGroupFormation,
    FormationKind.ABELIAN_EXP_DIV: AbelianExpDivFormation,
    FormationKind.NP_A: NpAFormation,
    FormationKind.SYLOW_NP_A: SylowNpAFormation,
    FormationKind.U_K: UkFormation,
    FormationKind.LOCAL: LocalFormation,
}


def create_formation(spec: FormationSpec) -> BaseFormation:
    """
    Factory: FormationSpec -> BaseFormation instance.

    Ejemplo:
        create_formation(FormationSpec.u_k(2)).is_member(G)
    """
    if spec.kind in (FormationKind.H_T, FormationKind.U_T0):
        from subnormal.classes import HtFormation, Ut0Formation

        cls = HtFormation if spec.kind is FormationKind.H_T else Ut0Formation
        return cls(spec)

    try:
        cls = FORMATION_REGISTRY[spec.kind]
    except KeyError:
        raise ArgumentError(f"Formación no registrada: {spec.kind!r}")
    return cls(spec)


@lru_cache(maxsize=16384)
def is_member(G: PermGroup, spec: FormationSpec) -> bool:
    """Memoised membership of G in the class described by spec."""
    return create_formation(spec).is_member(G)


def parse_formation(text: str) -> FormationSpec:
    """
    Short names used on the command line: UK<k>, UT0<t>, H<t>, N, S, U, A,
    NP<p>, NPA<p>, A<m>.
    """
    s = text.strip().upper()
    simple = {
        "N": FormationSpec.nilpotent(),
        "S": FormationSpec.soluble_groups(),
        "U": FormationSpec.supersoluble(),
        "A": FormationSpec.abelian(),
        "1": FormationSpec.trivial(),
    }
    if s in simple:
        return simple[s]
    prefixes = (
        ("UT0", FormationSpec.u_t0),
        ("UK", FormationSpec.u_k),
        ("NPA", FormationSpec.np_a),
        ("NP", FormationSpec.p_groups),
        ("H", FormationSpec.h_t),
        ("A", FormationSpec.abelian_exp_div),
    )
    for prefix, ctor in prefixes:
        rest = s[len(prefix):]
        if s.startswith(prefix) and rest.isdigit():
            return ctor(int(rest))
    raise ArgumentError(f"unknown formation {text!r}")
