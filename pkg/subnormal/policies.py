# subnormal/policies.py

from __future__ import annotations

from formations.base import FormationSpec
from formations.predicates import pt_admissible
from formations.registry import parse_formation
from formations.residual import residual
from lattice.subgroups import SubgroupLattice, SubgroupRef, all_subgroups
from subnormal.models import NormalStep, PolicyKind, PrimeStep, ResidualStep, Step, StepPolicy
from utils.errors import ArgumentError
from utils.numbers import is_prime


def parse_policy(text: str, t: int = 1) -> StepPolicy:
    """
    subnormal | psub | kpsub | kpt | fsub:<F> | kfsub:<F>, with <F> such as UK1.
    `t` only matters for kpt.
    """
    name, _, arg = text.strip().lower().partition(":")
    try:
        kind = PolicyKind(name)
    except ValueError:
        raise ArgumentError(f"unknown policy {text!r}")

    if kind in (PolicyKind.F_SUB, PolicyKind.K_F_SUB):
        if not arg:
            raise ArgumentError(f"policy {name} needs a formation, e.g. {name}:UK1")
        return StepPolicy(kind, formation=parse_formation(arg))
    if arg:
        raise ArgumentError(f"policy {name} takes no argument")
    if kind is PolicyKind.K_P_T:
        return StepPolicy(kind, t=t)
    return StepPolicy(kind)


# constructores cortos
SUBNORMAL = StepPolicy(PolicyKind.SUBNORMAL)
P_SUB = StepPolicy(PolicyKind.P_SUB)
K_P_SUB = StepPolicy(PolicyKind.K_P_SUB)


def k_p_t(t: int) -> StepPolicy:
    return StepPolicy(PolicyKind.K_P_T, t=t)


def f_sub(spec: FormationSpec) -> StepPolicy:
    return StepPolicy(PolicyKind.F_SUB, formation=spec)


def k_f_sub(spec: FormationSpec) -> StepPolicy:
    return StepPolicy(PolicyKind.K_F_SUB, formation=spec)


def standalone_residual_mask(lat: SubgroupLattice, Y: SubgroupRef, spec: FormationSpec) -> int:
    """
    Y^F with Y taken as a group on its own, as a mask in lat's numbering.
    Cached on the lattice by (element_key, formation).
    """
    key = (Y.element_key, spec)
    cached = lat.residual_cache.get(key)
    if cached is not None:
        return cached
    Yg = Y.as_group()
    R = residual(Yg, spec)
    mask = lat.generated_by(R.generators).mask
    lat.residual_cache[key] = mask
    return mask


def step_tag(lat: SubgroupLattice, X: SubgroupRef, Y: SubgroupRef, policy: StepPolicy) -> Step | None:
    """Tag certifying the edge X < Y under the policy, or None if the edge is not allowed."""
    kind = policy.kind
    normal_ok = kind in (PolicyKind.SUBNORMAL, PolicyKind.K_P_SUB, PolicyKind.K_P_T, PolicyKind.K_F_SUB)
    if normal_ok and lat.is_normal_in(X, Y):
        return NormalStep()

    if kind in (PolicyKind.P_SUB, PolicyKind.K_P_SUB, PolicyKind.K_P_T):
        index = Y.order // X.order
        if not is_prime(index):
            return None
        if kind is PolicyKind.K_P_T and not pt_admissible(index, policy.t):
            return None
        return PrimeStep(index)

    if kind in (PolicyKind.F_SUB, PolicyKind.K_F_SUB):
        r = standalone_residual_mask(lat, Y, policy.formation)
        return ResidualStep() if r & X.mask == r else None

    return None


def step_allowed(X: SubgroupRef, Y: SubgroupRef, policy: StepPolicy) -> bool:
    """Edge predicate of the policy; X = Y is always allowed."""
    if not X <= Y:
        raise ArgumentError("step requested between subgroups that are not nested")
    if X == Y:
        return True
    lat = all_subgroups(X.parent)
    return step_tag(lat, X, Y, policy) is not None
