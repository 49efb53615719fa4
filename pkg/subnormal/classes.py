# subnormal/classes.py

from __future__ import annotations

from functools import lru_cache

from formations.base import BaseFormation, FormationSpec
from formations.predicates import is_supersoluble
from formations.registry import create_formation
from groups.perm_group import PermGroup
from lattice.structure import all_sylows, sylow
from subnormal.policies import K_P_SUB, f_sub, k_p_t
from subnormal.search import is_subnormal
from utils.numbers import prime_divisors


@lru_cache(maxsize=8192)
def in_class_Ht(G: PermGroup, t: int) -> bool:
    """
    Every Sylow subgroup is K-P_t-subnormal. Conjugates share the verdict,
    so one Sylow per prime is checked.
    """
    policy = k_p_t(t)
    return all(is_subnormal(G, sylow(G, p), policy) for p in prime_divisors(G.order()))


def in_class_Ht_all_sylows(G: PermGroup, t: int) -> bool:
    """Same class, checking every Sylow subgroup instead of one per prime."""
    policy = k_p_t(t)
    return all(
        is_subnormal(G, P, policy)
        for p in prime_divisors(G.order())
        for P in all_sylows(G, p)
    )


@lru_cache(maxsize=8192)
def in_class_wbarU(G: PermGroup) -> bool:
    """Every Sylow subgroup is K-P-subnormal."""
    return all(is_subnormal(G, sylow(G, p), K_P_SUB) for p in prime_divisors(G.order()))


@lru_cache(maxsize=8192)
def in_wF(G: PermGroup, spec: FormationSpec) -> bool:
    """π(G) ⊆ π(F) and every Sylow subgroup is F-subnormal."""
    formation = create_formation(spec)
    primes = prime_divisors(G.order())
    if not all(formation.admits_prime(q) for q in primes):
        return False
    policy = f_sub(spec)
    return all(is_subnormal(G, sylow(G, p), policy) for p in primes)


def in_ut0(G: PermGroup, t: int) -> bool:
    return is_supersoluble(G) and in_class_Ht(G, t)


class HtFormation(BaseFormation):
    saturated = True

    def is_member(self, G: PermGroup) -> bool:
        return in_class_Ht(G, self.spec.t)


class Ut0Formation(BaseFormation):
    saturated = True

    def is_member(self, G: PermGroup) -> bool:
        return in_ut0(G, self.spec.t)
