# formations/predicates.py

"""
Membership predicates for the built-in group classes.
All of them are pure functions of the (immutable) group.
"""

from __future__ import annotations

from sympy import factorint

from groups.perm_group import PermGroup
from lattice.structure import (
    all_subgroups,
    chief_series,
    o_p,
    quotient_is_abelian_of_exponent_dividing,
    sylow,
)
from utils.errors import ArgumentError
from utils.numbers import is_prime, is_prime_power_of, max_prime_multiplicity, prime_divisors, require_prime


def pt_admissible(p: int, t: int) -> bool:
    """No prime power q^(t+1) divides p - 1."""
    require_prime(p)
    if t < 1:
        raise ArgumentError(f"t must be positive, got {t}")
    return all(e <= t for e in factorint(p - 1).values())


def is_soluble(G: PermGroup) -> bool:
    return G.is_soluble()


def is_nilpotent(G: PermGroup) -> bool:
    # equivalente a "todos los Sylow normales"; sympy lo decide sin retículo
    return G.is_nilpotent()


def is_abelian(G: PermGroup) -> bool:
    return G.is_abelian()


def is_p_group(G: PermGroup, p: int) -> bool:
    return is_prime_power_of(G.order(), require_prime(p))


def is_supersoluble(G: PermGroup) -> bool:
    if G.is_nilpotent():
        return True
    if not G.is_soluble():
        return False
    return all(is_prime(n) for n in chief_series(G).factor_orders())


def is_ore_dispersive(G: PermGroup) -> bool:
    """
    Sylow tower for the primes in decreasing order: for every i there is a
    normal subgroup of order p_1^a_1 ... p_i^a_i.
    """
    order = G.order()
    if order == 1:
        return True
    normal_orders = {n.order for n in all_subgroups(G).normal_subgroups()}
    exponents = factorint(order)
    prefix = 1
    for p in sorted(exponents, reverse=True):
        prefix *= p ** exponents[p]
        if prefix not in normal_orders:
            return False
    return True


def in_abelian_exp_div(G: PermGroup, m: int) -> bool:
    if m < 1:
        raise ArgumentError(f"m must be positive, got {m}")
    return G.is_abelian() and m % G.exponent() == 0


def in_np_a(G: PermGroup, p: int) -> bool:
    """G/O_p(G) abelian of exponent dividing p - 1."""
    require_prime(p)
    return quotient_is_abelian_of_exponent_dividing(G, o_p(G, p), p - 1)


def in_sylow_np_a(G: PermGroup, p: int, soluble: bool = False) -> bool:
    """Every Sylow subgroup of G lies in N_p A(p-1) (and G soluble when asked)."""
    if soluble and not G.is_soluble():
        return False
    return all(in_np_a(sylow(G, q).as_group(), p) for q in prime_divisors(G.order()))


def in_u_k(G: PermGroup, k: int) -> bool:
    if k < 1:
        raise ArgumentError(f"k must be positive, got {k}")
    return is_supersoluble(G) and max_prime_multiplicity(G.exponent()) <= k
