# formations/local.py

from __future__ import annotations

import logging
from functools import partial
from itertools import islice

from formations.base import FormationSpec, LocalFunction
from formations.predicates import pt_admissible
from groups.homomorphism import quotient
from groups.perm_group import PermGroup
from lattice.structure import chief_centralizer, chief_series
from utils.numbers import prime_divisors

logger = logging.getLogger(__name__)


def sylow_condition_f(p: int, t: int) -> FormationSpec:
    """
    F(p) = soluble groups whose Sylow subgroups all lie in N_p A(p-1)
    when p is t-admissible, otherwise N_p.
    """
    if pt_admissible(p, t):
        return FormationSpec.sylow_np_a(p, soluble=True)
    return FormationSpec.p_groups(p)


def np_a_x(p: int, t: int) -> FormationSpec:
    """X(p) = N_p A(p-1) when p is t-admissible, otherwise N_p."""
    if pt_admissible(p, t):
        return FormationSpec.np_a(p)
    return FormationSpec.p_groups(p)


def local_function_F(t: int) -> LocalFunction:
    return LocalFunction(name="F", t=t, evaluator=partial(sylow_condition_f, t=t))


def local_function_X(t: int) -> LocalFunction:
    return LocalFunction(name="X", t=t, evaluator=partial(np_a_x, t=t))


def automizer(G: PermGroup, H, K) -> PermGroup:
    """G / C_G(H/K) as a permutation group (coset action)."""
    C = chief_centralizer(G, H, K)
    Q, _ = quotient(G, C.as_group())
    return Q


def lf_member(G: PermGroup, f: LocalFunction) -> bool:
    """
    G ∈ LF(f): for every factor H/K of the computed chief series and every
    prime p dividing |H/K|, G/C_G(H/K) ∈ f(p).
    """
    from formations.registry import is_member

    for H, K in chief_series(G).factors():
        A = automizer(G, H, K)
        for p in prime_divisors(H.order // K.order):
            if not is_member(A, f(p)):
                logger.debug("LF(%s, t=%d) fails at a chief factor of order %d (p=%d)",
                             f.name, f.t, H.order // K.order, p)
                return False
    return True


def lf_member_every_series(G: PermGroup, f: LocalFunction, limit: int | None = None) -> set[bool]:
    """
    Verdicts of the LF test over the chief series of G (all of them, or the
    first `limit`). A single verdict means the choice of series is irrelevant.
    """
    from formations.registry import is_member
    from lattice.structure import all_chief_series

    verdicts = set()
    for series in islice(all_chief_series(G), limit):
        ok = True
        for H, K in series.factors():
            A = automizer(G, H, K)
            if not all(is_member(A, f(p)) for p in prime_divisors(H.order // K.order)):
                ok = False
                break
        verdicts.add(ok)
    return verdicts
