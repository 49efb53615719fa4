# formations/catalogue.py

from __future__ import annotations

from formations.base import BaseFormation
from formations.local import lf_member
from formations import predicates as pred
from groups.perm_group import PermGroup
from utils.numbers import prime_divisors


class TrivialFormation(BaseFormation):
    saturated = False

    def is_member(self, G: PermGroup) -> bool:
        return G.is_trivial()

    def admits_prime(self, q: int) -> bool:
        return False


class NilpotentFormation(BaseFormation):
    saturated = True

    def is_member(self, G: PermGroup) -> bool:
        return pred.is_nilpotent(G)


class SolubleFormation(BaseFormation):
    saturated = True

    def is_member(self, G: PermGroup) -> bool:
        return pred.is_soluble(G)


class SupersolubleFormation(BaseFormation):
    saturated = True

    def is_member(self, G: PermGroup) -> bool:
        return pred.is_supersoluble(G)


class AbelianFormation(BaseFormation):
    def is_member(self, G: PermGroup) -> bool:
        return pred.is_abelian(G)


class PGroupFormation(BaseFormation):
    """N_p."""
    saturated = True

    def is_member(self, G: PermGroup) -> bool:
        return pred.is_p_group(G, self.spec.p)

    def admits_prime(self, q: int) -> bool:
        return q == self.spec.p


class AbelianExpDivFormation(BaseFormation):
    """A(m): abelian groups of exponent dividing m."""

    def is_member(self, G: PermGroup) -> bool:
        return pred.in_abelian_exp_div(G, self.spec.m)

    def admits_prime(self, q: int) -> bool:
        return self.spec.m % q == 0


class NpAFormation(BaseFormation):
    """N_p A(p-1)."""

    def is_member(self, G: PermGroup) -> bool:
        return pred.in_np_a(G, self.spec.p)

    def admits_prime(self, q: int) -> bool:
        return q == self.spec.p or q in prime_divisors(self.spec.p - 1)


class SylowNpAFormation(BaseFormation):
    """Groups whose Sylow subgroups all lie in N_p A(p-1); soluble ones only if spec.soluble."""

    def is_member(self, G: PermGroup) -> bool:
        return pred.in_sylow_np_a(G, self.spec.p, soluble=self.spec.soluble)

    def admits_prime(self, q: int) -> bool:
        return q == self.spec.p or q in prime_divisors(self.spec.p - 1)


class UkFormation(BaseFormation):
    def is_member(self, G: PermGroup) -> bool:
        return pred.in_u_k(G, self.spec.k)


class LocalFormation(BaseFormation):
    """LF(f) for one of the built-in local functions."""
    saturated = True

    def is_member(self, G: PermGroup) -> bool:
        return lf_member(G, self.spec.local)
