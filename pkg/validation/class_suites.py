# validation/class_suites.py

"""
Suites on H_t (every Sylow subgroup K-P_t-subnormal), U_t^0, their local
definitions, the Sylow-condition classes and the built-in formations.
"""

from __future__ import annotations

import logging
from typing import Optional

from config.settings import ORACLE_ORDER_CAP, PAIR_CHECK_ORDER_CAP
from corpus.corpus import CorpusEntry
from corpus.recipes import build, recipe_from_name
from formations.axioms import direct_product_holds, factor_group, membership, residual_commutes_with_quotient
from formations.base import FormationSpec
from formations.local import lf_member, lf_member_every_series, local_function_F, local_function_X
from formations.predicates import is_nilpotent, is_ore_dispersive, is_p_group, in_np_a, pt_admissible
from formations.registry import create_formation
from groups.perm_group import PermGroup
from lattice.structure import quotient_is_abelian_of_exponent_dividing, sylow
from lattice.subgroups import all_subgroups
from subnormal.classes import in_class_Ht, in_ut0, in_wF
from subnormal.policies import k_p_t
from subnormal.search import is_subnormal
from utils.numbers import prime_divisors
from validation.base_suite import BaseSuite, CaseResult, SuiteId, first_failure

logger = logging.getLogger(__name__)

# factores con los que se prueba el cierre por productos directos
_PRODUCT_PARTNERS = ("Z2", "Z3", "S3")

# series principales a comparar por grupo en THEOREM_3_2
_SERIES_LIMIT = 24


def _ht(t: int):
    def member(X: PermGroup) -> bool:
        return in_class_Ht(X, t)

    return member


class HtClosureSuite(BaseSuite):
    """
    H_t contains the nilpotent groups, consists of Ore dispersive groups and
    is closed under quotients, subdirect products, subgroups, Frattini
    extensions and direct products.
    """

    suite_id = SuiteId.THEOREM_3_1

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        G = entry.group
        member = _ht(t)
        out = []
        in_class = member(G)
        if is_nilpotent(G):
            out.append(self.verdict(entry, t, "nilpotent_included", in_class))
        if in_class:
            out.append(self.verdict(entry, t, "ore_dispersive", is_ore_dispersive(G)))
        out.extend(self.closure_cases(entry, t, member, f"H_{t}"))
        out.append(self._direct_products(entry, t, member))
        return out

    def _direct_products(self, entry: CorpusEntry, t: int, member) -> CaseResult:
        G = entry.group
        partners = [(name, build(recipe_from_name(name))) for name in _PRODUCT_PARTNERS]
        partners = [(name, P) for name, P in partners if G.order() * P.order() <= PAIR_CHECK_ORDER_CAP]
        if not partners:
            return self.skip(entry, t, "direct_product", f"order>{PAIR_CHECK_ORDER_CAP}")
        bad = [name for name, P in partners if direct_product_holds(G, P, member) is False]
        return self.verdict(entry, t, "direct_product", not bad, first_failure(bad))


class LocalDefinitionFSuite(BaseSuite):
    """H_t = LF(F) with F(p) the soluble Sylow-condition class or N_p."""

    suite_id = SuiteId.THEOREM_3_2

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        G = entry.group
        f = local_function_F(t)
        out = [self.verdict(entry, t, "local_F", in_class_Ht(G, t) == lf_member(G, f))]
        if entry.order <= ORACLE_ORDER_CAP:
            verdicts = lf_member_every_series(G, f, limit=_SERIES_LIMIT)
            out.append(self.verdict(entry, t, "series_independent", len(verdicts) == 1, "verdicts_differ"))
        return out


class LocalDefinitionXSuite(BaseSuite):
    """U_t^0 = LF(X) with X(p) = N_p A(p-1) or N_p."""

    suite_id = SuiteId.THEOREM_3_3

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        G = entry.group
        same = in_ut0(G, t) == lf_member(G, local_function_X(t))
        return [self.verdict(entry, t, "local_X", same)]


class WUt0Suite(BaseSuite):
    """H_t = wU_t^0."""

    suite_id = SuiteId.THEOREM_3_4

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        G = entry.group
        same = in_class_Ht(G, t) == in_wF(G, FormationSpec.u_t0(t))
        return [self.verdict(entry, t, "wU_t0", same)]


class SylowInheritanceSuite(BaseSuite):
    """
    A K-P_t-subnormal Sylow p-subgroup passes the property to the Sylow
    p-subgroups of every normal subgroup and every quotient.
    """

    suite_id = SuiteId.LEMMA_3_1

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        G = entry.group
        lat = all_subgroups(G)
        policy = k_p_t(t)
        normals = [N for N in lat.normal_subgroups() if 1 < N.order < G.order()]
        bad_n, bad_q = [], []
        for p in prime_divisors(G.order()):
            if not is_subnormal(G, sylow(G, p), policy):
                continue
            for N in normals:
                Ng = N.as_group()
                if N.order % p == 0 and not is_subnormal(Ng, sylow(Ng, p), policy):
                    bad_n.append(f"p{p}:node{N.node_id}")
                if (G.order() // N.order) % p == 0:
                    Q = factor_group(G, N)
                    if not is_subnormal(Q, sylow(Q, p), policy):
                        bad_q.append(f"p{p}:node{N.node_id}")

        out = [
            self.verdict(entry, t, "sylow_in_normal", not bad_n, first_failure(bad_n)),
            self.verdict(entry, t, "sylow_in_quotient", not bad_q, first_failure(bad_q)),
        ]
        if in_class_Ht(G, t):
            bad = [N for N in normals if not in_class_Ht(N.as_group(), t)]
            out.append(self.verdict(entry, t, "normal_in_class", not bad, first_failure(bad)))
            bad = [N for N in normals if not in_class_Ht(factor_group(G, N), t)]
            out.append(self.verdict(entry, t, "quotient_in_class", not bad, first_failure(bad)))
        return out


class SylowConditionClassSuite(BaseSuite):
    """For t-admissible p, {G : Syl(G) ⊆ N_p A(p-1)} is a hereditary formation."""

    suite_id = SuiteId.LEMMA_3_2
    EXTRA_PRIMES = (2, 3, 5, 7)

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        primes = sorted(set(prime_divisors(entry.order)) | set(self.EXTRA_PRIMES))
        out = []
        for p in primes:
            if not pt_admissible(p, t):
                continue
            spec = FormationSpec.sylow_np_a(p)
            out.extend(self.closure_cases(
                entry, t, membership(spec), spec.label, properties=("quotient", "subdirect", "subgroups"),
            ))
        return out


def np_a_by_search(G: PermGroup, p: int) -> bool:
    """Some normal p-subgroup N has G/N abelian of exponent dividing p-1."""
    return any(
        is_p_group(N.as_group(), p) and quotient_is_abelian_of_exponent_dividing(G, N, p - 1)
        for N in all_subgroups(G).normal_subgroups()
    )


class FormationAxiomsSuite(BaseSuite):
    """
    Quotient and subdirect closure of every built-in formation, heredity,
    saturation where claimed, residuals through quotients and the O_p
    shortcut for N_p A(p-1).
    """

    suite_id = SuiteId.FORMATION_AXIOMS

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        G = entry.group
        primes = prime_divisors(G.order())
        specs = [
            FormationSpec.nilpotent(),
            FormationSpec.soluble_groups(),
            FormationSpec.supersoluble(),
            FormationSpec.abelian(),
            FormationSpec.u_k(t),
        ] + [FormationSpec.np_a(p) for p in primes]

        out = []
        for spec in specs:
            formation = create_formation(spec)
            props = ["quotient", "subdirect"]
            if formation.hereditary:
                props.append("subgroups")
            if formation.saturated:
                props.append("saturation")
            out.extend(self.closure_cases(entry, t, membership(spec), spec.label, properties=props))

        normals = all_subgroups(G).normal_subgroups()
        for spec in (FormationSpec.nilpotent(), FormationSpec.u_k(t)):
            bad = [N for N in normals if not residual_commutes_with_quotient(G, N, spec)]
            out.append(self.verdict(entry, t, f"residual_quotient:{spec.label}", not bad, first_failure(bad)))

        if entry.order <= ORACLE_ORDER_CAP:
            bad = [p for p in primes if in_np_a(G, p) != np_a_by_search(G, p)]
            out.append(self.verdict(entry, t, "np_a_shortcut", not bad, first_failure(bad)))
        return out
