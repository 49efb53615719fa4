# validation/subnormal_suites.py

"""
Suites on K-P_t-subnormal subgroups: conjugation and transitivity,
behaviour under normal subgroups and quotients, intersections in soluble
groups, comparison with U_t-subnormality, the worked examples and the
brute-force oracle.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Optional

from config.settings import MAX_T_VALUE, ORACLE_ORDER_CAP
from corpus.corpus import Corpus, CorpusEntry
from corpus.recipes import GroupRecipe
from formations.base import FormationSpec
from formations.predicates import is_soluble
from formations.residual import residual
from groups.homomorphism import quotient
from groups.permutation import Permutation
from lattice.structure import conjugate_mask, sylow
from lattice.subgroups import all_subgroups
from subnormal.classes import in_class_Ht, in_class_Ht_all_sylows
from subnormal.models import NormalStep, PrimeStep
from subnormal.oracle import brute_force_oracle
from subnormal.policies import K_P_SUB, P_SUB, SUBNORMAL, f_sub, k_f_sub, k_p_t
from subnormal.search import compose_witnesses, is_subnormal, is_subnormal_variant, relocate, validate_witness
from validation.base_suite import BaseSuite, CaseResult, SuiteId, first_failure
from validation.formation_suites import subnormal_inside

logger = logging.getLogger(__name__)


def _verdicts(G, policy) -> dict[int, bool]:
    return {X.node_id: is_subnormal(G, X, policy) for X in all_subgroups(G)}


class ConjugationTransitivitySuite(BaseSuite):
    suite_id = SuiteId.LEMMA_2_1
    CHECKS = ("conjugation", "transitive", "policy_monotone", "sylow_conjugates")

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        G = entry.group
        lat = all_subgroups(G)
        policy = k_p_t(t)
        sub = _verdicts(G, policy)
        out = []

        # conjugados por los generadores de G
        gen_ids = [lat.table.index[g] for g in G.generators]
        bad = [
            X for X in lat for g in gen_ids
            if sub[lat.node_of_mask(conjugate_mask(lat, X, g)).node_id] != sub[X.node_id]
        ]
        out.append(self.verdict(entry, t, "conjugation", not bad, first_failure(bad)))

        # SUBNORMAL => K_P_T(t) => K_P_T(t+1) => K_P_SUB
        chain = [_verdicts(G, SUBNORMAL), sub]
        if t < MAX_T_VALUE:
            chain.append(_verdicts(G, k_p_t(t + 1)))
        chain.append(_verdicts(G, K_P_SUB))
        bad = [
            X for X in lat
            if any(stronger[X.node_id] and not weaker[X.node_id] for stronger, weaker in zip(chain, chain[1:]))
        ]
        out.append(self.verdict(entry, t, "policy_monotone", not bad, first_failure(bad)))

        if entry.order <= ORACLE_ORDER_CAP:
            same = in_class_Ht(G, t) == in_class_Ht_all_sylows(G, t)
            out.append(self.verdict(entry, t, "sylow_conjugates", same, "one_sylow_per_prime_differs"))

        capped = self.pair_capped(entry, t, ["transitive"])
        if capped:
            return out + capped

        bad = []
        for R in lat:
            ok_r, w_r = is_subnormal_variant(G, R, policy)
            if not ok_r:
                continue
            Rg = R.as_group()
            rlat = all_subgroups(Rg)
            for H in lat.subgroups_of(R):
                ok_h, w_h = is_subnormal_variant(Rg, rlat.generated_by(H.generators), policy)
                if not ok_h:
                    continue
                chain_w = compose_witnesses(relocate(w_h, lat), w_r)
                if not (sub[H.node_id] and validate_witness(chain_w, policy)):
                    bad.append((H, R))
        out.append(self.verdict(entry, t, "transitive", not bad, first_failure(bad)))
        return out


class NormalQuotientSuite(BaseSuite):
    """Intersections with normal subgroups, images in and lifts from quotients."""

    suite_id = SuiteId.LEMMA_2_2
    CHECKS = ("intersection_normal", "image", "lift", "product", "product_intersection")

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        capped = self.pair_capped(entry, t, self.CHECKS)
        if capped:
            return capped

        G = entry.group
        lat = all_subgroups(G)
        policy = k_p_t(t)
        sub = _verdicts(G, policy)
        bad: dict[str, list] = {c: [] for c in self.CHECKS}
        normals = lat.normal_subgroups()

        for N in normals:
            in_n = subnormal_inside(lat, N, policy)
            for H in lat:
                if sub[H.node_id] and not in_n[lat.intersect(H, N).node_id]:
                    bad["intersection_normal"].append((H, N))

            if N.order in (1, G.order()):
                continue
            Q, hom = quotient(G, N.as_group())
            qlat = all_subgroups(Q)
            for H in lat:
                image_sub = is_subnormal(Q, lat.map_through(hom, H, qlat), policy)
                if sub[H.node_id] and not image_sub:
                    bad["image"].append((H, N))
                if N <= H and image_sub and not sub[H.node_id]:
                    bad["lift"].append((H, N))
                if sub[lat.join(H, N).node_id] != image_sub:
                    bad["product"].append((H, N))

        for N1, N2 in combinations(normals, 2):
            for H in lat:
                A, B = lat.join(H, N1), lat.join(H, N2)
                if sub[A.node_id] and sub[B.node_id] and not sub[lat.intersect(A, B).node_id]:
                    bad["product_intersection"].append((H, N1, N2))

        return [self.verdict(entry, t, c, not bad[c], first_failure(bad[c])) for c in self.CHECKS]


class SolubleIntersectionSuite(BaseSuite):
    """In soluble groups, K-P_t-subnormality passes to intersections."""

    suite_id = SuiteId.LEMMA_2_3
    CHECKS = ("intersection", "two_subnormal")

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        G = entry.group
        if not is_soluble(G):
            return []
        capped = self.pair_capped(entry, t, self.CHECKS)
        if capped:
            return capped

        lat = all_subgroups(G)
        policy = k_p_t(t)
        sub = _verdicts(G, policy)
        bad: dict[str, list] = {c: [] for c in self.CHECKS}
        marked = [H for H in lat if sub[H.node_id]]

        for U in lat:
            in_u = subnormal_inside(lat, U, policy)
            for H in marked:
                meet = lat.intersect(H, U)
                if not in_u[meet.node_id]:
                    bad["intersection"].append((H, U))
                if sub[U.node_id] and not sub[meet.node_id]:
                    bad["two_subnormal"].append((H, U))

        return [self.verdict(entry, t, c, not bad[c], first_failure(bad[c])) for c in self.CHECKS]


class UtSubnormalSuite(BaseSuite):
    """In soluble groups a K-P_t-subnormal subgroup is U_t-subnormal."""

    suite_id = SuiteId.LEMMA_2_4

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        G = entry.group
        if not is_soluble(G):
            return []
        lat = all_subgroups(G)
        kpt, fsub = k_p_t(t), f_sub(FormationSpec.u_k(t))
        bad = [X for X in lat if is_subnormal(G, X, kpt) and not is_subnormal(G, X, fsub)]
        return [self.verdict(entry, t, "u_t_subnormal", not bad, first_failure(bad))]


# ------------------------------------------------------------------ #
#  Ejemplos concretos
# ------------------------------------------------------------------ #

class WorkedExamplesSuite(BaseSuite):
    """
    Fixed examples, independent of the corpus and of --t:
      Hol(Z_17): the order-2 subgroup of the Z_16 complement is K-P- and
        P-subnormal, not K-P_3-subnormal, but K-P_4-subnormal.
      A_5, t=2: the Sylow 2-subgroup is K-P_2-subnormal through A_4
        (normal step, then index 5) and not U_2-subnormal;
        A_5^{U_2} = A_5 and A_4^{U_2} is the Sylow 2-subgroup.
      Z_13 ⋊ Z_3, t=1: the Sylow 3-subgroup is U_1-subnormal since
        G^{U_1} = 1, and not K-P_1-subnormal (13 - 1 = 2^2 * 3).
    """

    suite_id = SuiteId.EXAMPLES_PAPER
    uses_t = False

    def entries(self, corpus: Corpus) -> Corpus:
        out = Corpus()
        out.add_recipe(GroupRecipe.holomorph_cyclic(17), "holomorph of Z_17")
        out.add_recipe(GroupRecipe.alternating(5), "alternating group of degree 5")
        out.add_recipe(GroupRecipe.semidirect_cyclic(13, 3), "nonabelian group of order 39")
        return out

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        handler = {"Hol17": self._holomorph17, "A5": self._a5, "SD13_3": self._order39}[entry.name]
        return handler(entry)

    def _holomorph17(self, entry: CorpusEntry) -> list[CaseResult]:
        G = entry.group
        lat = all_subgroups(G)
        # x -> -x fija el 0: es la involución del complemento Z_16
        H = lat.generated_by([Permutation(tuple((-x) % 17 for x in range(17)))])
        ok, witness = is_subnormal_variant(G, H, K_P_SUB)
        return [
            self.verdict(entry, None, "kpsub", ok and validate_witness(witness, K_P_SUB)),
            self.verdict(entry, None, "psub", is_subnormal(G, H, P_SUB)),
            self.verdict(entry, 3, "not_kpt", not is_subnormal(G, H, k_p_t(3))),
            self.verdict(entry, 4, "kpt", is_subnormal(G, H, k_p_t(4))),
        ]

    def _a5(self, entry: CorpusEntry) -> list[CaseResult]:
        G = entry.group
        H = sylow(G, 2)
        ok, witness = is_subnormal_variant(G, H, k_p_t(2))
        shape = (
            ok and len(witness) == 2
            and isinstance(witness.steps[0], NormalStep) and witness.nodes[1].order == 12
            and witness.steps[1] == PrimeStep(5)
        )
        spec = FormationSpec.u_k(2)
        out = [
            self.verdict(entry, 2, "kpt", shape, witness.summary() if witness is not None else "no_chain"),
            self.verdict(entry, 2, "not_fsub", not is_subnormal(G, H, f_sub(spec))),
            self.verdict(entry, 2, "residual_G", residual(G, spec).order == G.order()),
        ]
        if ok and witness.nodes[1].order == 12:
            A4 = witness.nodes[1].as_group()
            R = residual(A4, spec)
            same = set(R.as_group().elements()) == set(H.as_group().elements())
            out.append(self.verdict(entry, 2, "residual_A4", same, f"order{R.order}"))
        return out

    def _order39(self, entry: CorpusEntry) -> list[CaseResult]:
        G = entry.group
        H = sylow(G, 3)
        spec = FormationSpec.u_k(1)
        return [
            self.verdict(entry, 1, "fsub", is_subnormal(G, H, f_sub(spec))),
            self.verdict(entry, 1, "residual_trivial", residual(G, spec).order == 1),
            self.verdict(entry, 1, "not_kpt", not is_subnormal(G, H, k_p_t(1))),
        ]


class OracleEquivalenceSuite(BaseSuite):
    """Breadth-first search against exhaustive enumeration, plus witness replay."""

    suite_id = SuiteId.ORACLE_EQUIV

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        spec = FormationSpec.u_k(t)
        policies = [SUBNORMAL, P_SUB, K_P_SUB, k_p_t(t), f_sub(spec), k_f_sub(spec)]
        if entry.order > ORACLE_ORDER_CAP:
            reason = f"order>{ORACLE_ORDER_CAP}"
            return [self.skip(entry, t, f"oracle:{p.label}", reason) for p in policies]

        G = entry.group
        lat = all_subgroups(G)
        out = []
        for policy in policies:
            mismatches, broken = [], []
            for X in lat:
                ok, witness = is_subnormal_variant(G, X, policy)
                if ok != brute_force_oracle(G, X, policy):
                    mismatches.append(X)
                if ok and not validate_witness(witness, policy):
                    broken.append(X)
            out.append(self.verdict(entry, t, f"oracle:{policy.label}", not mismatches, first_failure(mismatches)))
            out.append(self.verdict(entry, t, f"witness:{policy.label}", not broken, first_failure(broken)))
        return out
