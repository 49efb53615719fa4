# validation/formation_suites.py

"""
Suites about chief factors, the classes w̄U and wF, supersoluble
factorisations and the F-subnormality calculus.
"""

from __future__ import annotations

import logging
import time
from typing import Optional

from config.settings import FACTORIZATION_TIMEOUT_S
from corpus.corpus import CorpusEntry
from formations.base import FormationSpec
from formations.predicates import is_nilpotent, is_ore_dispersive, is_soluble, is_supersoluble
from formations.residual import residual
from groups.homomorphism import quotient
from groups.perm_group import PermGroup
from lattice.structure import automizer_is_abelian_of_exponent_dividing, chief_series
from lattice.subgroups import SubgroupLattice, SubgroupRef, all_subgroups
from subnormal.classes import in_class_wbarU, in_wF
from subnormal.models import StepPolicy
from subnormal.policies import P_SUB, f_sub
from subnormal.search import is_subnormal
from utils.numbers import prime_divisors
from validation.base_suite import BaseSuite, CaseResult, SuiteId, first_failure

logger = logging.getLogger(__name__)


class ChiefFactorAutomizerSuite(BaseSuite):
    """A chief p-factor has order p iff its automizer is abelian of exponent dividing p-1."""

    suite_id = SuiteId.LEMMA_1_1
    uses_t = False

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        G = entry.group
        bad = []
        for H, K in chief_series(G).factors():
            size = H.order // K.order
            primes = prime_divisors(size)
            if len(primes) != 1:
                continue  # factor no abeliano
            p = primes[0]
            if (size == p) != automizer_is_abelian_of_exponent_dividing(G, H, K, p - 1):
                bad.append(f"factor{size}")
        return [self.verdict(entry, t, "automizer", not bad, first_failure(bad))]


class WbarUSuite(BaseSuite):
    """Groups with K-P-subnormal Sylow subgroups: Ore dispersive, hereditary saturated formation."""

    suite_id = SuiteId.LEMMA_1_2
    uses_t = False

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        G = entry.group
        member = in_class_wbarU(G)
        out = []
        if member:
            out.append(self.verdict(entry, t, "ore_dispersive", is_ore_dispersive(G)))
        out.extend(self.closure_cases(entry, t, in_class_wbarU, "wbarU"))
        return out


def subnormal_inside(lat: SubgroupLattice, U: SubgroupRef, policy: StepPolicy) -> dict[int, bool]:
    """Verdict in U (as a group on its own) for every subgroup of U, keyed by node id in lat."""
    Ug = U.as_group()
    ulat = all_subgroups(Ug)
    return {
        H.node_id: is_subnormal(Ug, ulat.generated_by(H.generators), policy)
        for H in lat.subgroups_of(U)
    }


class _Timeout(Exception):
    pass


def nilpotent_p_subnormal_factorization(
    G: PermGroup, timeout: float | None = None
) -> tuple[SubgroupRef, SubgroupRef] | None:
    """
    Nilpotent P-subnormal subgroups A, B with AB = G, i.e.
    |A||B| = |G||A ∩ B|; larger candidates are tried first.
    Raises _Timeout when `timeout` seconds pass without an answer.
    """
    deadline = None if timeout is None else time.monotonic() + timeout

    def tick() -> None:
        if deadline is not None and time.monotonic() > deadline:
            raise _Timeout()

    lat = all_subgroups(G)
    n = G.order()
    candidates = []
    for X in lat:
        tick()
        if is_nilpotent(X.as_group()) and is_subnormal(G, X, P_SUB):
            candidates.append(X)
    candidates.sort(key=lambda X: (-X.order, X.node_id))

    for i, A in enumerate(candidates):
        for B in candidates[i:]:
            if A.order * B.order < n:
                break
            if A.order * B.order == n * lat.intersect(A, B).order:
                return A, B
        tick()
    return None


class SupersolubleFactorizationSuite(BaseSuite):
    """
    Supersoluble groups are products of two nilpotent P-subnormal subgroups;
    for the other groups no such product exists.
    """

    suite_id = SuiteId.LEMMA_1_3_FWD
    uses_t = False

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        G = entry.group
        supersoluble = is_supersoluble(G)
        check = "factorization" if supersoluble else "no_factorization"
        if not supersoluble:
            capped = self.pair_capped(entry, t, [check])
            if capped:
                return capped
        try:
            found = nilpotent_p_subnormal_factorization(G, FACTORIZATION_TIMEOUT_S)
        except _Timeout:
            return [self.skip(entry, t, check, f"timeout>{FACTORIZATION_TIMEOUT_S:g}s")]
        if supersoluble:
            detail = "" if found else "no_pair_found"
            return [self.verdict(entry, t, check, found is not None, detail)]
        return [self.verdict(entry, t, check, found is None, first_failure([found]) if found else "")]


class FSubnormalCalculusSuite(BaseSuite):
    """
    F-subnormality for F = U_t (hereditary): transitivity, lifting from and
    passing to quotients, residual containment, intersections.
    """

    suite_id = SuiteId.LEMMA_1_4
    CHECKS = ("transitive", "lift", "descend", "residual_contained", "intersection")

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        capped = self.pair_capped(entry, t, self.CHECKS)
        if capped:
            return capped

        G = entry.group
        spec = FormationSpec.u_k(t)
        policy = f_sub(spec)
        lat = all_subgroups(G)
        sub = {X.node_id: is_subnormal(G, X, policy) for X in lat}
        bad: dict[str, list] = {c: [] for c in self.CHECKS}

        R = residual(G, spec)
        bad["residual_contained"] = [X for X in lat.overgroups_of(R) if not sub[X.node_id]]

        for U in lat:
            in_u = subnormal_inside(lat, U, policy)
            for H in lat.subgroups_of(U):
                if in_u[H.node_id] and sub[U.node_id] and not sub[H.node_id]:
                    bad["transitive"].append((H, U))
            for H in lat:
                if sub[H.node_id] and not in_u[lat.intersect(H, U).node_id]:
                    bad["intersection"].append((H, U))

        for N in lat.normal_subgroups():
            if N.order in (1, G.order()):
                continue
            Q, hom = quotient(G, N.as_group())
            qlat = all_subgroups(Q)
            for U in lat:
                image_sub = is_subnormal(Q, lat.map_through(hom, U, qlat), policy)
                if sub[U.node_id] and not image_sub:
                    bad["descend"].append((U, N))
                if N <= U and image_sub and not sub[U.node_id]:
                    bad["lift"].append((U, N))

        return [self.verdict(entry, t, c, not bad[c], first_failure(bad[c])) for c in self.CHECKS]


class WFSolubleSuite(BaseSuite):
    """wF lies in the soluble groups for hereditary F of soluble groups."""

    suite_id = SuiteId.LEMMA_1_5

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        G = entry.group
        out = []
        for spec in (FormationSpec.u_t0(t), FormationSpec.u_k(t)):
            if in_wF(G, spec):
                out.append(self.verdict(entry, t, f"soluble:w{spec.label}", is_soluble(G)))
        return out


class WFFormationSuite(BaseSuite):
    """wF is a hereditary saturated formation when F is one."""

    suite_id = SuiteId.LEMMA_1_6

    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        out = []
        for spec in (FormationSpec.nilpotent(), FormationSpec.supersoluble(), FormationSpec.u_t0(t)):

            def member(X: PermGroup, spec: FormationSpec = spec) -> bool:
                return in_wF(X, spec)

            out.extend(self.closure_cases(entry, t, member, f"w{spec.label}"))
        return out
