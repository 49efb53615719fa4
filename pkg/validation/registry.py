# validation/registry.py

from __future__ import annotations

from typing import Dict, Iterable, Type

from config.settings import validate_t_values
from corpus.corpus import Corpus
from utils.errors import ArgumentError
from validation.base_suite import BaseSuite, Report, SuiteId, run_cases
from validation.class_suites import (
    FormationAxiomsSuite,
    HtClosureSuite,
    LocalDefinitionFSuite,
    LocalDefinitionXSuite,
    SylowConditionClassSuite,
    SylowInheritanceSuite,
    WUt0Suite,
)
from validation.formation_suites import (
    ChiefFactorAutomizerSuite,
    FSubnormalCalculusSuite,
    SupersolubleFactorizationSuite,
    WbarUSuite,
    WFFormationSuite,
    WFSolubleSuite,
)
from validation.subnormal_suites import (
    ConjugationTransitivitySuite,
    NormalQuotientSuite,
    OracleEquivalenceSuite,
    SolubleIntersectionSuite,
    UtSubnormalSuite,
    WorkedExamplesSuite,
)

# Mapa: identificador -> clase de la suite
SUITE_REGISTRY: Dict[SuiteId, Type[BaseSuite]] = {
    SuiteId.LEMMA_1_1: ChiefFactorAutomizerSuite,
    SuiteId.LEMMA_1_2: WbarUSuite,
    SuiteId.LEMMA_1_3_FWD: SupersolubleFactorizationSuite,
    SuiteId.LEMMA_1_4: FSubnormalCalculusSuite,
    SuiteId.LEMMA_1_5: WFSolubleSuite,
    SuiteId.LEMMA_1_6: WFFormationSuite,
    SuiteId.LEMMA_2_1: ConjugationTransitivitySuite,
    SuiteId.LEMMA_2_2: NormalQuotientSuite,
    SuiteId.LEMMA_2_3: SolubleIntersectionSuite,
    SuiteId.LEMMA_2_4: UtSubnormalSuite,
    SuiteId.EXAMPLES_PAPER: WorkedExamplesSuite,
    SuiteId.THEOREM_3_1: HtClosureSuite,
    SuiteId.THEOREM_3_2: LocalDefinitionFSuite,
    SuiteId.THEOREM_3_3: LocalDefinitionXSuite,
    SuiteId.THEOREM_3_4: WUt0Suite,
    SuiteId.ORACLE_EQUIV: OracleEquivalenceSuite,
    SuiteId.LEMMA_3_1: SylowInheritanceSuite,
    SuiteId.LEMMA_3_2: SylowConditionClassSuite,
    SuiteId.FORMATION_AXIOMS: FormationAxiomsSuite,
}


def parse_suite_id(name: str) -> SuiteId:
    try:
        return SuiteId(name.strip().upper())
    except ValueError:
        raise ArgumentError(f"unknown suite {name!r}")


def parse_suite_ids(text: str) -> list[SuiteId]:
    """`all` or a comma-separated list of suite identifiers."""
    if text.strip().lower() == "all":
        return list(SuiteId)
    ids = [parse_suite_id(part) for part in text.split(",") if part.strip()]
    if not ids:
        raise ArgumentError("no suite given")
    return ids


def create_suite(suite_id: SuiteId | str) -> BaseSuite:
    """
    Factory: SuiteId -> BaseSuite instance.

    Ejemplo:
        create_suite("THEOREM_3_4").cases(entry, t=1)
    """
    if not isinstance(suite_id, SuiteId):
        suite_id = parse_suite_id(suite_id)
    try:
        cls = SUITE_REGISTRY[suite_id]
    except KeyError:
        raise ArgumentError(f"Suite no registrada: {suite_id!r}")
    return cls()


def run_suite(suite_id: SuiteId | str, corpus: Corpus, t_values: Iterable[int], jobs: int = 1) -> Report:
    if not len(corpus):
        raise ArgumentError("empty corpus")
    return run_cases(create_suite(suite_id), corpus, validate_t_values(t_values), jobs=jobs)
