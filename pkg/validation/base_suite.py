# validation/base_suite.py

from __future__ import annotations

import logging
import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from multiprocessing import Pool
from typing import Iterable, Optional

from config.settings import PAIR_CHECK_ORDER_CAP
from corpus.corpus import Corpus, CorpusEntry
from formations.axioms import (
    Member,
    heredity_failures,
    quotient_closure_failures,
    saturation_holds,
    subdirect_closure_failures,
)
from utils.errors import ArgumentError, CapacityError, SublabError

logger = logging.getLogger(__name__)


class SuiteId(str, Enum):
    LEMMA_1_1 = "LEMMA_1_1"
    LEMMA_1_2 = "LEMMA_1_2"
    LEMMA_1_3_FWD = "LEMMA_1_3_FWD"
    LEMMA_1_4 = "LEMMA_1_4"
    LEMMA_1_5 = "LEMMA_1_5"
    LEMMA_1_6 = "LEMMA_1_6"
    LEMMA_2_1 = "LEMMA_2_1"
    LEMMA_2_2 = "LEMMA_2_2"
    LEMMA_2_3 = "LEMMA_2_3"
    LEMMA_2_4 = "LEMMA_2_4"
    EXAMPLES_PAPER = "EXAMPLES_PAPER"
    THEOREM_3_1 = "THEOREM_3_1"
    THEOREM_3_2 = "THEOREM_3_2"
    THEOREM_3_3 = "THEOREM_3_3"
    THEOREM_3_4 = "THEOREM_3_4"
    ORACLE_EQUIV = "ORACLE_EQUIV"
    LEMMA_3_1 = "LEMMA_3_1"
    LEMMA_3_2 = "LEMMA_3_2"
    FORMATION_AXIOMS = "FORMATION_AXIOMS"


class Outcome(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"


@dataclass(frozen=True)
class CaseResult:
    group: str
    t: Optional[int]
    check: str
    outcome: Outcome
    detail: str = ""

    def sort_key(self) -> tuple:
        return (self.group, self.t or 0, self.check, self.detail)

    def to_line(self) -> str:
        t = "-" if self.t is None else str(self.t)
        line = f"CASE {self.group} t={t} {self.check}={self.outcome.value}"
        return f"{line} {self.detail}" if self.detail else line


@dataclass
class Report:
    suite: SuiteId
    cases: list[CaseResult] = field(default_factory=list)
    wall_time: float = 0.0

    def count(self, outcome: Outcome) -> int:
        return sum(1 for c in self.cases if c.outcome is outcome)

    @property
    def passed(self) -> int:
        return self.count(Outcome.PASS)

    @property
    def failed(self) -> int:
        return self.count(Outcome.FAIL)

    @property
    def skipped(self) -> int:
        return self.count(Outcome.SKIP)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def lines(self) -> list[str]:
        # sin tiempos: el fichero tiene que ser idéntico entre ejecuciones
        out = [f"SUITE {self.suite.value}"]
        out.extend(c.to_line() for c in sorted(self.cases, key=CaseResult.sort_key))
        out.append(f"TOTAL pass={self.passed} fail={self.failed} skip={self.skipped}")
        return out


class BaseSuite(ABC):
    """
    One verification suite. `cases(entry, t)` runs every check that applies
    to a corpus entry (t is None when uses_t is False) and returns one
    CaseResult per check; checks that do not apply produce nothing.
    """

    suite_id: SuiteId
    uses_t: bool = True
    description: str = ""

    def entries(self, corpus: Corpus) -> Corpus:
        """Groups the suite runs on; most suites take the corpus as given."""
        return corpus

    @abstractmethod
    def cases(self, entry: CorpusEntry, t: Optional[int]) -> list[CaseResult]:
        raise NotImplementedError

    # ---- helpers para las subclases ----

    def verdict(self, entry: CorpusEntry, t: Optional[int], check: str, ok: bool, detail: str = "") -> CaseResult:
        return CaseResult(entry.name, t, check, Outcome.PASS if ok else Outcome.FAIL, "" if ok else detail)

    def skip(self, entry: CorpusEntry, t: Optional[int], check: str, reason: str) -> CaseResult:
        return CaseResult(entry.name, t, check, Outcome.SKIP, reason)

    def pair_capped(self, entry: CorpusEntry, t: Optional[int], checks: Iterable[str]) -> list[CaseResult]:
        """SKIP cases when the entry is too large for pairwise subgroup checks."""
        if entry.order <= PAIR_CHECK_ORDER_CAP:
            return []
        reason = f"order>{PAIR_CHECK_ORDER_CAP}"
        return [self.skip(entry, t, c, reason) for c in checks]

    def closure_cases(
        self,
        entry: CorpusEntry,
        t: Optional[int],
        member: Member,
        label: str,
        properties: Iterable[str] = ("quotient", "subdirect", "subgroups", "saturation"),
    ) -> list[CaseResult]:
        """
        Closure properties of the class `member` on one group, one case per
        property, named `<property>:<label>`. Saturation yields no case when
        Φ(G) = 1.
        """
        G = entry.group
        out: list[CaseResult] = []
        for prop in properties:
            check = f"{prop}:{label}"
            if prop in ("subdirect", "subgroups"):
                capped = self.pair_capped(entry, t, [check])
                if capped:
                    out.extend(capped)
                    continue
            if prop == "quotient":
                fails = quotient_closure_failures(G, member)
                out.append(self.verdict(entry, t, check, not fails, first_failure(fails)))
            elif prop == "subdirect":
                pairs = subdirect_closure_failures(G, member)
                out.append(self.verdict(entry, t, check, not pairs, first_failure(pairs)))
            elif prop == "subgroups":
                fails = heredity_failures(G, member)
                out.append(self.verdict(entry, t, check, not fails, first_failure(fails)))
            elif prop == "saturation":
                holds = saturation_holds(G, member)
                if holds is not None:
                    out.append(self.verdict(entry, t, check, holds, "frattini_quotient_in_class"))
            else:
                raise ArgumentError(f"unknown closure property {prop!r}")
        return out

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.suite_id.value})"


def first_failure(items: list, describe=None) -> str:
    """Detail text naming the first counterexample."""
    if not items:
        return ""
    head = items[0]
    text = describe(head) if describe else _describe(head)
    return f"{text} (+{len(items) - 1} more)" if len(items) > 1 else text


def _describe(item) -> str:
    if isinstance(item, tuple):
        return "/".join(_describe(x) for x in item)
    node_id = getattr(item, "node_id", None)
    if node_id is not None:
        return f"node{node_id}:order{item.order}"
    return str(item).replace(" ", "")


# ------------------------------------------------------------------ #
#  Ejecución en paralelo
# ------------------------------------------------------------------ #

# Variables globales del proceso trabajador
_GLOBAL_SUITE: Optional[BaseSuite] = None
_GLOBAL_ENTRIES: Optional[Corpus] = None


def init_worker(suite: BaseSuite, entries: Corpus) -> None:
    """
    Initializer for worker processes: installs the suite and its corpus.
    """
    global _GLOBAL_SUITE, _GLOBAL_ENTRIES
    _GLOBAL_SUITE = suite
    _GLOBAL_ENTRIES = entries


def _evaluate(task: tuple[int, Optional[int]]) -> list[CaseResult]:
    if _GLOBAL_SUITE is None or _GLOBAL_ENTRIES is None:
        raise RuntimeError("Suite not initialized in worker process.")
    index, t = task
    entry = _GLOBAL_ENTRIES[index]
    try:
        return _GLOBAL_SUITE.cases(entry, t)
    except CapacityError as e:
        return [CaseResult(entry.name, t, "capacity", Outcome.SKIP, str(e).replace("\n", " "))]
    except SublabError as e:
        logger.exception("Suite %s raised on %s", _GLOBAL_SUITE.suite_id.value, entry.name)
        return [CaseResult(entry.name, t, "error", Outcome.FAIL, f"{type(e).__name__}:{e}".replace("\n", " "))]


def run_cases(suite: BaseSuite, corpus: Corpus, t_values: Iterable[int], jobs: int = 1) -> Report:
    """
    Runs the suite over every (entry, t) task. Results are sorted before
    they reach the report, so the text is the same for any number of jobs.
    """
    entries = suite.entries(corpus)
    t_list: list[Optional[int]] = list(t_values) if suite.uses_t else [None]
    tasks = [(i, t) for i in range(len(entries)) for t in t_list]
    total = len(tasks)
    logger.info("Suite %s: %d groups, %d tasks, %d job(s)", suite.suite_id.value, len(entries), total, jobs)

    start = time.perf_counter()
    cases: list[CaseResult] = []
    progress_step = max(1, total // 10)

    if jobs <= 1:
        init_worker(suite, entries)
        results = map(_evaluate, tasks)
        for idx, res in enumerate(results, start=1):
            cases.extend(res)
            if idx % progress_step == 0 or idx == total:
                logger.debug("Progress: %d/%d", idx, total)
    else:
        with Pool(processes=jobs, initializer=init_worker, initargs=(suite, entries)) as pool:
            for idx, res in enumerate(pool.imap_unordered(_evaluate, tasks, chunksize=4), start=1):
                cases.extend(res)
                if idx % progress_step == 0 or idx == total:
                    logger.debug("Progress: %d/%d", idx, total)

    cases.sort(key=CaseResult.sort_key)
    report = Report(suite.suite_id, cases, time.perf_counter() - start)
    logger.info("Suite %s: pass=%d fail=%d skip=%d (%.1fs)",
                suite.suite_id.value, report.passed, report.failed, report.skipped, report.wall_time)
    return report
