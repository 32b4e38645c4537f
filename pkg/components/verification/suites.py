"""Named verification suites as run by ``verify --suite``."""
import logging
from typing import Optional

from components.verification.corpus import corpus_by_genus, corpus_generate
from components.verification.reports import CorpusSpec, VerificationReport
from components.verification.table1 import table1_records, table1_report
from components.verification.theorems import (
    ApplicationCache,
    finish_report,
    check_theorem_main1_simple_dual,
    check_theorem_main2,
    check_theorem_simple,
    run_lemma_suite,
)

logger = logging.getLogger(__name__)

SUITES = ('main1', 'main2', 'simple', 'lemmas', 'table1', 'all')


def run_suite(suite: str, spec: Optional[CorpusSpec] = None, strict: bool = False) -> VerificationReport:
    """
    Run one suite over a corpus generated from ``spec``.

    ``all`` runs every suite on one shared corpus and application cache.
    """
    if suite not in SUITES:
        raise ValueError(f"unknown suite '{suite}'; choose from {', '.join(SUITES)}")
    spec = spec or CorpusSpec()
    report = VerificationReport(suite=suite, seed=spec.seed, max_vertices=spec.max_vertices)
    apply = ApplicationCache()
    names = SUITES[:-1] if suite == 'all' else (suite,)
    corpus = corpus_generate(spec)
    by_genus = {g: len(maps) for g, maps in sorted(corpus_by_genus(corpus).items())}
    logger.info(f"Running {', '.join(names)} on {len(corpus)} hosts (by genus: {by_genus})")
    for name in names:
        if name == 'main2':
            check_theorem_main2(corpus, None, report, False, apply)
        elif name == 'main1':
            check_theorem_main1_simple_dual(corpus, None, report, False, apply)
        elif name == 'simple':
            check_theorem_simple(corpus, None, report, False, apply)
        elif name == 'lemmas':
            run_lemma_suite(corpus, None, report, False, apply)
        else:
            table1_records(table1_report(corpus, None, spec, False, apply), report)
    return finish_report(report, strict)
