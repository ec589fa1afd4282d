# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 Dimitrios Kafetzis
#
# This file is part of the Galois Ring QFT project.
# Licensed under the MIT License; you may not use this file except in compliance
# with the License. You may obtain a copy of the License at
#   https://opensource.org/licenses/MIT
#
# Author:  Dimitrios Kafetzis (dimitrioskafetzis@gmail.com)
# File:    src/verification/suite.py
# Description:
#   Runs every registered check against a list of rings and aggregates the
#   outcomes into a VerificationReport.
#
# ---------------------------------------------------------------------------

"""
Rings are independent, so run_all hands them to joblib workers; results are
logged in the calling process once all workers finish. A ring that cannot be
constructed yields a single FAILED "construct_ring" entry and the other rings
are unaffected.
"""

from typing import List, Optional, Sequence

from joblib import Parallel, delayed
from tqdm import tqdm

from ..core.ring import RingSpec
from ..utils.config import DEFAULT_RING_SPECS, SuiteConfig
from ..utils.logging import ExperimentLogger, NullLogger
from .checks import CHECKS, CheckContext, run_check
from .report import CheckResult, CheckStatus, VerificationReport

DEFAULT_SPECS = DEFAULT_RING_SPECS
CONSTRUCT_CHECK = "construct_ring"


def run_ring(
    spec: RingSpec,
    config: Optional[SuiteConfig] = None,
    checks: Optional[Sequence[str]] = None
) -> List[CheckResult]:
    """All (or the selected) checks on one ring"""
    config = config or SuiteConfig()
    names = list(checks) if checks is not None else list(CHECKS)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {unknown}")

    context = CheckContext(spec, config)
    try:
        context.ring
    except Exception as e:
        return [CheckResult(
            name=CONSTRUCT_CHECK,
            ring=spec,
            status=CheckStatus.FAILED,
            seed=config.sampling.seed,
            message=f"{type(e).__name__}: {e}"
        )]
    return [run_check(name, context) for name in names]


def run_all(
    specs: Sequence[RingSpec],
    config: Optional[SuiteConfig] = None,
    logger: Optional[ExperimentLogger] = None,
    checks: Optional[Sequence[str]] = None
) -> VerificationReport:
    """
    Execute every check against every spec.

    Args:
        specs: Rings to verify; an empty sequence gives an empty passing report
        config: Tolerances, sampling, caps and worker count
        logger: Receives one record per check
        checks: Optional subset of check names

    Returns:
        The aggregated report
    """
    config = config or SuiteConfig()
    logger = logger or NullLogger()
    report = VerificationReport()
    if not specs:
        return report

    jobs = tqdm(specs, desc="rings", disable=not config.output.progress)
    per_ring = Parallel(n_jobs=config.n_jobs)(
        delayed(run_ring)(spec, config, checks) for spec in jobs
    )

    for spec, results in zip(specs, per_ring):
        logger.log_ring(spec.to_dict(), event="ring_verified")
        for result in results:
            logger.log_check(result.to_record(include_timing=True))
        report.extend(results)

    summary = report.summary()
    logger.log_event(
        'verification_summary',
        f"{summary['passed']} passed, {summary['failed']} failed, {summary['skipped']} skipped",
        **summary
    )
    return report
