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
# File:    src/verification/report.py
# Description:
#   Per-check results and the aggregated verification report, with JSON,
#   pandas and CSV views.
#
# ---------------------------------------------------------------------------

"""
A report passes when no entry FAILED. SKIPPED entries (a dimension cap
blocked the check) are counted separately and never reported as passed.
Emission is sorted by (check name, ring) and leaves out elapsed time unless
asked, so identical runs produce identical bytes.
"""

from dataclasses import dataclass, field
from enum import Enum
import json
import math
from typing import Any, Dict, List, Optional

import pandas as pd

from ..core.ring import RingSpec

RECORD_COLUMNS = [
    'name', 'ring', 'p', 's', 'm', 'h', 'status', 'max_deviation', 'seed', 'message', 'details'
]


class CheckStatus(Enum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


@dataclass
class CheckResult:
    """Outcome of one check on one ring"""
    name: str
    ring: RingSpec
    status: CheckStatus
    max_deviation: float = 0.0
    elapsed_ms: float = 0.0
    seed: Optional[int] = None
    details: Dict[str, Any] = field(default_factory=dict)
    message: Optional[str] = None

    def __post_init__(self):
        self.max_deviation = float(self.max_deviation)
        if math.isnan(self.max_deviation) or self.max_deviation < 0:
            raise ValueError(f"max_deviation must be a non-negative number, got {self.max_deviation}")

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASSED

    @property
    def sort_key(self):
        return (self.name, self.ring.p, self.ring.s, self.ring.m, self.ring.h)

    def to_record(self, include_timing: bool = False) -> Dict:
        record = {
            'name': self.name,
            'ring': self.ring.label,
            'p': self.ring.p,
            's': self.ring.s,
            'm': self.ring.m,
            'h': list(self.ring.h),
            'status': self.status.value,
            'max_deviation': self.max_deviation,
            'seed': self.seed,
            'message': self.message,
            'details': self.details
        }
        if include_timing:
            record['elapsed_ms'] = self.elapsed_ms
        return record


@dataclass
class VerificationReport:
    """All check results of a run"""
    results: List[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> None:
        self.results.append(result)

    def extend(self, results: List[CheckResult]) -> None:
        self.results.extend(results)

    def sorted_results(self) -> List[CheckResult]:
        return sorted(self.results, key=lambda r: r.sort_key)

    @property
    def overall_pass(self) -> bool:
        return not any(r.status is CheckStatus.FAILED for r in self.results)

    def count(self, status: CheckStatus) -> int:
        return sum(1 for r in self.results if r.status is status)

    def failures(self) -> List[CheckResult]:
        return [r for r in self.sorted_results() if r.status is CheckStatus.FAILED]

    def summary(self) -> Dict:
        return {
            'overall_pass': self.overall_pass,
            'total': len(self.results),
            'passed': self.count(CheckStatus.PASSED),
            'failed': self.count(CheckStatus.FAILED),
            'skipped': self.count(CheckStatus.SKIPPED),
            'skipped_checks': [
                f"{r.name} on {r.ring.label}" for r in self.sorted_results()
                if r.status is CheckStatus.SKIPPED
            ]
        }

    def to_records(self, include_timing: bool = False) -> List[Dict]:
        return [r.to_record(include_timing) for r in self.sorted_results()]

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_records(include_timing), indent=2)

    def to_dataframe(self, include_timing: bool = False) -> pd.DataFrame:
        columns = RECORD_COLUMNS + (['elapsed_ms'] if include_timing else [])
        return pd.DataFrame(self.to_records(include_timing), columns=columns)

    def to_csv(self, include_timing: bool = False) -> str:
        frame = self.to_dataframe(include_timing)
        frame['h'] = frame['h'].map(json.dumps)
        frame['details'] = frame['details'].map(lambda d: json.dumps(d, sort_keys=True))
        return frame.to_csv(index=False, lineterminator='\n')
