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
# File:    src/utils/serialization.py
# Description:
#   JSON and CSV emission of matrices, permutations and tabular records.
#
# ---------------------------------------------------------------------------

"""
JSON is the machine format: matrices as {"dim", "entries": [[re, im], ...]}
row-major, permutations as {"dim", "map"}. CSV is for spreadsheet
inspection: one row per matrix row with "re+imj" cells, or one row per
record.
"""

import io
import json
from pathlib import Path
import sys
from typing import Dict, List, Optional, Sequence, Union

import numpy as np
import pandas as pd

from ..quantum.matrices import PermutationMap


def matrix_to_dict(M: np.ndarray) -> Dict:
    M = np.asarray(M, dtype=np.complex128)
    flat = M.reshape(-1)
    return {
        'dim': int(M.shape[0]),
        'entries': [[float(z.real), float(z.imag)] for z in flat]
    }


def permutation_to_dict(permutation: PermutationMap) -> Dict:
    return permutation.to_dict()


def _complex_cell(z: complex) -> str:
    return f"{z.real:.17g}{z.imag:+.17g}j"


def matrix_to_csv(M: np.ndarray) -> str:
    M = np.asarray(M, dtype=np.complex128)
    frame = pd.DataFrame([[_complex_cell(z) for z in row] for row in M])
    return frame.to_csv(index=False, header=False, lineterminator='\n')


def records_to_csv(records: Sequence[Dict], columns: Optional[List[str]] = None) -> str:
    """One CSV row per record; nested values are JSON-encoded"""
    frame = pd.DataFrame(list(records), columns=columns)
    for column in frame.columns:
        frame[column] = frame[column].map(
            lambda v: json.dumps(v) if isinstance(v, (dict, list, tuple)) else v
        )
    return frame.to_csv(index=False, lineterminator='\n')


def to_json(payload) -> str:
    return json.dumps(payload, indent=2, default=_json_default)


def _json_default(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"cannot serialise {type(value).__name__}")


def emit(text: str, path: Optional[Union[str, Path]] = None, stream: Optional[io.TextIOBase] = None) -> None:
    """Write text to a file or to the given stream (stdout by default)"""
    if not text.endswith('\n'):
        text += '\n'
    if path is not None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        return
    if stream is None:
        stream = sys.stdout
    stream.write(text)
