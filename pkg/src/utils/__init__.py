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
# File:    src/utils/__init__.py
# Description:
#   Initializes the utilities package for configuration, logging and
#   output serialization used by the verification suite and the CLI.
#
# ---------------------------------------------------------------------------

"""
Initializes the utility subpackage, providing configuration file management,
structured logging, and JSON/CSV emission of matrices and reports.
"""


from .config import (
    SuiteConfig,
    ToleranceConfig,
    SamplingConfig,
    LimitConfig,
    OutputConfig,
    CliConfig,
    DEFAULT_RING_SPECS,
    load_config,
    save_config,
    validate_config,
    merge_configs,
    create_default_config,
    load_ring_spec,
    parse_coefficients
)

from .logging import (
    setup_logging,
    ExperimentLogger,
    NullLogger,
    LogLevel
)

from .serialization import (
    matrix_to_dict,
    matrix_to_csv,
    permutation_to_dict,
    records_to_csv,
    to_json,
    emit
)

# Version information
__version__ = '0.1.0'

# Define public interface
__all__ = [
    # Configuration management
    'SuiteConfig',
    'ToleranceConfig',
    'SamplingConfig',
    'LimitConfig',
    'OutputConfig',
    'CliConfig',
    'DEFAULT_RING_SPECS',
    'load_config',
    'save_config',
    'validate_config',
    'merge_configs',
    'create_default_config',
    'load_ring_spec',
    'parse_coefficients',

    # Logging utilities
    'setup_logging',
    'ExperimentLogger',
    'NullLogger',
    'LogLevel',

    # Serialization
    'matrix_to_dict',
    'matrix_to_csv',
    'permutation_to_dict',
    'records_to_csv',
    'to_json',
    'emit',
]

# Module level documentation
SuiteConfig.__doc__ = """
Configuration of a verification run: rings, tolerances, sampling, caps and output.
Handles loading, saving, and validating configuration files.
"""

ExperimentLogger.__doc__ = """
Structured logging system for verification events and check results.
Provides different logging levels and a JSONL metrics stream.
"""
