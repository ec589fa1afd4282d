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
# File:    src/utils/config.py
# Description:
#   Provides functionality for loading, validating, and saving
#   verification-suite configurations in YAML or JSON format, plus the
#   ring-spec sources accepted on the command line.
#
# ---------------------------------------------------------------------------

"""
Implements configuration management for verification runs. This includes
functions for loading YAML/JSON files into SuiteConfig objects, validating
parameter ranges, merging overrides and saving configurations back to disk.
Ring specs can come from a .json/.yaml file, an inline JSON object, or the
inline form "p,s,m,h0,...,h_{m-1}".
"""

from dataclasses import dataclass, field, replace
import json
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

import yaml

from ..core.ring import DEFAULT_DIMENSION_CAP, RingSpec

OUTPUT_FORMATS = ("json", "csv")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

DEFAULT_RING_SPECS = (
    RingSpec(2, 2, 2, (1, 1)),
    RingSpec(2, 1, 2, (1, 1)),
    RingSpec(3, 2, 1, (1,)),
    RingSpec(2, 3, 2, (1, 1)),
    RingSpec(3, 1, 2, (2, 1)),
)


@dataclass
class ToleranceConfig:
    """Numerical tolerances of the checks"""
    matrix: float = 1e-12
    two_register: float = 1e-10
    character_sum: float = 1e-9  # relative to p^{sm}
    reduction: float = 1e-14
    measurement: float = 1e-9
    norm: float = 1e-12


@dataclass
class SamplingConfig:
    """Seeds and sample sizes for the randomised checks"""
    seed: int = 0
    random_pairs: int = 10_000
    axiom_samples: int = 1000
    exhaustive_pair_limit: int = 64
    orthonormal_exhaustive_limit: int = 81
    hidden_linear_exhaustive_limit: int = 64
    hidden_linear_samples: int = 16
    shift_exhaustive_limit: int = 256
    shift_samples: int = 64


@dataclass
class LimitConfig:
    """Dimension caps for dense matrices"""
    dimension_cap: int = DEFAULT_DIMENSION_CAP
    gate_dimension_cap: int = 256


@dataclass
class OutputConfig:
    """Report emission settings"""
    format: str = "json"
    path: Optional[str] = None
    log_dir: Optional[str] = None
    log_level: str = "WARNING"
    include_timing: bool = False
    progress: bool = False


@dataclass
class SuiteConfig:
    """Complete verification-suite configuration"""
    rings: List[RingSpec] = field(default_factory=lambda: list(DEFAULT_RING_SPECS))
    tolerances: ToleranceConfig = field(default_factory=ToleranceConfig)
    sampling: SamplingConfig = field(default_factory=SamplingConfig)
    limits: LimitConfig = field(default_factory=LimitConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    n_jobs: int = 1

    @classmethod
    def from_dict(cls, config_dict: Dict) -> 'SuiteConfig':
        """
        Create a SuiteConfig from a dictionary. Missing sections fall back to
        their defaults; numbers are converted explicitly so YAML strings such
        as "1e-12" load as floats.
        """
        config_dict = config_dict or {}

        rings_raw = config_dict.get('rings')
        rings = (
            [RingSpec.from_dict(r) for r in rings_raw]
            if rings_raw is not None else list(DEFAULT_RING_SPECS)
        )

        t = config_dict.get('tolerances', {}) or {}
        defaults_t = ToleranceConfig()
        tolerances = ToleranceConfig(
            matrix=float(t.get('matrix', defaults_t.matrix)),
            two_register=float(t.get('two_register', defaults_t.two_register)),
            character_sum=float(t.get('character_sum', defaults_t.character_sum)),
            reduction=float(t.get('reduction', defaults_t.reduction)),
            measurement=float(t.get('measurement', defaults_t.measurement)),
            norm=float(t.get('norm', defaults_t.norm))
        )

        s = config_dict.get('sampling', {}) or {}
        defaults_s = SamplingConfig()
        sampling = SamplingConfig(
            seed=int(s.get('seed', defaults_s.seed)),
            random_pairs=int(s.get('random_pairs', defaults_s.random_pairs)),
            axiom_samples=int(s.get('axiom_samples', defaults_s.axiom_samples)),
            exhaustive_pair_limit=int(s.get('exhaustive_pair_limit', defaults_s.exhaustive_pair_limit)),
            orthonormal_exhaustive_limit=int(
                s.get('orthonormal_exhaustive_limit', defaults_s.orthonormal_exhaustive_limit)
            ),
            hidden_linear_exhaustive_limit=int(
                s.get('hidden_linear_exhaustive_limit', defaults_s.hidden_linear_exhaustive_limit)
            ),
            hidden_linear_samples=int(s.get('hidden_linear_samples', defaults_s.hidden_linear_samples)),
            shift_exhaustive_limit=int(s.get('shift_exhaustive_limit', defaults_s.shift_exhaustive_limit)),
            shift_samples=int(s.get('shift_samples', defaults_s.shift_samples))
        )

        lim = config_dict.get('limits', {}) or {}
        limits = LimitConfig(
            dimension_cap=int(lim.get('dimension_cap', DEFAULT_DIMENSION_CAP)),
            gate_dimension_cap=int(lim.get('gate_dimension_cap', 256))
        )

        out = config_dict.get('output', {}) or {}
        output = OutputConfig(
            format=str(out.get('format', 'json')),
            path=out.get('path'),
            log_dir=out.get('log_dir'),
            log_level=str(out.get('log_level', 'WARNING')).upper(),
            include_timing=bool(out.get('include_timing', False)),
            progress=bool(out.get('progress', False))
        )

        return cls(
            rings=rings,
            tolerances=tolerances,
            sampling=sampling,
            limits=limits,
            output=output,
            n_jobs=int(config_dict.get('n_jobs', 1))
        )

    @classmethod
    def from_yaml(cls, config_path: Union[str, Path]) -> 'SuiteConfig':
        """Load a YAML or JSON file into a SuiteConfig"""
        return load_config(config_path)

    def to_dict(self) -> Dict:
        """Convert configuration to dictionary"""
        return {
            'rings': [spec.to_dict() for spec in self.rings],
            'tolerances': {
                'matrix': self.tolerances.matrix,
                'two_register': self.tolerances.two_register,
                'character_sum': self.tolerances.character_sum,
                'reduction': self.tolerances.reduction,
                'measurement': self.tolerances.measurement,
                'norm': self.tolerances.norm
            },
            'sampling': {
                'seed': self.sampling.seed,
                'random_pairs': self.sampling.random_pairs,
                'axiom_samples': self.sampling.axiom_samples,
                'exhaustive_pair_limit': self.sampling.exhaustive_pair_limit,
                'orthonormal_exhaustive_limit': self.sampling.orthonormal_exhaustive_limit,
                'hidden_linear_exhaustive_limit': self.sampling.hidden_linear_exhaustive_limit,
                'hidden_linear_samples': self.sampling.hidden_linear_samples,
                'shift_exhaustive_limit': self.sampling.shift_exhaustive_limit,
                'shift_samples': self.sampling.shift_samples
            },
            'limits': {
                'dimension_cap': self.limits.dimension_cap,
                'gate_dimension_cap': self.limits.gate_dimension_cap
            },
            'output': {
                'format': self.output.format,
                'path': self.output.path,
                'log_dir': self.output.log_dir,
                'log_level': self.output.log_level,
                'include_timing': self.output.include_timing,
                'progress': self.output.progress
            },
            'n_jobs': self.n_jobs
        }


def create_default_config() -> SuiteConfig:
    """Create default configuration."""
    return SuiteConfig()


def load_config(config_path: Union[str, Path]) -> SuiteConfig:
    """
    Load configuration from a YAML or JSON file, returning a SuiteConfig.
    """
    config_path = Path(config_path)
    if not config_path.exists():
        raise FileNotFoundError(f"Configuration file not found: {config_path}")

    with open(config_path, 'r') as f:
        if config_path.suffix in ('.yaml', '.yml'):
            config_dict = yaml.safe_load(f)
        elif config_path.suffix == '.json':
            config_dict = json.load(f)
        else:
            raise ValueError("Configuration file must be .yaml or .json")

    return SuiteConfig.from_dict(config_dict)


def save_config(config: SuiteConfig, config_path: Union[str, Path]) -> None:
    """
    Save configuration to a file (YAML or JSON).
    """
    config_path = Path(config_path)
    config_dict = config.to_dict()

    config_path.parent.mkdir(parents=True, exist_ok=True)

    with open(config_path, 'w') as f:
        if config_path.suffix in ('.yaml', '.yml'):
            yaml.safe_dump(config_dict, f, default_flow_style=False)
        elif config_path.suffix == '.json':
            json.dump(config_dict, f, indent=2)
        else:
            raise ValueError("Configuration file must be .yaml or .json")


def validate_config(config: SuiteConfig) -> bool:
    """Validate configuration parameters"""
    try:
        # Tolerances
        tolerances = config.tolerances
        if any(x <= 0 or x >= 1 for x in [
            tolerances.matrix, tolerances.two_register, tolerances.character_sum,
            tolerances.reduction, tolerances.measurement, tolerances.norm
        ]):
            return False

        # Sampling
        sampling = config.sampling
        if sampling.seed < 0:
            return False
        if any(x <= 0 for x in [
            sampling.random_pairs, sampling.axiom_samples, sampling.exhaustive_pair_limit,
            sampling.orthonormal_exhaustive_limit, sampling.hidden_linear_exhaustive_limit,
            sampling.hidden_linear_samples, sampling.shift_exhaustive_limit, sampling.shift_samples
        ]):
            return False

        # Limits
        if config.limits.dimension_cap < 2 or config.limits.gate_dimension_cap < 4:
            return False

        # Output
        if config.output.format not in OUTPUT_FORMATS:
            return False
        if config.output.log_level not in LOG_LEVELS:
            return False

        if config.n_jobs == 0 or config.n_jobs < -1:
            return False
        if not all(isinstance(spec, RingSpec) for spec in config.rings):
            return False

        return True

    except Exception:
        return False


def merge_configs(base_config: SuiteConfig, override_config: Dict) -> SuiteConfig:
    """
    Merge base configuration with overrides from a dictionary.
    """
    base_dict = base_config.to_dict()

    def update_dict(d1: Dict, d2: Dict) -> Dict:
        for k, v in d2.items():
            if k in d1 and isinstance(d1[k], dict) and isinstance(v, dict):
                d1[k] = update_dict(d1[k], v)
            else:
                d1[k] = v
        return d1

    merged_dict = update_dict(base_dict, override_config)
    return SuiteConfig.from_dict(merged_dict)


# ----------------------------------------------------------------------
# Ring sources
# ----------------------------------------------------------------------
def load_ring_spec(source: Union[str, Path, Dict]) -> RingSpec:
    """
    Parse a ring spec from a file path, an inline JSON object, a dict, or
    "p,s,m[,h0,...]" (no h means: search for one).
    """
    if isinstance(source, dict):
        return RingSpec.from_dict(source)

    text = str(source).strip()
    path = Path(text)
    if path.suffix in ('.json', '.yaml', '.yml'):
        if not path.exists():
            raise FileNotFoundError(f"Ring spec file not found: {path}")
        with open(path, 'r') as f:
            data = yaml.safe_load(f) if path.suffix != '.json' else json.load(f)
        return RingSpec.from_dict(data)

    if text.startswith('{'):
        return RingSpec.from_dict(json.loads(text))

    parts = [part.strip() for part in text.split(',') if part.strip()]
    try:
        values = [int(part) for part in parts]
    except ValueError:
        raise ValueError(f"ring spec {text!r} is not of the form p,s,m[,h0,...]") from None
    if len(values) < 3:
        raise ValueError(f"ring spec {text!r} needs at least p, s and m")
    p, s, m, *h = values
    return RingSpec(p, s, m, tuple(h))


def parse_coefficients(text: str) -> List[int]:
    """"0,1" -> [0, 1]"""
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise ValueError(f"coefficients {text!r} must be comma-separated integers") from None


def _int_or(value, default: int) -> int:
    return default if value is None else int(value)


@dataclass
class CliConfig:
    """Settings of one CLI invocation"""
    subcommand: str
    rings: List[RingSpec] = field(default_factory=list)
    format: str = "json"
    out: Optional[str] = None
    cap: int = DEFAULT_DIMENSION_CAP
    seed: int = 0
    log_dir: Optional[str] = None
    log_level: str = "WARNING"
    suite: Optional[SuiteConfig] = None

    @property
    def ring(self) -> RingSpec:
        return self.rings[0]

    @classmethod
    def from_namespace(cls, args) -> 'CliConfig':
        sources: Sequence[str] = getattr(args, 'ring', None) or []
        if isinstance(sources, str):
            sources = [sources]
        return cls(
            subcommand=args.command,
            rings=[load_ring_spec(source) for source in sources],
            format=getattr(args, 'format', None) or 'json',
            out=getattr(args, 'out', None),
            cap=_int_or(getattr(args, 'cap', None), DEFAULT_DIMENSION_CAP),
            seed=_int_or(getattr(args, 'seed', None), 0),
            log_dir=getattr(args, 'log_dir', None),
            log_level=str(getattr(args, 'log_level', None) or 'WARNING').upper()
        )

    def with_suite(self, suite: SuiteConfig) -> 'CliConfig':
        """Take format, destination and logging from a resolved suite configuration"""
        output = suite.output
        return replace(self, format=output.format, out=output.path, log_dir=output.log_dir,
                       log_level=output.log_level, suite=suite)

    def validate(self, requires_ring: bool = False, matrix_dim: Optional[int] = None) -> None:
        """
        Raise ValueError when the invocation is inconsistent: a single-ring
        command needs exactly one ring, a matrix command needs cap >= dim.
        """
        if self.format not in OUTPUT_FORMATS:
            raise ValueError(f"format must be one of {OUTPUT_FORMATS}")
        if self.cap < 1:
            raise ValueError("cap must be positive")
        if requires_ring and len(self.rings) != 1:
            raise ValueError(f"{self.subcommand} needs exactly one --ring, got {len(self.rings)}")
        if matrix_dim is not None and matrix_dim > self.cap:
            raise ValueError(f"dimension {matrix_dim} exceeds --cap {self.cap}")
