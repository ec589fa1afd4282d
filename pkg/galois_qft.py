#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# Copyright (c) 2024 Dimitrios Kafetzis
#
# This file is part of the Galois Ring QFT project.
# Licensed under the MIT License; you may not use this file except in compliance
# with the License. You may obtain a copy of the License at
#   https://opensource.org/licenses/MIT
#
# Author: Dimitrios Kafetzis (dimitrioskafetzis@gmail.com)
# File: galois_qft.py
# Description:
#   This file provides the command-line entry point: ring inspection,
#   defining-polynomial search and validation, trace tables, discriminant
#   matrices, QFT emission, the verification suite, the hidden-multiplier
#   recovery demo and the CRT decomposition of Z_n.
#
# ---------------------------------------------------------------------------

"""
Example usage:
    ./galois_qft.py info --ring 2,2,2,1,1
    ./galois_qft.py find-poly 2 3 2
    ./galois_qft.py qft --ring experiments/configs/rings/gr4_16.json --both
    ./galois_qft.py verify --config experiments/configs/default_suite.yaml --format csv
    ./galois_qft.py hidden-linear --ring 2,2,2,1,1 --random --seed 7
    ./galois_qft.py crt-decompose 360 --verify-qft

Exit codes: 0 success, 1 verification or validation failure, 2 invalid input.
"""

import argparse
import sys
from typing import List, Optional

import yaml

from src.core import (
    AmbiguousMeasurement,
    DEFAULT_DIMENSION_CAP,
    GaloisRingError,
    NotInvertible,
    SearchSpaceExhausted,
    TraceTableMismatch,
    build_discriminant,
    crt_decompose,
    find_basic_primitive,
    make_ring,
    trace_table,
    validate_basic_primitive,
)
from src.core.ring import RingSpec, ensure_dimension
from src.quantum import (
    draw_hidden,
    make_oracle,
    max_abs_diff,
    permutation_map_UD,
    qft_cyclic,
    qft_cyclic_crt,
    qft_direct,
    qft_factored,
    run_recovery,
)
from src.utils import (
    CliConfig,
    ExperimentLogger,
    LogLevel,
    NullLogger,
    SuiteConfig,
    emit,
    load_config,
    matrix_to_csv,
    matrix_to_dict,
    merge_configs,
    parse_coefficients,
    permutation_to_dict,
    records_to_csv,
    setup_logging,
    to_json,
    validate_config,
)
from src.verification import run_all

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INVALID = 2

# Raised by the library only when its own results disagree
INTERNAL_FAILURES = (AmbiguousMeasurement, NotInvertible, SearchSpaceExhausted, TraceTableMismatch)


def _output(cli: CliConfig, payload, csv_text: Optional[str] = None) -> None:
    if cli.format == "csv":
        emit(csv_text if csv_text is not None else records_to_csv([payload]), cli.out)
    else:
        emit(to_json(payload), cli.out)


# ----------------------------------------------------------------------
# Commands
# ----------------------------------------------------------------------
def cmd_info(args, cli: CliConfig, logger: ExperimentLogger) -> int:
    """Ring summary with exhaustively counted units and zero divisors"""
    cli.validate(requires_ring=True)
    ring = make_ring(cli.ring)
    logger.log_ring(ring.spec.to_dict())
    ensure_dimension(ring.order, cli.cap)

    counts = {'unit': 0, 'zero_divisor': 0}
    for a in ring.elements():
        cls = ring.classify(a).value
        if cls in counts:
            counts[cls] += 1

    payload = {
        'ring': ring.spec.to_dict(),
        'label': ring.spec.label,
        'cardinality': ring.order,
        'characteristic': ring.modulus,
        'units': counts['unit'],
        'zero_divisors': counts['zero_divisor'],
        'teichmuller_set': [list(t.coeffs) for t in ring.teichmuller_set],
        'trace_table': list(trace_table(ring).values),
    }
    _output(cli, payload)
    return EXIT_OK


def cmd_find_poly(args, cli: CliConfig, logger: ExperimentLogger) -> int:
    h = find_basic_primitive(args.p, args.s, args.m, cli.cap)
    report = validate_basic_primitive(RingSpec(args.p, args.s, args.m, h))
    logger.log_event('find_poly', f"h={list(h)} for p={args.p} s={args.s} m={args.m}")
    payload = report.to_dict()
    payload['h'] = list(h)
    _output(cli, payload, records_to_csv([c.to_dict() for c in report.checks]) if cli.format == "csv" else None)
    return EXIT_OK


def cmd_validate_poly(args, cli: CliConfig, logger: ExperimentLogger) -> int:
    cli.validate(requires_ring=True)
    spec = cli.ring
    if not spec.is_resolved:
        raise ValueError("validate-poly needs the h coefficients in --ring")
    report = validate_basic_primitive(spec)
    if not report.passed:
        logger.log_warning('validation_failed', f"{report.first_failure} failed for h={list(spec.h)}")
    payload = report.to_dict()
    _output(cli, payload, records_to_csv([c.to_dict() for c in report.checks]) if cli.format == "csv" else None)
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_trace_table(args, cli: CliConfig, logger: ExperimentLogger) -> int:
    cli.validate(requires_ring=True)
    ring = make_ring(cli.ring)
    table = trace_table(ring)
    payload = {'ring': ring.spec.to_dict(), **table.to_dict()}
    rows = [{'i': i, 'trace': v} for i, v in enumerate(table.values)]
    _output(cli, payload, records_to_csv(rows) if cli.format == "csv" else None)
    return EXIT_OK


def cmd_discriminant(args, cli: CliConfig, logger: ExperimentLogger) -> int:
    cli.validate(requires_ring=True)
    ring = make_ring(cli.ring)
    D = build_discriminant(ring)
    payload = {'ring': ring.spec.to_dict(), **D.to_dict()}
    rows = [
        {'matrix': name, 'row': i, 'values': list(row)}
        for name, matrix in (('entries', D.entries), ('inverse', D.inverse))
        for i, row in enumerate(matrix)
    ]
    _output(cli, payload, records_to_csv(rows) if cli.format == "csv" else None)
    return EXIT_OK


def cmd_qft(args, cli: CliConfig, logger: ExperimentLogger) -> int:
    cli.validate(requires_ring=True)
    ring = make_ring(cli.ring)
    cli.validate(requires_ring=True, matrix_dim=ring.order)

    mode = args.mode or "direct"
    matrices = {}
    if mode in ("direct", "both"):
        matrices['direct'] = qft_direct(ring, cli.cap)
    if mode in ("factored", "both"):
        matrices['factored'] = qft_factored(ring, cap=cli.cap)

    payload = {'ring': ring.spec.to_dict()}
    payload.update({name: matrix_to_dict(M) for name, M in matrices.items()})
    if args.permutation:
        payload['U_D'] = permutation_to_dict(permutation_map_UD(ring))
    if mode == "both":
        deviation = max_abs_diff(matrices['direct'], matrices['factored'])
        payload['max_abs_diff'] = deviation
        logger.log_event('qft_deviation', f"max_abs_diff={deviation:.3e}", deviation=deviation)
        if cli.format == "csv":
            print(f"max_abs_diff={deviation!r}", file=sys.stderr)

    csv_text = None
    if cli.format == "csv":
        csv_text = "\n".join(matrix_to_csv(M) for M in matrices.values())
    _output(cli, payload, csv_text)
    return EXIT_OK


def _suite_config(args, cli: CliConfig) -> SuiteConfig:
    """The --config file (or the defaults) with explicitly given flags layered on top"""
    config = load_config(args.config) if args.config else SuiteConfig()
    if not validate_config(config):
        raise ValueError(f"invalid suite configuration: {args.config}")

    output = {}
    if args.format is not None:
        output['format'] = args.format
    if args.out is not None:
        output['path'] = args.out
    if args.log_dir is not None:
        output['log_dir'] = args.log_dir
    if args.log_level is not None:
        output['log_level'] = args.log_level
    if args.timing:
        output['include_timing'] = True
    if args.progress:
        output['progress'] = True
    overrides = {'output': output}
    if cli.rings:
        overrides['rings'] = [spec.to_dict() for spec in cli.rings]
    if args.jobs is not None:
        overrides['n_jobs'] = args.jobs
    if args.cap is not None:
        overrides['limits'] = {'dimension_cap': cli.cap}
    if args.seed is not None:
        overrides['sampling'] = {'seed': cli.seed}

    config = merge_configs(config, overrides)
    if not validate_config(config):
        raise ValueError("invalid suite configuration after command-line overrides")
    return config


def cmd_verify(args, cli: CliConfig, logger: ExperimentLogger) -> int:
    config = cli.suite or _suite_config(args, cli)
    report = run_all(config.rings, config, logger)
    timing = config.output.include_timing
    text = report.to_csv(timing) if config.output.format == "csv" else report.to_json(timing)
    emit(text, config.output.path)

    summary = report.summary()
    print(
        f"{summary['passed']} passed, {summary['failed']} failed, {summary['skipped']} skipped",
        file=sys.stderr
    )
    return EXIT_OK if report.overall_pass else EXIT_FAILURE


def cmd_hidden_linear(args, cli: CliConfig, logger: ExperimentLogger) -> int:
    cli.validate(requires_ring=True)
    ring = make_ring(cli.ring)
    if args.random:
        hidden = draw_hidden(ring, cli.seed)
    else:
        coeffs = parse_coefficients(args.r)
        if len(coeffs) != ring.m:
            raise ValueError(f"--r needs {ring.m} coefficients, got {len(coeffs)}")
        hidden = ring.element(coeffs)

    oracle = make_oracle(ring, hidden, cli.cap, logger=logger)
    result = run_recovery(ring, oracle, cap=cli.cap)
    payload = {
        'ring': ring.spec.to_dict(),
        'r_hidden': list(hidden.coeffs),
        'r_recovered': list(result.recovered.coeffs),
        'queries': result.queries,
        'amplitude': result.amplitude,
    }
    if args.random:
        payload['seed'] = cli.seed
    _output(cli, payload)
    return EXIT_OK if result.recovered == hidden else EXIT_FAILURE


def cmd_crt_decompose(args, cli: CliConfig, logger: ExperimentLogger) -> int:
    decomposition = crt_decompose(args.n)
    payload = decomposition.to_dict()
    if args.verify_qft:
        payload['qft_deviation'] = max_abs_diff(qft_cyclic(args.n, cli.cap), qft_cyclic_crt(args.n, cli.cap))
    if cli.format == "csv":
        rows = [dict(f, statement=payload['statement']) for f in payload['factors']]
        _output(cli, payload, records_to_csv(rows))
    else:
        _output(cli, payload)
    return EXIT_OK


COMMANDS = {
    'info': cmd_info,
    'find-poly': cmd_find_poly,
    'validate-poly': cmd_validate_poly,
    'trace-table': cmd_trace_table,
    'discriminant': cmd_discriminant,
    'qft': cmd_qft,
    'verify': cmd_verify,
    'hidden-linear': cmd_hidden_linear,
    'crt-decompose': cmd_crt_decompose,
}


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['json', 'csv'], default=None,
                        help='Output format (default: json, or output.format of --config)')
    common.add_argument('--out', default=None, help='Write output to this file instead of stdout')
    common.add_argument('--cap', type=int, default=None,
                        help=f'Dimension cap for dense matrices (default: {DEFAULT_DIMENSION_CAP})')
    common.add_argument('--seed', type=int, default=None, help='Seed for sampled checks and --random')
    common.add_argument('--log-dir', default=None, help='Directory for JSON log and metrics files')
    common.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                        help='Console log level (default: WARNING, or output.log_level of --config)')

    single_ring = argparse.ArgumentParser(add_help=False)
    single_ring.add_argument('--ring', required=True,
                             help='Ring spec: JSON/YAML file, inline JSON, or p,s,m[,h0,...]')

    parser = argparse.ArgumentParser(
        prog='galois-qft',
        description='Galois ring arithmetic, QFT construction and verification'
    )
    sub = parser.add_subparsers(dest='command', required=True)

    sub.add_parser('info', parents=[common, single_ring], help='Summarise a ring')

    find = sub.add_parser('find-poly', parents=[common], help='Find a basic primitive polynomial')
    find.add_argument('p', type=int)
    find.add_argument('s', type=int)
    find.add_argument('m', type=int)

    sub.add_parser('validate-poly', parents=[common, single_ring], help='Validate a defining polynomial')
    sub.add_parser('trace-table', parents=[common, single_ring], help='Tr(xi^0) .. Tr(xi^{2m-2})')
    sub.add_parser('discriminant', parents=[common, single_ring], help='Discriminant matrix and inverse')

    qft = sub.add_parser('qft', parents=[common, single_ring], help='Emit QFT matrices')
    mode = qft.add_mutually_exclusive_group()
    mode.add_argument('--direct', dest='mode', action='store_const', const='direct')
    mode.add_argument('--factored', dest='mode', action='store_const', const='factored')
    mode.add_argument('--both', dest='mode', action='store_const', const='both')
    qft.add_argument('--permutation', action='store_true', help='Also emit U_D as an index map')

    verify = sub.add_parser('verify', parents=[common], help='Run the verification suite')
    verify.add_argument('--ring', action='append', default=None,
                        help='Ring to verify (repeatable); defaults to the configured rings')
    verify.add_argument('--config', default=None, help='Suite configuration (.yaml or .json)')
    verify.add_argument('--jobs', type=int, default=None, help='Worker processes')
    verify.add_argument('--timing', action='store_true', help='Include elapsed milliseconds')
    verify.add_argument('--progress', action='store_true', help='Show a progress bar on stderr')

    hidden = sub.add_parser('hidden-linear', parents=[common, single_ring],
                            help='Recover a hidden multiplier with one oracle query')
    source = hidden.add_mutually_exclusive_group(required=True)
    source.add_argument('--r', default=None, help='Hidden multiplier coefficients, e.g. 0,1')
    source.add_argument('--random', action='store_true', help='Draw the multiplier with --seed')

    crt = sub.add_parser('crt-decompose', parents=[common], help='Prime-power decomposition of Z_n')
    crt.add_argument('n', type=int)
    crt.add_argument('--verify-qft', action='store_true',
                     help='Compare the QFT over Z_n with its CRT assembly')

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK

    logger = NullLogger()
    try:
        cli = CliConfig.from_namespace(args)
        if args.command == 'verify':
            cli = cli.with_suite(_suite_config(args, cli))
        logger = setup_logging(
            'galois_qft',
            log_dir=cli.log_dir,
            console_level=LogLevel.from_name(cli.log_level)
        )
        cli.validate()
        logger.log_event('command', f"running {args.command}", level=LogLevel.DEBUG, command=args.command)
        return COMMANDS[args.command](args, cli, logger)

    except INTERNAL_FAILURES as e:
        logger.log_error(type(e).__name__, str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE

    except (GaloisRingError, ValueError, FileNotFoundError, yaml.YAMLError) as e:
        logger.log_error(type(e).__name__, str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID

    finally:
        logger.cleanup()


if __name__ == "__main__":
    sys.exit(main())
