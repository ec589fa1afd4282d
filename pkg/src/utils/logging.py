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
# File:    src/utils/logging.py
# Description:
#   Defines logging utilities for verification runs and CLI commands,
#   including console/file logging, structured check-result logging, and
#   customizable log levels.
#
# ---------------------------------------------------------------------------

"""
Offers structured logging facilities to capture ring construction, check
outcomes, oracle queries and errors. ExperimentLogger writes human-readable
lines to stderr (stdout is reserved for command output), JSON records to an
optional log file, and check results to a JSONL metrics file from a
background thread. NullLogger disables everything.
"""

import atexit
from datetime import datetime
from enum import Enum
import json
import logging
from pathlib import Path
from queue import Queue
import sys
import threading
import time
from typing import Dict, Optional, Union

from pythonjsonlogger import jsonlogger


class LogLevel(Enum):
    """Log levels for run events"""
    DEBUG = logging.DEBUG
    INFO = logging.INFO
    WARNING = logging.WARNING
    ERROR = logging.ERROR
    CRITICAL = logging.CRITICAL

    @classmethod
    def from_name(cls, name: str) -> 'LogLevel':
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown log level {name!r}") from None


class ExperimentLogger:
    """Thread-safe logger for verification events and check metrics"""

    def __init__(
        self,
        name: str,
        log_dir: Optional[Union[str, Path]] = None,
        level: LogLevel = LogLevel.INFO,
        console_output: bool = True,
        file_output: bool = True
    ):
        self.name = name
        self.log_dir = Path(log_dir) if log_dir is not None else None
        self.level = level
        self._closed = False

        self.logger = logging.getLogger(name)
        self.logger.setLevel(level.value)
        self.logger.propagate = False

        # Clear any existing handlers
        for handler in list(self.logger.handlers):
            handler.close()
        self.logger.handlers.clear()

        if console_output:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(self._create_formatter())
            self.logger.addHandler(console_handler)

        self.metrics_file: Optional[Path] = None
        self.metrics_thread: Optional[threading.Thread] = None
        self.metrics_queue: Queue = Queue()

        if self.log_dir is not None:
            self.log_dir.mkdir(parents=True, exist_ok=True)

            if file_output:
                log_file = self.log_dir / f"{name}_{int(time.time())}.log"
                file_handler = logging.FileHandler(log_file)
                file_handler.setFormatter(self._create_json_formatter())
                self.logger.addHandler(file_handler)

            # Metrics logging setup
            self.metrics_file = self.log_dir / f"{name}_metrics.jsonl"
            self.metrics_thread = threading.Thread(target=self._metrics_writer, daemon=True)
            self.metrics_thread.start()

        atexit.register(self.cleanup)
        self.logger.debug(f"Logger initialized: {name}")

    def _create_formatter(self) -> logging.Formatter:
        return logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    def _create_json_formatter(self) -> logging.Formatter:
        return jsonlogger.JsonFormatter('%(asctime)s %(name)s %(levelname)s %(message)s')

    def _metrics_writer(self) -> None:
        """Background thread for writing metrics to file"""
        with open(self.metrics_file, 'a') as f:
            while True:
                try:
                    metrics = self.metrics_queue.get()
                    if metrics is None:  # Shutdown signal
                        break
                    json.dump(metrics, f, default=str)
                    f.write('\n')
                    f.flush()
                except Exception as e:
                    self.logger.error(f"Error writing metrics: {e}")

    def cleanup(self) -> None:
        """Stop the metrics writer and close handlers; safe to call twice"""
        if self._closed:
            return
        self._closed = True
        if self.metrics_thread is not None:
            self.metrics_queue.put(None)
            self.metrics_thread.join()
        for handler in list(self.logger.handlers):
            handler.flush()
            handler.close()
        self.logger.handlers.clear()

    def log_event(
        self,
        event_type: str,
        message: str,
        level: LogLevel = LogLevel.INFO,
        **kwargs
    ) -> None:
        """Log a run event; keyword arguments travel as structured fields"""
        self.logger.log(
            level.value,
            message,
            extra={'event_type': event_type, 'details': kwargs}
        )

    def log_metrics(self, metrics: Dict) -> None:
        """Queue a metrics record for the JSONL file"""
        if self.metrics_thread is None or self._closed:
            return
        self.metrics_queue.put({
            'timestamp': datetime.now().isoformat(),
            'metrics': metrics
        })

    def log_ring(self, ring_spec: Dict, event: str = "ring_built") -> None:
        """Log the parameters of a ring being worked on"""
        self.log_event(
            event,
            f"GR({ring_spec['p'] ** ring_spec['s']},"
            f"{ring_spec['p'] ** (ring_spec['s'] * ring_spec['m'])}) h={ring_spec.get('h')}",
            level=LogLevel.DEBUG,
            ring=ring_spec
        )

    def log_check(self, record: Dict) -> None:
        """Log one check result and queue it as a metrics record"""
        status = record.get('status')
        level = LogLevel.WARNING if status == 'failed' else LogLevel.INFO
        self.log_event(
            'check',
            f"{record.get('name')} on {record.get('ring')}: {status} "
            f"(max deviation {record.get('max_deviation')})",
            level=level,
            check=record
        )
        self.log_metrics({'check': record})

    def log_query(self, queries: int, dim: int) -> None:
        """Log an oracle query"""
        self.log_event(
            'oracle_query',
            f"oracle query #{queries} on {dim} amplitudes",
            level=LogLevel.DEBUG,
            queries=queries,
            dim=dim
        )

    def log_error(
        self,
        error_type: str,
        message: str,
        **kwargs
    ) -> None:
        """Log error events"""
        self.log_event(
            'error',
            message,
            level=LogLevel.ERROR,
            error_type=error_type,
            **kwargs
        )

    def log_warning(
        self,
        warning_type: str,
        message: str,
        **kwargs
    ) -> None:
        """Log warning events"""
        self.log_event(
            'warning',
            message,
            level=LogLevel.WARNING,
            warning_type=warning_type,
            **kwargs
        )


def setup_logging(
    experiment_name: str,
    log_dir: Optional[Union[str, Path]] = None,
    console_level: LogLevel = LogLevel.WARNING,
    file_level: LogLevel = LogLevel.DEBUG,
    console_output: bool = True
) -> ExperimentLogger:
    """Set up logging for a run"""
    numeric_level = min(console_level.value, file_level.value) if log_dir else console_level.value
    logger = ExperimentLogger(
        name=experiment_name,
        log_dir=log_dir,
        level=LogLevel(numeric_level),
        console_output=console_output,
        file_output=log_dir is not None
    )
    for handler in logger.logger.handlers:
        if not isinstance(handler, logging.FileHandler):
            handler.setLevel(console_level.value)
        else:
            handler.setLevel(file_level.value)
    return logger


class NullLogger(ExperimentLogger):
    """Null logger for testing or when logging is disabled"""

    def __init__(self):
        self.name = "null"
        self.log_dir = None
        self.metrics_file = None
        self.metrics_thread = None

    def log_event(self, *args, **kwargs) -> None:
        pass

    def log_metrics(self, *args, **kwargs) -> None:
        pass

    def log_ring(self, *args, **kwargs) -> None:
        pass

    def log_check(self, *args, **kwargs) -> None:
        pass

    def log_query(self, *args, **kwargs) -> None:
        pass

    def cleanup(self) -> None:
        pass
