import pytest
import tempfile
import json
import logging
from pathlib import Path

from src.utils.logging import (
    LogLevel,
    ExperimentLogger,
    NullLogger,
    setup_logging
)


@pytest.fixture
def temp_log_dir():
    """Create temporary directory for logs"""
    with tempfile.TemporaryDirectory() as temp_dir:
        yield Path(temp_dir)


@pytest.fixture
def experiment_logger(temp_log_dir):
    """Create a logger writing to the temporary directory"""
    logger = ExperimentLogger(
        name="test_verification",
        log_dir=temp_log_dir,
        level=LogLevel.DEBUG,
        console_output=False,
        file_output=True
    )
    yield logger
    logger.cleanup()


def _json_lines(path: Path):
    return [json.loads(line) for line in path.read_text().splitlines() if line.strip()]


class TestLogLevel:
    def test_log_level_values(self):
        """Test log level enumeration"""
        assert LogLevel.DEBUG.value == logging.DEBUG
        assert LogLevel.INFO.value == logging.INFO
        assert LogLevel.WARNING.value == logging.WARNING
        assert LogLevel.ERROR.value == logging.ERROR
        assert LogLevel.CRITICAL.value == logging.CRITICAL

    def test_from_name(self):
        assert LogLevel.from_name("info") is LogLevel.INFO
        with pytest.raises(ValueError):
            LogLevel.from_name("loud")


class TestExperimentLogger:
    def test_logger_initialization(self, experiment_logger, temp_log_dir):
        """Test logger initialization"""
        assert experiment_logger.name == "test_verification"
        assert experiment_logger.log_dir == temp_log_dir
        assert experiment_logger.level == LogLevel.DEBUG
        assert len(list(temp_log_dir.glob("*.log"))) == 1

    def test_event_logging_is_json(self, experiment_logger, temp_log_dir):
        """Events land in the log file as JSON objects with their fields"""
        experiment_logger.log_event('command', "running info", command="info")
        experiment_logger.log_ring({'p': 2, 's': 2, 'm': 2, 'h': [1, 1]})
        experiment_logger.cleanup()

        records = _json_lines(list(temp_log_dir.glob("*.log"))[0])
        messages = [r['message'] for r in records]
        assert "running info" in messages
        assert "GR(4,16) h=[1, 1]" in messages
        command = next(r for r in records if r['message'] == "running info")
        assert command['event_type'] == 'command'
        assert command['details'] == {'command': 'info'}

    def test_check_records_go_to_metrics(self, experiment_logger, temp_log_dir):
        record = {'name': 'unitarity', 'ring': 'GR(4,16)', 'status': 'passed', 'max_deviation': 1e-15}
        experiment_logger.log_check(record)
        experiment_logger.log_metrics({'dim': 16})
        experiment_logger.cleanup()

        metrics = _json_lines(temp_log_dir / "test_verification_metrics.jsonl")
        assert len(metrics) == 2
        assert metrics[0]['metrics'] == {'check': record}
        assert metrics[1]['metrics'] == {'dim': 16}
        assert 'timestamp' in metrics[0]

    def test_failed_check_is_a_warning(self, experiment_logger, temp_log_dir):
        experiment_logger.log_check({'name': 'factorization', 'ring': 'GR(2,4)', 'status': 'failed'})
        experiment_logger.log_error('NotPrime', "p=4 is not prime")
        experiment_logger.log_warning('validation_failed', "teichmuller_root failed")
        experiment_logger.cleanup()

        records = _json_lines(list(temp_log_dir.glob("*.log"))[0])
        levels = {r['message']: r['levelname'] for r in records}
        assert levels["factorization on GR(2,4): failed (max deviation None)"] == "WARNING"
        assert levels["p=4 is not prime"] == "ERROR"
        assert levels["teichmuller_root failed"] == "WARNING"

    def test_cleanup_is_idempotent(self, experiment_logger):
        experiment_logger.cleanup()
        experiment_logger.cleanup()
        experiment_logger.log_metrics({'ignored': True})
        assert experiment_logger.logger.handlers == []


class TestSetupLogging:
    def test_console_only(self, capsys):
        """Without a log directory nothing is written to disk and the console is stderr"""
        logger = setup_logging("test_console", console_level=LogLevel.WARNING)
        try:
            assert logger.metrics_thread is None
            logger.log_event('noise', "quiet message")
            logger.log_warning('loud', "visible message")
        finally:
            logger.cleanup()
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "visible message" in captured.err
        assert "quiet message" not in captured.err

    def test_file_level(self, temp_log_dir):
        logger = setup_logging("test_file", log_dir=temp_log_dir,
                               console_level=LogLevel.ERROR, file_level=LogLevel.DEBUG,
                               console_output=False)
        logger.log_query(1, 256)
        logger.cleanup()
        records = _json_lines(list(temp_log_dir.glob("test_file_*.log"))[0])
        assert any(r.get('event_type') == 'oracle_query' for r in records)


class TestNullLogger:
    def test_null_logger(self):
        """Test null logger functionality"""
        logger = NullLogger()
        logger.log_event('check', "ignored")
        logger.log_metrics({'x': 1})
        logger.log_ring({'p': 2, 's': 1, 'm': 1})
        logger.log_check({})
        logger.log_query(1, 4)
        logger.cleanup()
        assert logger.log_dir is None
