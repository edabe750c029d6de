import logging

import pytest
from pydantic import ValidationError

from girthroot.core.config import Settings
from girthroot.core.errors import (
    EXIT_USAGE,
    GraphFormatError,
    OracleLimitError,
    TailHypothesisError,
)
from girthroot.core.logging import configure_logging

def test_defaults() -> None:
    s = Settings(_env_file=None)
    assert s.PROJECT_NAME == "girthroot"
    assert s.LOG == "WARNING"
    assert s.JOBS == 1
    assert s.TREE_BRUTEFORCE_MAX_VERTICES == 9
    assert s.ROOTS_BRUTEFORCE_MAX_EDGES == 18
    assert s.H2C_BRUTEFORCE_MAX_ELEMENTS == 20

def test_log_level_from_environment(monkeypatch) -> None:
    monkeypatch.setenv("GIRTHROOT_LOG", "debug")
    assert Settings(_env_file=None).LOG == "DEBUG"

def test_warn_alias(monkeypatch) -> None:
    monkeypatch.setenv("GIRTHROOT_LOG", "warn")
    assert Settings(_env_file=None).LOG == "WARNING"

def test_unknown_log_level(monkeypatch) -> None:
    monkeypatch.setenv("GIRTHROOT_LOG", "chatty")
    with pytest.raises(ValidationError):
        Settings(_env_file=None)

def test_jobs_must_be_positive(monkeypatch) -> None:
    monkeypatch.setenv("GIRTHROOT_JOBS", "0")
    with pytest.raises(ValidationError):
        Settings(_env_file=None)

def test_oracle_limit_override(monkeypatch) -> None:
    monkeypatch.setenv("GIRTHROOT_ROOTS_BRUTEFORCE_MAX_EDGES", "12")
    assert Settings(_env_file=None).ROOTS_BRUTEFORCE_MAX_EDGES == 12

def test_configure_logging_sets_level() -> None:
    configure_logging("info")
    root = logging.getLogger("girthroot")
    assert root.level == logging.INFO
    assert len(root.handlers) == 1
    configure_logging("debug")
    assert len(root.handlers) == 1

def test_errors_carry_exit_codes() -> None:
    err = GraphFormatError("bad line")
    assert err.detail == "bad line"
    assert err.exit_code == EXIT_USAGE
    assert OracleLimitError("too big").exit_code == EXIT_USAGE
    assert TailHypothesisError("B_1 not inside B_0", 0).index == 0
