import pytest
from pydantic import ValidationError

from edgeal.cli.config import RunConfig, default_log_level
from edgeal.cli.main import parse_s_range


def test_defaults() -> None:
    """
    Test the default run settings.
    Why: A bare `edgeal verify --exhaustive 4` must run s = 1..2 with a 60 s
    timeout, one job and the rational field.
    """
    config = RunConfig(exhaustive=4)
    assert config.source == "exhaustive"
    assert (config.s_min, config.s_max, config.timeout, config.jobs) == (1, 2, 60.0, 1)
    assert config.characteristic == 0
    assert list(config.sweep_range.values) == [1, 2]


@pytest.mark.parametrize(
    "kwargs",
    [
        {},
        {"exhaustive": 4, "builtin": "C5"},
        {"exhaustive": 9},
        {"exhaustive": 4, "characteristic": 4},
        {"exhaustive": 4, "s_min": 3, "s_max": 2},
        {"exhaustive": 4, "s_max": 6},
        {"exhaustive": 4, "statements": ("nope",)},
        {"exhaustive": 4, "timeout": 0},
        {"exhaustive": 4, "log_level": "LOUD"},
    ],
)
def test_invalid_configs(kwargs: dict[str, object]) -> None:
    """
    Test that inconsistent settings are rejected at validation time.
    Why: Bad settings should fail before any graph is loaded, with a message naming
    the field.
    """
    with pytest.raises(ValidationError):
        RunConfig(**kwargs)  # type: ignore[arg-type]


def test_prime_characteristic_and_log_level() -> None:
    """
    Test accepted characteristics and the log level normalisation.
    Why: Homology over GF(p) needs p prime; log levels are accepted in any case.
    """
    config = RunConfig(exhaustive=3, characteristic=2, log_level="debug")
    assert config.characteristic == 2
    assert config.log_level == "DEBUG"


def test_log_level_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """
    Test EDGEAL_LOG_LEVEL.
    Why: Long sweeps are usually run with DEBUG or WARNING set once in the
    environment.
    """
    monkeypatch.setenv("EDGEAL_LOG_LEVEL", "warning")
    assert default_log_level() == "WARNING"


@pytest.mark.parametrize(
    ("text", "expected"), [("2", (2, 2)), ("1..3", (1, 3)), ("1-3", (1, 3))]
)
def test_parse_s_range(text: str, expected: tuple[int, int]) -> None:
    """
    Test the --s forms.
    Why: Both "1..3" and "1-3" are in use in scripts; a single value means one s.
    """
    assert parse_s_range(text) == expected
