import pytest

from walkforge.sdk import Config
from walkforge.sdk.config import DEFAULT_PRIME, config_home
from walkforge.sdk.exceptions import ConfigError


def write_ini(home, text):
    home.mkdir(parents=True, exist_ok=True)
    (home / "config.ini").write_text(text)


def test_defaults(walkforge_home):
    config = Config.load()
    assert config == Config()
    assert config.prime == DEFAULT_PRIME
    assert config.retries == 8
    assert config_home() == walkforge_home


def test_file_values(walkforge_home):
    write_ini(walkforge_home, "[engine]\nprime = 1004535809\nrandom_prime = yes\nthreads = 3\nstrassen_threshold = none\n")
    config = Config.load()
    assert config.prime == 1004535809
    assert config.random_prime is True
    assert config.threads == 3
    assert config.strassen_threshold is None


def test_env_overrides_file(walkforge_home, monkeypatch):
    write_ini(walkforge_home, "[engine]\nseed = 4\nfallback = off\n")
    monkeypatch.setenv("WALKFORGE_SEED", "9")
    monkeypatch.setenv("WALKFORGE_FALLBACK", "1")
    config = Config.load()
    assert config.seed == 9
    assert config.fallback is True


@pytest.mark.parametrize("key,value", [
    ("WALKFORGE_PRIME", "abc"),
    ("WALKFORGE_RANDOM_PRIME", "maybe"),
    ("WALKFORGE_RETRIES", "0"),
    ("WALKFORGE_THREADS", "-2"),
    ("WALKFORGE_STRASSEN_THRESHOLD", "1"),
])
def test_invalid_values(monkeypatch, key, value):
    monkeypatch.setenv(key, value)
    with pytest.raises(ConfigError):
        Config.load()


def test_error_names_the_key(monkeypatch):
    monkeypatch.setenv("WALKFORGE_SEED", "x")
    with pytest.raises(ConfigError, match="seed"):
        Config.load()
