import pytest

from walkforge.sdk.exceptions import ConfigError
from walkforge.sdk.utils import fnv1a64, parse_int_list, resolve_threads, short_hash, stopwatch


def test_fnv1a64_reference_values():
    assert fnv1a64(b"") == 0xCBF29CE484222325
    assert fnv1a64(b"a") == 0xAF63DC4C8601EC8C


def test_short_hash():
    assert short_hash(b"") == "e3b0c44298fc1c14"


def test_resolve_threads(monkeypatch):
    assert resolve_threads(3) == 3
    monkeypatch.setenv("WALKFORGE_THREADS", "5")
    assert resolve_threads() == 5


@pytest.mark.parametrize("raw", ["lots", "0", "-3"])
def test_resolve_threads_rejects_bad_env(monkeypatch, raw):
    monkeypatch.setenv("WALKFORGE_THREADS", raw)
    with pytest.raises(ConfigError):
        resolve_threads()
    assert resolve_threads(2) == 2


def test_parse_int_list():
    assert parse_int_list("128, 256,512,") == [128, 256, 512]
    with pytest.raises(ValueError):
        parse_int_list("1,x")


def test_stopwatch():
    with stopwatch() as record:
        pass
    assert record["seconds"] >= 0.0
