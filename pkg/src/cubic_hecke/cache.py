"""Checksummed on-disk cache for sieves, Gauss-sum tables and zero lists.

Entries are plain text (CSV or JSON). Each entry has a sidecar holding the
SHA-256 of its content; a mismatch means corruption, and the entry is
dropped and recomputed. Writers hold an exclusive flock on a lock file.
"""

from __future__ import annotations

import fcntl
import hashlib
import json
import os
from contextlib import contextmanager
from pathlib import Path
from typing import Callable

CODE_VERSION = "2"

_override: Path | None = None
_disabled = False


def set_cache_dir(path: str | os.PathLike | None) -> None:
    global _override, _disabled
    if path is None:
        _override, _disabled = None, False
    elif str(path) == "":
        _disabled = True
    else:
        _override, _disabled = Path(path), False


def cache_dir() -> Path | None:
    if _disabled:
        return None
    if _override is not None:
        d = _override
    else:
        d = Path(os.environ.get("CACHE_DIR") or Path.home() / ".cache" / "cubic_hecke")
    d.mkdir(parents=True, exist_ok=True)
    return d


def cache_key(command: str, **params) -> str:
    blob = json.dumps({"cmd": command, "v": CODE_VERSION, **params}, sort_keys=True, default=str)
    return f"{command}-{hashlib.sha256(blob.encode()).hexdigest()[:20]}"


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


@contextmanager
def _locked(d: Path):
    with open(d / ".lock", "a") as fh:
        fcntl.flock(fh, fcntl.LOCK_EX)
        try:
            yield
        finally:
            fcntl.flock(fh, fcntl.LOCK_UN)


def read(key: str) -> str | None:
    d = cache_dir()
    if d is None:
        return None
    body, side = d / f"{key}.txt", d / f"{key}.sha256"
    if not body.exists() or not side.exists():
        return None
    text = body.read_text()
    if side.read_text().strip() != _digest(text):
        body.unlink(missing_ok=True)
        side.unlink(missing_ok=True)
        return None
    return text


def write(key: str, text: str) -> None:
    d = cache_dir()
    if d is None:
        return
    with _locked(d):
        tmp = d / f"{key}.tmp"
        tmp.write_text(text)
        os.replace(tmp, d / f"{key}.txt")
        (d / f"{key}.sha256").write_text(_digest(text))


def cached_text(key: str, build: Callable[[], str]) -> str:
    text = read(key)
    if text is None:
        text = build()
        write(key, text)
    return text
