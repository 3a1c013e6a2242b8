"""
On-disk memo for Bruhat comparisons and reduced words.

Each file is an append-only log of records, a 4-byte big-endian length
followed by a compact JSON payload.  Records are appended with one write
call on an O_APPEND descriptor, so concurrent writers only ever duplicate
entries, and duplicates are harmless since every insertion is idempotent.
A truncated final record is ignored on load.
"""

from __future__ import annotations

import json
import os
import struct
from pathlib import Path

from adlv import bruhat, weyl
from adlv.weyl import Element

ENV_VAR = "ADLV_CACHE_DIR"
_HEADER = struct.Struct(">I")


def resolve_dir(cache_dir: str | os.PathLike | None) -> Path | None:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(cache_dir) if cache_dir else None


def _enc(w: Element) -> list:
    return [list(w.perm), list(w.lam)]


def _dec(x) -> Element:
    return Element(tuple(x[0]), tuple(x[1]))


def read_log(path: Path) -> list:
    if not path.exists():
        return []
    data = path.read_bytes()
    out, pos = [], 0
    while pos + _HEADER.size <= len(data):
        (size,) = _HEADER.unpack_from(data, pos)
        start = pos + _HEADER.size
        if start + size > len(data):
            break
        try:
            out.append(json.loads(data[start:start + size]))
        except ValueError:
            break
        pos = start + size
    return out


def append_log(path: Path, payloads: list) -> None:
    if not payloads:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    fd = os.open(path, os.O_WRONLY | os.O_APPEND | os.O_CREAT, 0o644)
    try:
        for p in payloads:
            body = json.dumps(p, separators=(",", ":")).encode()
            os.write(fd, _HEADER.pack(len(body)) + body)
    finally:
        os.close(fd)


class MemoStore:
    """Loads persisted memo entries and appends the ones computed since."""

    def __init__(self, cache_dir: str | os.PathLike | None):
        self.dir = resolve_dir(cache_dir)
        self._known_bruhat: set = set()
        self._known_words: set = set()

    def load(self) -> None:
        if self.dir is None:
            return
        for rec in read_log(self.dir / "bruhat.log"):
            w, v, val = _dec(rec[0]), _dec(rec[1]), bool(rec[2])
            bruhat._BRUHAT.setdefault((w, v), val)
            self._known_bruhat.add((w, v))
        for rec in read_log(self.dir / "words.log"):
            w = _dec(rec[0])
            weyl._REDUCED_WORDS.setdefault(w, tuple(rec[1]))
            self._known_words.add(w)

    def flush(self) -> None:
        if self.dir is None:
            return
        new_b = [k for k in bruhat._BRUHAT if k not in self._known_bruhat]
        append_log(self.dir / "bruhat.log",
                   [[_enc(w), _enc(v), bruhat._BRUHAT[(w, v)]] for w, v in new_b])
        self._known_bruhat.update(new_b)
        new_w = [w for w in weyl._REDUCED_WORDS if w not in self._known_words]
        append_log(self.dir / "words.log",
                   [[_enc(w), list(weyl._REDUCED_WORDS[w])] for w in new_w])
        self._known_words.update(new_w)
