"""Append-only result cache: newline-delimited JSON records.

Each line is {"key": {...}, "payload": {...}} where the key identifies
(e, f, gamma, delta, p, r, kind) and kind is one of "count", "jacobi",
"zeta".  Payloads hold exact integers and [numerator, denominator] pairs
only, so a cache round-trip reproduces values bit for bit.  Appends take an
exclusive flock; reads take none and skip corrupt or truncated lines with a
warning.
"""

from __future__ import annotations

import json
import os
import sys

try:
    import fcntl
except ImportError:  # non-POSIX; locking becomes a no-op
    fcntl = None

KINDS = ("count", "jacobi", "zeta")


def make_key(curve, p: int, r: int, kind: str) -> dict:
    if kind not in KINDS:
        raise ValueError(f"unknown cache kind {kind!r}")
    return {
        "e": curve.e,
        "f": curve.f,
        "gamma": [curve.gamma.numerator, curve.gamma.denominator],
        "delta": [curve.delta.numerator, curve.delta.denominator],
        "p": p,
        "r": r,
        "kind": kind,
    }


class CacheFile:
    """A cache path; absent file means an empty cache."""

    def __init__(self, path: str):
        self.path = path

    def _records(self):
        try:
            with open(self.path, "r", encoding="utf-8") as fh:
                lines = fh.readlines()
        except FileNotFoundError:
            return
        for lineno, line in enumerate(lines, 1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                key, payload = rec["key"], rec["payload"]
            except (json.JSONDecodeError, KeyError, TypeError):
                print(f"warning: skipping corrupt cache line {lineno} in "
                      f"{self.path}", file=sys.stderr)
                continue
            yield key, payload

    def lookup_all(self, key: dict) -> list[dict]:
        return [payload for k, payload in self._records() if k == key]

    def lookup(self, key: dict) -> dict | None:
        hits = self.lookup_all(key)
        return hits[-1] if hits else None

    def append(self, key: dict, payload: dict) -> None:
        line = json.dumps({"key": key, "payload": payload}, sort_keys=True)
        with open(self.path, "a", encoding="utf-8") as fh:
            if fcntl is not None:
                fcntl.flock(fh.fileno(), fcntl.LOCK_EX)
            try:
                fh.write(line + "\n")
                fh.flush()
                os.fsync(fh.fileno())
            finally:
                if fcntl is not None:
                    fcntl.flock(fh.fileno(), fcntl.LOCK_UN)


def cache_get_or_compute(cache: CacheFile | None, key: dict, compute):
    """Return the cached payload for key, or compute, append, and return it."""
    if cache is None:
        return compute()
    hit = cache.lookup(key)
    if hit is not None:
        return hit
    payload = compute()
    cache.append(key, payload)
    return payload
