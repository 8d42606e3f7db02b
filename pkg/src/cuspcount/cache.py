"""Plain-text persistent memo for dimensions and class numbers.

File layout::

    cuspcount-cache v1
    DIM <k> <N> <value>
    NEWDIM <k> <N> <value>
    CLASSNUM <D> <value>

Records are only ever appended. Unparseable lines are skipped with a
warning. The cache is a memo, never an authority: :func:`verify` recomputes
every record.
"""

from __future__ import annotations

import fcntl
import logging
import os
from pathlib import Path

from . import dims, quadratic
from .arith import divisors, mu_bar

HEADER = "cuspcount-cache v1"
ENV_VAR = "CUSPCOUNT_CACHE"

log = logging.getLogger(__name__)

Record = tuple  # ("DIM", k, N, v) | ("NEWDIM", k, N, v) | ("CLASSNUM", D, v)


def default_path() -> Path | None:
    value = os.environ.get(ENV_VAR)
    return Path(value) if value else None


def _parse(line: str) -> Record | None:
    parts = line.split()
    if not parts:
        return None
    try:
        nums = [int(x) for x in parts[1:]]
    except ValueError:
        return None
    if parts[0] in ("DIM", "NEWDIM") and len(nums) == 3 and nums[0] >= 2 and nums[1] >= 1:
        return (parts[0], *nums)
    if parts[0] == "CLASSNUM" and len(nums) == 2 and nums[0] < 0:
        return (parts[0], *nums)
    return None


def read_records(path: Path) -> list[Record]:
    if not path.exists():
        return []
    records = []
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0].strip() != HEADER:
        log.warning("%s: missing or unknown header, ignoring file", path)
        return []
    for lineno, line in enumerate(lines[1:], start=2):
        rec = _parse(line)
        if rec is None:
            if line.strip():
                log.warning("%s:%d: skipping corrupt cache line %r", path, lineno, line)
            continue
        records.append(rec)
    return records


def load(path: Path) -> int:
    """Seed the in-process memos from ``path``; returns the record count."""
    records = read_records(path)
    for rec in records:
        if rec[0] == "CLASSNUM":
            quadratic.seed_class_number(rec[1], rec[2])
        else:
            dims.seed_memo(*rec)
    return len(records)


def current_records() -> list[Record]:
    recs: list[Record] = sorted(dims.memo_items())
    recs += [("CLASSNUM", D, h) for D, h in quadratic.class_number_items()]
    return recs


def _format(rec: Record) -> str:
    return " ".join(str(x) for x in rec)


def save(path: Path) -> int:
    """Append every memo entry not yet in ``path``; returns how many were written."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "a+") as fh:
        fcntl.flock(fh, fcntl.LOCK_EX)
        try:
            fh.seek(0)
            text = fh.read()
            lines = text.splitlines()
            have = {_parse(line) for line in lines[1:]} if lines and lines[0].strip() == HEADER else set()
            if not lines:
                fh.write(HEADER + "\n")
            elif lines[0].strip() != HEADER:
                log.warning("%s: not a cache file, leaving it untouched", path)
                return 0
            elif not text.endswith("\n"):
                fh.write("\n")
            fresh = [rec for rec in current_records() if rec not in have]
            for rec in fresh:
                fh.write(_format(rec) + "\n")
            return len(fresh)
        finally:
            fcntl.flock(fh, fcntl.LOCK_UN)


def verify(path: Path) -> list[tuple[Record, int]]:
    """Recompute every record in ``path``; return (record, fresh value) mismatches.

    Class numbers are recomputed with the form sweep, not the per-discriminant
    search that produced them.
    """
    records = read_records(path)
    largest = max((-rec[1] for rec in records if rec[0] == "CLASSNUM"), default=0)
    sweep = quadratic.class_numbers_by_sweep(largest) if largest else None
    bad = []
    for rec in records:
        if rec[0] == "CLASSNUM":
            fresh = int(sweep[-rec[1]])
        elif rec[0] == "DIM":
            fresh = dims._dim_cusp_closed_form(rec[1], rec[2])
        else:
            fresh = sum(mu_bar(rec[2] // d) * dims._dim_cusp_closed_form(rec[1], d) for d in divisors(rec[2]))
        if fresh != rec[-1]:
            bad.append((rec, fresh))
    return bad
