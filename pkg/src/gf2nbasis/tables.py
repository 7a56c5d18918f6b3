"""Range scanners for the three parameter tables, CSV emission, golden diffs.

The golden files under gf2nbasis/golden are the reference tables checked
into the repository; regeneration must match them byte-for-byte, and any
difference is reported row by row (missing / extra / changed) rather than
tolerated.  GF2NBASIS_GOLDEN_DIR points lookups at a different directory.
"""
from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .algebraic import enb_embedding_degree
from .errors import FormatError, ParameterError
from .gauss import lowest_type

GNB_SCHEMA = ("n", "k")
ENB_SCHEMA = ("n", "embed")
EXT_SCHEMA = (
    "n",
    "as_d",
    "as_k",
    "witt_d",
    "witt_k",
    "kummer_d",
    "kummer_k",
    "kummer_admissible",
    "enb_embed",
)


@dataclass(frozen=True)
class GnbRow:
    n: int
    k: int

    def cells(self):
        return (str(self.n), str(self.k))


@dataclass(frozen=True)
class EnbRow:
    n: int
    embed: int

    def cells(self):
        return (str(self.n), str(self.embed))


@dataclass(frozen=True)
class ExtRow:
    """One degree without a low-type GNB, with its workaround columns.

    as2/witt4/kummer hold (d, k) when d = n/2, n/4, n/3 is an integer and
    F_{2^d} has a GNB of type k <= kmax; kummer_admissible records whether
    3 | 2^d - 1 (d even) and is reported only alongside a kummer pair.
    """

    n: int
    as2: tuple | None
    witt4: tuple | None
    kummer: tuple | None
    kummer_admissible: bool | None
    enb_embed: int | None

    def cells(self):
        def pair(p):
            return (str(p[0]), str(p[1])) if p else ("", "")

        adm = "" if self.kummer_admissible is None else str(self.kummer_admissible).lower()
        return (
            (str(self.n),)
            + pair(self.as2)
            + pair(self.witt4)
            + pair(self.kummer)
            + (adm, str(self.enb_embed) if self.enb_embed is not None else "")
        )


def _check_range(lo: int, hi: int):
    if not 2 <= lo <= hi:
        raise ParameterError(f"need 2 <= min <= max, got [{lo}, {hi}]")


def _chunks(lo: int, hi: int, parts: int):
    span = hi - lo + 1
    step = max(1, (span + parts - 1) // parts)
    for start in range(lo, hi + 1, step):
        yield start, min(start + step - 1, hi)


def _scan(worker, args, lo, hi, jobs):
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or hi - lo < 32:
        return worker((lo, hi) + args)
    rows = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(worker, [(a, b) + args for a, b in _chunks(lo, hi, 4 * jobs)]):
            rows.extend(part)
    return rows


def _gnb_chunk(args):
    lo, hi, kmax = args
    out = []
    for n in range(lo, hi + 1):
        k = lowest_type(n, kmax)
        if k is not None:
            out.append(GnbRow(n, k))
    return out


def gnb_range(nmin: int, nmax: int, kmax: int = 10, jobs: int = 1) -> list:
    """All n in [nmin, nmax] with a GNB of type <= kmax, ascending."""
    _check_range(nmin, nmax)
    return _scan(_gnb_chunk, (kmax,), nmin, nmax, jobs)


def _enb_chunk(args):
    lo, hi, emax = args
    out = []
    for n in range(lo, hi + 1):
        res = enb_embedding_degree(n, emax) if n >= 4 else None
        if res is not None and res.embed is not None:
            out.append(EnbRow(n, res.embed))
    return out


def enb_range(nmin: int, nmax: int, emax: int = 20, jobs: int = 1) -> list:
    """All n in [nmin, nmax] with an elliptic embedding degree <= emax."""
    _check_range(nmin, nmax)
    if emax > 20:
        raise ParameterError(f"emax={emax} outside [2, 20]")
    return _scan(_enb_chunk, (emax,), nmin, nmax, jobs)


def _divided_type(n: int, dd: int, kmax: int):
    if n % dd:
        return None
    d = n // dd
    if d < 2:
        return None
    k = lowest_type(d, kmax)
    return (d, k) if k is not None else None


def _ext_chunk(args):
    lo, hi, kmax, emax = args
    out = []
    for n in range(lo, hi + 1):
        if lowest_type(n, kmax) is not None:
            continue
        kummer = _divided_type(n, 3, kmax)
        admissible = None if kummer is None else kummer[0] % 2 == 0
        res = enb_embedding_degree(n, emax) if n >= 4 else None
        out.append(
            ExtRow(
                n,
                _divided_type(n, 2, kmax),
                _divided_type(n, 4, kmax),
                kummer,
                admissible,
                res.embed if res is not None else None,
            )
        )
    return out


def ext_range(nmin: int, nmax: int, kmax: int = 10, emax: int = 20, jobs: int = 1) -> list:
    """Workaround columns for every n in range lacking a GNB of type <= kmax."""
    _check_range(nmin, nmax)
    if emax > 20:
        raise ParameterError(f"emax={emax} outside [2, 20]")
    return _scan(_ext_chunk, (kmax, emax), nmin, nmax, jobs)


def kummer_filter(ds: list) -> list:
    """The d with 3 | 2^d - 1, i.e. the even ones (2 has order 2 mod 3)."""
    return [d for d in ds if d % 2 == 0]


# ---------------------------------------------------------------------------
# CSV emission and golden diffs


def rows_to_csv(rows, schema) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(schema)
    for row in rows:
        writer.writerow(row.cells())
    return buf.getvalue()


def emit_csv(rows, schema, path):
    """Write rows under the schema header; path '-' means stdout."""
    text = rows_to_csv(rows, schema)
    if path == "-":
        import sys

        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def golden_dir() -> Path:
    env = os.environ.get("GF2NBASIS_GOLDEN_DIR")
    if env:
        return Path(env)
    return Path(resources.files("gf2nbasis") / "golden")


def resolve_golden(path: str) -> Path:
    """An explicit path if it exists, else a lookup in the golden directory."""
    p = Path(path)
    if p.is_file():
        return p
    for cand in (golden_dir() / path, golden_dir() / p.name):
        if cand.is_file():
            return cand
    raise FormatError(f"golden file not found: {path}")


def _parse_table(text: str, source: str):
    lines = text.splitlines()
    if not lines:
        raise FormatError(f"{source}: empty table")
    reader = csv.reader(lines)
    try:
        header = tuple(next(reader))
    except StopIteration:  # pragma: no cover
        raise FormatError(f"{source}: empty table")
    if not header or header[0] != "n":
        raise FormatError(f"{source}: malformed header {header!r}")
    rows = {}
    width = len(header)
    for cells in reader:
        if not cells:
            continue
        if len(cells) != width:
            raise FormatError(f"{source}: row width {len(cells)} != header width {width}")
        try:
            key = int(cells[0])
        except ValueError:
            raise FormatError(f"{source}: non-integer key {cells[0]!r}")
        if key in rows:
            raise FormatError(f"{source}: duplicate key {key}")
        rows[key] = tuple(cells)
    return header, rows


@dataclass(frozen=True)
class GoldenDiff:
    """Structured regeneration-vs-golden comparison."""

    missing: tuple  # rows in golden only (key, cells)
    extra: tuple  # rows in regenerated only (key, cells)
    changed: tuple  # (key, golden cells, regenerated cells)

    @property
    def ok(self) -> bool:
        return not (self.missing or self.extra or self.changed)

    def report(self) -> str:
        if self.ok:
            return "golden match: no differences"
        lines = [
            f"golden mismatch: {len(self.missing)} missing, "
            f"{len(self.extra)} extra, {len(self.changed)} changed"
        ]
        for key, cells in self.missing:
            lines.append(f"  missing n={key}: {','.join(cells)}")
        for key, cells in self.extra:
            lines.append(f"  extra   n={key}: {','.join(cells)}")
        for key, old, new in self.changed:
            lines.append(f"  changed n={key}: golden {','.join(old)} != {','.join(new)}")
        return "\n".join(lines)


def diff_text_golden(generated_text: str, golden_path) -> GoldenDiff:
    golden_path = Path(golden_path)
    gh, grows = _parse_table(generated_text, "generated")
    try:
        gold_text = golden_path.read_text(encoding="utf-8")
    except OSError as ex:
        raise FormatError(f"cannot read golden file {golden_path}: {ex}")
    hh, hrows = _parse_table(gold_text, str(golden_path))
    if gh != hh:
        raise FormatError(f"schema mismatch: generated {gh!r} vs golden {hh!r}")
    missing = tuple((k, hrows[k]) for k in sorted(hrows.keys() - grows.keys()))
    extra = tuple((k, grows[k]) for k in sorted(grows.keys() - hrows.keys()))
    changed = tuple(
        (k, hrows[k], grows[k]) for k in sorted(grows.keys() & hrows.keys()) if grows[k] != hrows[k]
    )
    return GoldenDiff(missing, extra, changed)


def diff_golden(path, golden_path) -> GoldenDiff:
    """Compare a regenerated table file against a golden file."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as ex:
        raise FormatError(f"cannot read table file {path}: {ex}")
    return diff_text_golden(text, golden_path)
