"""Knot tables in, result tables out."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from .braid import BraidParseError, BraidWord, parse_braid
from .engine import INVERT_Q, colored_jones
from .errors import DomainError, ResourceLimitError
from .minimize import minimize_walks
from .walks import count_simple_walks, default_jobs

TASKS = ("walks", "minimize", "jones")
RESULT_FIELDS = (
    "name",
    "input_word",
    "minimal_word",
    "sw_count",
    "transform",
    "mirror_flag",
    "color",
    "jones",
    "convention",
    "error",
)


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class KnotRecord:
    name: str
    word: BraidWord
    extra: dict = field(default_factory=dict, compare=False)
    line: int | None = field(default=None, compare=False)

    @property
    def expected_sw(self) -> int | None:
        value = self.extra.get("sw")
        return int(value) if value not in (None, "") else None


class CsvLoad(NamedTuple):
    records: list[KnotRecord]
    errors: list[tuple[int, str]]  # (line number, message)


def _read_rows(handle) -> CsvLoad:
    reader = csv.DictReader(handle)
    if reader.fieldnames is None or not {"name", "braid"} <= set(reader.fieldnames):
        raise CorpusError(f"header must contain 'name,braid'; got {reader.fieldnames}")
    records, errors = [], []
    for row in reader:
        line = reader.line_num
        name = (row.get("name") or "").strip()
        if not name:
            errors.append((line, "empty knot name"))
            continue
        try:
            word = parse_braid(row["braid"] or "")
        except (BraidParseError, ValueError) as exc:
            errors.append((line, f"{name}: {exc}"))
            continue
        extra = {k: v for k, v in row.items() if k not in ("name", "braid") and k is not None}
        records.append(KnotRecord(name, word, extra, line))
    if not records:
        detail = "; ".join(f"line {n}: {msg}" for n, msg in errors)
        raise CorpusError(f"no valid rows ({detail})" if detail else "no rows")
    return CsvLoad(records, errors)


def load_csv(path: str | Path) -> CsvLoad:
    """Read a ``name,braid`` table; bad rows are collected with their line numbers."""
    try:
        with open(path, newline="") as handle:
            return _read_rows(handle)
    except OSError as exc:
        raise CorpusError(f"cannot read {path}: {exc.strerror}") from exc


def load_bundled(table: str) -> CsvLoad:
    """Bundled corpus: ``table4``, ``table1`` or ``section8``."""
    with resources.files("braidwalk.data").joinpath(f"{table}.csv").open(newline="") as handle:
        return _read_rows(handle)


@dataclass
class ResultRecord:
    name: str
    input_word: str
    minimal_word: str = ""
    sw_count: int | None = None
    transform: str = ""
    mirror_flag: bool = False
    color: int | None = None
    jones: str = ""
    convention: str = ""
    error: str = ""


def _convention() -> str:
    return "q->1/q" if INVERT_Q else "raw"


def _run_one(record: KnotRecord, task: str, color: int | None) -> ResultRecord:
    out = ResultRecord(record.name, str(record.word))
    try:
        if task == "walks":
            out.minimal_word = str(record.word)
            out.sw_count = count_simple_walks(record.word, jobs=1)
            out.transform = "identity"
        elif task == "minimize":
            best = minimize_walks(record.word, jobs=1)
            out.minimal_word = str(best.word)
            out.sw_count = best.sw_count
            out.transform = best.describe()
            out.mirror_flag = best.mirror_flag
        else:
            out.minimal_word = str(record.word)
            out.sw_count = count_simple_walks(record.word, jobs=1)
            out.transform = "identity"
            out.color = color
            out.jones = str(colored_jones(record.word, color))
            out.convention = _convention()
    except (DomainError, ResourceLimitError, ValueError) as exc:
        out.error = f"{type(exc).__name__}: {exc}"
    return out


def run_batch(
    records: Sequence[KnotRecord], task: str, jobs: int | None = None, color: int | None = None
) -> list[ResultRecord]:
    """Run ``task`` on every record; output order is input order whatever ``jobs`` is."""
    if task not in TASKS:
        raise ValueError(f"unknown task {task!r}; choose from {TASKS}")
    if task == "jones" and (color is None or color < 2):
        raise ValueError("task jones needs a color N >= 2")
    jobs = default_jobs() if jobs is None else jobs
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            return list(pool.map(lambda r: _run_one(r, task, color), records))
    return [_run_one(r, task, color) for r in records]


def _row(result: ResultRecord) -> dict:
    row = asdict(result)
    return {k: ("" if row[k] is None else row[k]) for k in RESULT_FIELDS}


def results_to_csv(results: Iterable[ResultRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=RESULT_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in results:
        writer.writerow(_row(r))
    return buf.getvalue()


def results_to_json(results: Iterable[ResultRecord]) -> str:
    return json.dumps([asdict(r) for r in results], indent=2) + "\n"


def write_results(results: Sequence[ResultRecord], path: str | Path, fmt: str | None = None) -> None:
    path = Path(path)
    if fmt is None:
        fmt = "json" if path.suffix.lower() == ".json" else "csv"
    text = results_to_json(results) if fmt == "json" else results_to_csv(results)
    path.write_text(text)
