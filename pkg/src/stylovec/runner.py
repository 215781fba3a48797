"""Corpus-level evaluation with optional multiprocess fan-out.

One worker unit = one file: read, parse, evaluate against the pack for
the document's language, optionally write the per-document debug CSV.
Results are re-sorted by document id afterwards, so the output is
byte-identical for any ``jobs`` value.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .conllu import ParseError, list_corpus_files, parse_conllu
from .engine import MetricResult, Registry, StyloVector, evaluate_all
from .output import RunReport, write_debug_csv
from .packs import PackError, registry_for

_REGISTRIES: dict[tuple, Registry] = {}


class RunnerError(ValueError):
    """Unusable run configuration."""


class StrictAbort(RunnerError):
    """First file error under strict mode."""


@dataclass
class RunResult:
    """Vectors grouped by language (each list sorted by doc_id bytes)."""

    vectors: dict[str, list[StyloVector]] = field(default_factory=dict)
    report: RunReport = field(default_factory=lambda: RunReport("", None))

    @property
    def languages(self) -> list[str]:
        return sorted(self.vectors)


def _registry(language: str, categories: tuple[str, ...] | None, metric_ids: tuple[str, ...] | None) -> Registry:
    key = (language, categories, metric_ids)
    reg = _REGISTRIES.get(key)
    if reg is None:
        reg = registry_for(language, categories=categories, metric_ids=metric_ids)
        _REGISTRIES[key] = reg
    return reg


def _strip_captures(vector: StyloVector) -> StyloVector:
    results = tuple(
        MetricResult(r.metric_id, r.value, r.raw_count, (), r.error, r.degenerate)
        for r in vector.results
    )
    return StyloVector(vector.doc_id, vector.metric_ids, results)


def _process_file(args: tuple) -> tuple:
    """Worker body; returns ("ok", language, vector) or ("err", path, message)."""
    path_s, language, categories, metric_ids, debug_dir, keep_captures = args
    path = Path(path_s)
    try:
        payload = path.read_bytes().decode("utf-8")
        doc = parse_conllu(payload, doc_id=path.stem, language=language)
        if doc.language is None:
            raise ParseError("language unknown: pass --lang or add a '# language = xx' comment")
        registry = _registry(doc.language, categories, metric_ids)
        vector = evaluate_all(registry, doc)
        if debug_dir is not None:
            write_debug_csv(vector, doc, Path(debug_dir) / f"{doc.doc_id}.debug.csv")
        if not keep_captures:
            vector = _strip_captures(vector)
        return ("ok", doc.language, vector)
    except (OSError, UnicodeDecodeError, ParseError, PackError) as exc:
        return ("err", path_s, str(exc))


def analyze_corpus(
    input_path: str | Path,
    language: str | None = None,
    categories: tuple[str, ...] | None = None,
    metric_ids: tuple[str, ...] | None = None,
    jobs: int = 1,
    strict: bool = False,
    debug_dir: str | Path | None = None,
    pattern: str = "*.conllu",
    keep_captures: bool = False,
) -> RunResult:
    """Evaluate every corpus file; never raises on per-file data errors unless strict."""
    started = time.monotonic()
    if jobs < 1:
        raise RunnerError(f"jobs must be >= 1, got {jobs}")
    if language is not None:
        # Validate the flag and any metric/category filter up front: a bad
        # run configuration is a usage error, not a per-file failure.
        _registry(language, categories, metric_ids)
    files = list_corpus_files(input_path, pattern)
    if debug_dir is not None:
        Path(debug_dir).mkdir(parents=True, exist_ok=True)
    items = [
        (str(p), language, categories, metric_ids,
         str(debug_dir) if debug_dir is not None else None,
         keep_captures or jobs == 1)
        for p in files
    ]

    result = RunResult(report=RunReport(str(input_path), language))
    if jobs == 1 or len(items) <= 1:
        outcomes = map(_process_file, items)
        _collect(result, outcomes, strict)
    else:
        chunk = max(1, len(items) // (jobs * 4))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = pool.map(_process_file, items, chunksize=chunk)
            _collect(result, outcomes, strict)

    for lang, vectors in result.vectors.items():
        vectors.sort(key=lambda v: v.doc_id.encode("utf-8"))
        result.report.schemas[lang] = vectors[0].schema_hash
    result.report.wall_time = time.monotonic() - started
    return result


def _collect(result: RunResult, outcomes, strict: bool) -> None:
    for outcome in outcomes:
        if outcome[0] == "ok":
            _, lang, vector = outcome
            result.vectors.setdefault(lang, []).append(vector)
            result.report.processed += 1
        else:
            _, path_s, message = outcome
            if strict:
                raise StrictAbort(f"{path_s}: {message}")
            result.report.errors.append((path_s, message))
            result.report.failed += 1
